#include "sugra47/dga.hpp"

#include <algorithm>

#include "sugra47/errors.hpp"

namespace sugra47 {

CoframeDGA::CoframeDGA(std::vector<std::string> generator_names, std::vector<KForm> d_of_generators)
    : names_(std::move(generator_names)), d_gen_(std::move(d_of_generators)) {
  int n = static_cast<int>(names_.size());
  if (d_gen_.size() != names_.size())
    throw structural_error("CoframeDGA: need d of every generator");
  frame_ = Frame::euclidean(n);
  frame_.set_labels(names_);
  for (const auto& f : d_gen_) {
    if (f.degree() != 2) throw structural_error("CoframeDGA: d of a generator must be a 2-form");
    if (f.frame() != frame_) throw structural_error("CoframeDGA: generator differential on wrong frame");
  }
  validate_d2();
}

int CoframeDGA::generator_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw structural_error("CoframeDGA: unknown generator '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

KForm CoframeDGA::d(const KForm& a) const {
  if (a.frame() != frame_) throw structural_error("CoframeDGA::d: form on wrong frame");
  int n = frame_.dim();
  int out_deg = a.degree() + 1;
  if (out_deg > n) return KForm::zero(frame_, n);
  KForm out(frame_, out_deg);
  for (const auto& [mask, coeff] : a.terms()) {
    auto idx = mask_indices(mask);
    for (std::size_t r = 0; r < idx.size(); ++r) {
      Mask rest = mask & ~(Mask{1} << idx[r]);
      int outer_sign = (r & 1) ? -1 : 1;
      for (const auto& [dm, dc] : d_gen_[static_cast<std::size_t>(idx[r])].terms()) {
        if (dm & rest) continue;
        int s = merge_sign(dm, rest) * outer_sign;
        Scalar v = dc * coeff;
        out.add_term(dm | rest, s < 0 ? -v : v);
      }
    }
  }
  return out;
}

void CoframeDGA::validate_d2() const {
  for (int i = 0; i < frame_.dim(); ++i) {
    KForm dd = d(d_gen_[static_cast<std::size_t>(i)]);
    if (!dd.is_zero())
      throw structural_error("CoframeDGA: d^2 != 0 on generator '" +
                             names_[static_cast<std::size_t>(i)] + "'");
  }
}

CoframeDGA CoframeDGA::rescaled(const std::vector<Scalar>& factors) const {
  std::size_t n = static_cast<std::size_t>(frame_.dim());
  if (factors.size() != n) throw structural_error("CoframeDGA::rescaled: factor count mismatch");
  for (const auto& f : factors)
    if (f.is_zero()) throw structural_error("CoframeDGA::rescaled: zero factor");
  std::vector<KForm> new_d;
  for (std::size_t k = 0; k < n; ++k) {
    KForm f(frame_, 2);
    for (const auto& [mask, c] : d_gen_[k].terms()) {
      auto ij = mask_indices(mask);
      Scalar scale = factors[k] / (factors[static_cast<std::size_t>(ij[0])] *
                                   factors[static_cast<std::size_t>(ij[1])]);
      f.add_term(mask, c * scale);
    }
    new_d.push_back(f);
  }
  return CoframeDGA(names_, std::move(new_d));
}

CoframeDGA CoframeDGA::rescaled_root(const std::vector<Scalar>& squares,
                                     const std::vector<int>& signs) const {
  std::size_t n = static_cast<std::size_t>(frame_.dim());
  if (squares.size() != n)
    throw structural_error("CoframeDGA::rescaled_root: factor count mismatch");
  if (!signs.empty() && signs.size() != n)
    throw structural_error("CoframeDGA::rescaled_root: sign count mismatch");
  for (const auto& s : squares)
    if (s.sign() <= 0) throw structural_error("CoframeDGA::rescaled_root: squares must be positive");
  auto sign_of = [&](std::size_t i) { return signs.empty() ? 1 : signs[i]; };
  std::vector<KForm> new_d;
  for (std::size_t k = 0; k < n; ++k) {
    KForm f(frame_, 2);
    for (const auto& [mask, c] : d_gen_[k].terms()) {
      auto ij = mask_indices(mask);
      std::size_t i = static_cast<std::size_t>(ij[0]), j = static_cast<std::size_t>(ij[1]);
      Scalar ratio = scalar_sqrt(squares[k] / (squares[i] * squares[j]));
      int sg = sign_of(k) * sign_of(i) * sign_of(j);
      f.add_term(mask, c * ratio * Scalar(sg));
    }
    new_d.push_back(f);
  }
  return CoframeDGA(names_, std::move(new_d));
}

LieAlgebraData lie_algebra_from_dga(const CoframeDGA& dga) {
  int n = dga.generators();
  std::vector<std::tuple<int, int, int, Scalar>> triples;
  for (int k = 0; k < n; ++k)
    for (const auto& [mask, c] : dga.d_generator(k).terms()) {
      auto ij = mask_indices(mask);
      triples.emplace_back(ij[0], ij[1], k, -c);
    }
  return LieAlgebraData(n, dga.names(), triples);
}

namespace {

std::vector<int> vertical_indices(const CoframeDGA& dga,
                                  const std::vector<std::string>& vertical_names) {
  std::vector<int> v;
  for (const auto& name : vertical_names) v.push_back(dga.generator_index(name));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

ReductiveSpace reductive_space_from_dga(const CoframeDGA& dga,
                                        const std::vector<std::string>& vertical_names) {
  LieAlgebraData g = lie_algebra_from_dga(dga);
  std::size_t n = static_cast<std::size_t>(g.dim());
  auto vert = vertical_indices(dga, vertical_names);
  Mat h(n, vert.size());
  for (std::size_t a = 0; a < vert.size(); ++a)
    h.at(static_cast<std::size_t>(vert[a]), a) = Scalar(1);
  Mat m(n, n - vert.size());
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::binary_search(vert.begin(), vert.end(), static_cast<int>(i))) continue;
    m.at(i, c++) = Scalar(1);
  }
  return make_reductive(g, h, m);
}

std::vector<KForm> invariant_horizontal_forms(const CoframeDGA& dga,
                                              const std::vector<std::string>& vertical_names,
                                              int k) {
  auto vert = vertical_indices(dga, vertical_names);
  Mask vmask = 0;
  for (int v : vert) vmask |= Mask{1} << v;
  const Frame& fr = dga.frame();
  std::vector<Mask> hmasks;
  for (Mask m = 0; m < (Mask{1} << fr.dim()); ++m)
    if (mask_degree(m) == k && !(m & vmask)) hmasks.push_back(m);
  // invariance: every (k+1)-term of d(phi) containing a vertical index dies
  std::vector<Mask> bad;
  for (Mask m = 0; m < (Mask{1} << fr.dim()); ++m)
    if (mask_degree(m) == k + 1 && (m & vmask)) bad.push_back(m);
  Mat sys(bad.size(), hmasks.size());
  for (std::size_t c = 0; c < hmasks.size(); ++c) {
    KForm f(fr, k);
    f.add_term(hmasks[c], Scalar(1));
    KForm df = dga.d(f);
    for (std::size_t r = 0; r < bad.size(); ++r) sys.at(r, c) = df.coefficient(bad[r]);
  }
  Mat ns = nullspace(sys);
  std::vector<KForm> out;
  for (std::size_t c = 0; c < ns.cols(); ++c) {
    KForm f(fr, k);
    for (std::size_t r = 0; r < hmasks.size(); ++r) f.add_term(hmasks[r], ns.at(r, c));
    out.push_back(f);
  }
  return out;
}

KForm restrict_to_horizontal(const CoframeDGA& dga,
                             const std::vector<std::string>& vertical_names, const KForm& a) {
  auto vert = vertical_indices(dga, vertical_names);
  Mask vmask = 0;
  for (int v : vert) vmask |= Mask{1} << v;
  int dm = dga.generators() - static_cast<int>(vert.size());
  // map horizontal generator positions to 0..dm-1 in declaration order
  std::vector<int> newpos(static_cast<std::size_t>(dga.generators()), -1);
  int c = 0;
  for (int i = 0; i < dga.generators(); ++i)
    if (!(vmask & (Mask{1} << i))) newpos[static_cast<std::size_t>(i)] = c++;
  Frame target = Frame::euclidean(dm);
  KForm out(target, a.degree());
  for (const auto& [mask, coeff] : a.terms()) {
    if (mask & vmask)
      throw structural_error("restrict_to_horizontal: form has vertical components");
    Mask nm = 0;
    for (int i : mask_indices(mask)) nm |= Mask{1} << newpos[static_cast<std::size_t>(i)];
    out.add_term(nm, coeff);
  }
  return out;
}

}  // namespace sugra47
