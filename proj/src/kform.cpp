#include "sugra47/kform.hpp"

#include <bit>

#include "sugra47/errors.hpp"

namespace sugra47 {

int mask_degree(Mask m) { return std::popcount(m); }

std::vector<int> mask_indices(Mask m) {
  std::vector<int> idx;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) idx.push_back(i);
  return idx;
}

Mask mask_of_indices(const std::vector<int>& idx0) {
  Mask m = 0;
  for (int i : idx0) {
    if (i < 0 || i >= 30) throw structural_error("mask: index out of range");
    Mask bit = Mask{1} << i;
    if (m & bit) throw structural_error("mask: repeated index");
    m |= bit;
  }
  return m;
}

int merge_sign(Mask a, Mask b) {
  // parity of the number of pairs (i in a, j in b) with i > j
  int inversions = 0;
  Mask bb = b;
  while (bb) {
    int j = std::countr_zero(bb);
    bb &= bb - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

KForm::KForm(Frame frame, int degree) : frame_(std::move(frame)), degree_(degree) {
  if (degree < 0 || degree > frame_.dim())
    throw structural_error("KForm: degree out of range for frame");
}

KForm KForm::one(const Frame& fr) {
  KForm f(fr, 0);
  f.add_term(0, Scalar(1));
  return f;
}

KForm KForm::volume(const Frame& fr) {
  KForm f(fr, fr.dim());
  f.add_term((Mask{1} << fr.dim()) - 1, Scalar(1));
  return f;
}

KForm KForm::basis(const Frame& fr, std::initializer_list<int> idx0) {
  return basis(fr, std::vector<int>(idx0));
}

KForm KForm::basis(const Frame& fr, const std::vector<int>& idx0) {
  for (int i : idx0)
    if (i < 0 || i >= fr.dim()) throw structural_error("KForm::basis: index out of range");
  KForm f(fr, static_cast<int>(idx0.size()));
  f.add_term(mask_of_indices(idx0), Scalar(1));
  return f;
}

Scalar KForm::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void KForm::add_term(Mask mask, const Scalar& c) {
  if (mask_degree(mask) != degree_) throw structural_error("KForm: mask degree mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

KForm KForm::operator+(const KForm& o) const {
  if (frame_ != o.frame_) throw structural_error("KForm: frame mismatch in sum");
  if (degree_ != o.degree_) throw structural_error("KForm: degree mismatch in sum");
  KForm r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

KForm KForm::operator-(const KForm& o) const { return *this + (-o); }

KForm KForm::operator-() const {
  KForm r(frame_, degree_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

KForm KForm::scaled(const Scalar& s) const {
  KForm r(frame_, degree_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) {
    Scalar v = c * s;
    if (!v.is_zero()) r.terms_.emplace(m, v);
  }
  return r;
}

bool operator==(const KForm& a, const KForm& b) {
  return a.frame_ == b.frame_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

Scalar KForm::max_abs_coefficient() const {
  Scalar best(0);
  for (const auto& [m, c] : terms_) {
    Scalar a = c.abs();
    if (best < a) best = a;
  }
  return best;
}

std::string KForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.str() + ")";
    if (m != 0) {
      out += "*e^{";
      for (int i : mask_indices(m)) out += std::to_string(i + 1);
      out += "}";
    }
  }
  return out;
}

bool approx_equal(const KForm& a, const KForm& b, const ToleranceConfig& tol) {
  if (a.frame() != b.frame() || a.degree() != b.degree()) return false;
  return approx_zero((a - b).max_abs_coefficient(), tol);
}

}  // namespace sugra47
