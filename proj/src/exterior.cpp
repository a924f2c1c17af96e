#include "sugra47/exterior.hpp"

#include <bit>

#include "sugra47/errors.hpp"

namespace sugra47 {

KForm wedge(const KForm& a, const KForm& b) {
  if (a.frame() != b.frame()) throw structural_error("wedge: frame mismatch");
  int n = a.frame().dim();
  int deg = a.degree() + b.degree();
  if (deg > n) return KForm::zero(a.frame(), n);  // identically zero
  KForm r(a.frame(), deg);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      int s = merge_sign(ma, mb);
      r.add_term(ma | mb, s < 0 ? -(ca * cb) : ca * cb);
    }
  }
  return r;
}

namespace {

// i_{e_i} e^mask, with e_i present: sign (-1)^(position of i in mask).
void basis_interior(KForm& out, int i, Mask mask, const Scalar& coeff) {
  Mask bit = Mask{1} << i;
  if (!(mask & bit)) return;
  int pos = std::popcount(mask & (bit - 1));
  Scalar c = (pos & 1) ? -coeff : coeff;
  out.add_term(mask & ~bit, c);
}

}  // namespace

KForm interior(const FrameVector& x, const KForm& a) {
  if (x.frame != a.frame()) throw structural_error("interior: frame mismatch");
  if (a.degree() < 1)
    throw structural_error("interior: degree-0 form has no interior product");
  KForm r(a.frame(), a.degree() - 1);
  for (int i = 0; i < x.frame.dim(); ++i) {
    const Scalar& xi = x.components[static_cast<std::size_t>(i)];
    if (xi.is_zero()) continue;
    for (const auto& [m, c] : a.terms()) basis_interior(r, i, m, xi * c);
  }
  return r;
}

Scalar form_inner(const KForm& a, const KForm& b) {
  if (a.frame() != b.frame()) throw structural_error("form_inner: frame mismatch");
  if (a.degree() != b.degree()) throw structural_error("form_inner: degree mismatch");
  const Frame& fr = a.frame();
  Scalar s(0);
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  auto ia = ta.begin();
  auto ib = tb.begin();
  while (ia != ta.end() && ib != tb.end()) {
    if (ia->first < ib->first) { ++ia; continue; }
    if (ib->first < ia->first) { ++ib; continue; }
    int u = 0;
    for (int i : mask_indices(ia->first))
      if (fr.metric_sign(i) < 0) ++u;
    Scalar term = ia->second * ib->second;
    s += (u & 1) ? -term : term;
    ++ia;
    ++ib;
  }
  return s;
}

KForm hodge(const KForm& a) {
  const Frame& fr = a.frame();
  int n = fr.dim();
  Mask full = (Mask{1} << n) - 1;
  KForm r(fr, n - a.degree());
  for (const auto& [m, c] : a.terms()) {
    Mask comp = full & ~m;
    int u = 0;
    for (int i : mask_indices(m))
      if (fr.metric_sign(i) < 0) ++u;
    int s = merge_sign(m, comp);
    if (u & 1) s = -s;
    r.add_term(comp, s < 0 ? -c : c);
  }
  return r;
}

KForm hodge_oriented(const KForm& a, int orientation) {
  KForm h = hodge(a);
  return orientation < 0 ? -h : h;
}

KForm endo_action(const Mat& a_matrix, const KForm& a) {
  int n = a.frame().dim();
  if (a_matrix.rows() != static_cast<std::size_t>(n) ||
      a_matrix.cols() != static_cast<std::size_t>(n))
    throw structural_error("endo_action: matrix dimension does not match frame");
  KForm r(a.frame(), a.degree());
  for (const auto& [m, c] : a.terms()) {
    auto idx = mask_indices(m);
    for (std::size_t r_pos = 0; r_pos < idx.size(); ++r_pos) {
      int j = idx[r_pos];
      Mask without = m & ~(Mask{1} << j);
      for (int i = 0; i < n; ++i) {
        const Scalar& aji = a_matrix.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
        if (aji.is_zero()) continue;
        Mask bit = Mask{1} << i;
        if (without & bit) continue;  // repeated covector
        // move the replacement covector from slot r_pos to its sorted slot
        int s_pos = std::popcount(without & (bit - 1));
        int sgn = ((static_cast<int>(r_pos) - s_pos) & 1) ? -1 : 1;
        Scalar coeff = -(aji * c);
        r.add_term(without | bit, sgn < 0 ? -coeff : coeff);
      }
    }
  }
  return r;
}

KForm pullback(const Mat& a_matrix, const KForm& a) {
  int n = a.frame().dim();
  if (a_matrix.rows() != static_cast<std::size_t>(n) ||
      a_matrix.cols() != static_cast<std::size_t>(n))
    throw structural_error("pullback: matrix dimension does not match frame");
  if (a.degree() == 0) return a;
  KForm r(a.frame(), a.degree());
  for (const auto& [m, c] : a.terms()) {
    // product of images of each covector: A* e^j = sum_i A_{ji} e^i
    KForm acc = KForm::one(a.frame()).scaled(c);
    for (int j : mask_indices(m)) {
      KForm img(a.frame(), 1);
      for (int i = 0; i < n; ++i) {
        const Scalar& v = a_matrix.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
        if (!v.is_zero()) img.add_term(Mask{1} << i, v);
      }
      acc = wedge(acc, img);
      if (acc.is_zero()) break;
    }
    r = r + acc;
  }
  return r;
}

ContractionSides contraction_identity(const KForm& a, const FrameVector& x,
                                      const FrameVector& y) {
  if (a.degree() < 1)
    throw structural_error("contraction_identity: requires degree >= 1");
  const Frame& fr = a.frame();
  int n = fr.dim();
  Scalar norm2 = form_inner(a, a);
  Scalar gxy = vec_inner(x, y);
  if (a.degree() == n) {
    Scalar lhs = form_inner(interior(x, a), interior(y, a));
    return {lhs, norm2 * gxy};
  }
  KForm sa = hodge(a);
  Scalar lhs = form_inner(interior(x, sa), interior(y, sa));
  if (fr.timelike() & 1) lhs = -lhs;
  Scalar rhs = norm2 * gxy - form_inner(interior(x, a), interior(y, a));
  return {lhs, rhs};
}

}  // namespace sugra47
