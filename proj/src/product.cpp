#include "sugra47/product.hpp"

#include "sugra47/errors.hpp"

namespace sugra47 {

ProductFrame::ProductFrame(Frame left, Frame right) : left_(std::move(left)), right_(std::move(right)) {
  std::vector<int> pattern = left_.pattern();
  pattern.insert(pattern.end(), right_.pattern().begin(), right_.pattern().end());
  combined_ = Frame::with_pattern(std::move(pattern));
}

ProductFrame ProductFrame::lorentz4_times_euclid7() {
  return lorentz4_times(Frame::euclidean(7));
}

ProductFrame ProductFrame::lorentz4_times(const Frame& right) {
  return ProductFrame(Frame::pseudo(3, 1), right);
}

KForm ProductFrame::lift(const KForm& a, Side side) const {
  const Frame& expect = side == Side::Left ? left_ : right_;
  if (a.frame() != expect) throw structural_error("lift: form not on the named factor");
  int shift = side == Side::Left ? 0 : left_.dim();
  KForm r(combined_, a.degree());
  for (const auto& [m, c] : a.terms()) r.add_term(m << shift, c);
  return r;
}

FrameVector ProductFrame::lift(const FrameVector& x, Side side) const {
  const Frame& expect = side == Side::Left ? left_ : right_;
  if (x.frame != expect) throw structural_error("lift: vector not on the named factor");
  std::vector<Scalar> comp(static_cast<std::size_t>(combined_.dim()));
  int shift = side == Side::Left ? 0 : left_.dim();
  for (int i = 0; i < expect.dim(); ++i)
    comp[static_cast<std::size_t>(i + shift)] = x.components[static_cast<std::size_t>(i)];
  return FrameVector(combined_, std::move(comp));
}

FluxForm::FluxForm(const ProductFrame& pf, Scalar f_value, KForm f7_form)
    : f(std::move(f_value)), f7(std::move(f7_form)) {
  if (f7.frame() != pf.right()) throw structural_error("FluxForm: F7 must live on the right factor");
  if (f7.degree() != 4) throw structural_error("FluxForm: F7 must have degree 4");
}

KForm FluxForm::assembled(const ProductFrame& pf) const {
  KForm vol_left = pf.lift(KForm::volume(pf.left()), Side::Left);
  return vol_left.scaled(f) + pf.lift(f7, Side::Right);
}

FormPair split_star_check(const ProductFrame& pf, const KForm& left_form,
                          const KForm& right_form) {
  KForm lifted = wedge(pf.lift(left_form, Side::Left), pf.lift(right_form, Side::Right));
  KForm direct = hodge(lifted);
  KForm predicted = wedge(pf.lift(hodge(left_form), Side::Left),
                          pf.lift(hodge(right_form), Side::Right));
  int k = left_form.degree();
  int l = right_form.degree();
  int exponent = l * (pf.left().dim() - k);
  if (exponent & 1) predicted = -predicted;
  return {direct, predicted};
}

ScalarPair norm_factorization_check(const ProductFrame& pf, const KForm& left_form,
                                    const KForm& right_form) {
  KForm lifted = wedge(pf.lift(left_form, Side::Left), pf.lift(right_form, Side::Right));
  Scalar lhs = form_inner(lifted, lifted);
  Scalar rhs = form_inner(left_form, left_form) * form_inner(right_form, right_form);
  return {lhs, rhs};
}

FormPair star_flux(const ProductFrame& pf, const FluxForm& fl) {
  KForm direct = hodge(fl.assembled(pf));
  KForm vol_right = pf.lift(KForm::volume(pf.right()), Side::Right);
  KForm vol_left = pf.lift(KForm::volume(pf.left()), Side::Left);
  KForm closed = (-vol_right.scaled(fl.f)) + wedge(vol_left, pf.lift(hodge(fl.f7), Side::Right));
  return {direct, closed};
}

FormPair flux_square(const ProductFrame& pf, const FluxForm& fl) {
  KForm assembled = fl.assembled(pf);
  KForm direct = wedge(assembled, assembled);
  KForm vol_left = pf.lift(KForm::volume(pf.left()), Side::Left);
  KForm closed = wedge(vol_left, pf.lift(fl.f7, Side::Right)).scaled(fl.f * Scalar(2));
  return {direct, closed};
}

ScalarPair flux_norm(const ProductFrame& pf, const FluxForm& fl) {
  KForm assembled = fl.assembled(pf);
  Scalar lhs = form_inner(assembled, assembled);
  Scalar rhs = -(fl.f * fl.f) + form_inner(fl.f7, fl.f7);
  return {lhs, rhs};
}

Scalar stress_rhs(const ProductFrame& pf, const FluxForm& fl, const FrameVector& x,
                  const FrameVector& y) {
  if (x.frame != pf.combined() || y.frame != pf.combined())
    throw structural_error("stress_rhs: vectors must live on the combined frame");
  KForm assembled = fl.assembled(pf);
  Scalar contraction = form_inner(interior(x, assembled), interior(y, assembled));
  Scalar norm2 = form_inner(assembled, assembled);
  return contraction * Scalar(1, 2) - vec_inner(x, y) * norm2 * Scalar(1, 6);
}

}  // namespace sugra47
