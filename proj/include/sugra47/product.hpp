#ifndef SUGRA47_PRODUCT_HPP
#define SUGRA47_PRODUCT_HPP

#include "sugra47/exterior.hpp"

namespace sugra47 {

enum class Side { Left, Right };

/// Frame of a metric product: left block first, then right block, with
/// vol_combined = lift(vol_left) ^ lift(vol_right). Defaults model the
/// (3,1) x (7,0) split used throughout.
class ProductFrame {
 public:
  ProductFrame(Frame left, Frame right);

  static ProductFrame lorentz4_times_euclid7();
  static ProductFrame lorentz4_times(const Frame& right);

  const Frame& left() const { return left_; }
  const Frame& right() const { return right_; }
  const Frame& combined() const { return combined_; }

  KForm lift(const KForm& a, Side side) const;
  FrameVector lift(const FrameVector& x, Side side) const;

 private:
  Frame left_, right_, combined_;
};

/// Flux 4-form f * vol_left + F7 with F7 a 4-form on the right factor.
struct FluxForm {
  Scalar f;
  KForm f7;  // degree 4 on the right frame

  FluxForm(const ProductFrame& pf, Scalar f_value, KForm f7_form);
  KForm assembled(const ProductFrame& pf) const;
};

struct FormPair {
  KForm direct;
  KForm predicted;
};

struct ScalarPair {
  Scalar lhs;
  Scalar rhs;
};

/// Star of a lifted wedge, directly on the combined frame and via the
/// factorized prediction star_L(a~) ^ star_R(a) with sign (-1)^(l*(pL - k)).
FormPair split_star_check(const ProductFrame& pf, const KForm& left_form,
                          const KForm& right_form);

/// <a~ ^ a, a~ ^ a> on the combined frame vs the product of factor inner
/// products.
ScalarPair norm_factorization_check(const ProductFrame& pf, const KForm& left_form,
                                    const KForm& right_form);

/// star_11 F vs the closed form -f * vol_right + vol_left ^ star_7 F7.
FormPair star_flux(const ProductFrame& pf, const FluxForm& fl);

/// F ^ F vs the closed form 2 f vol_left ^ F7.
FormPair flux_square(const ProductFrame& pf, const FluxForm& fl);

/// |F|^2 vs -f^2 + |F7|^2.
ScalarPair flux_norm(const ProductFrame& pf, const FluxForm& fl);

/// Right-hand side of the Einstein equation:
/// (1/2) <X . F, Y . F> - (1/6) g(X,Y) |F|^2, on the combined frame.
Scalar stress_rhs(const ProductFrame& pf, const FluxForm& fl, const FrameVector& x,
                  const FrameVector& y);

}  // namespace sugra47

#endif
