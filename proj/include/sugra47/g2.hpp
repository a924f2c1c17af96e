#ifndef SUGRA47_G2_HPP
#define SUGRA47_G2_HPP

#include <vector>

#include "sugra47/exterior.hpp"

namespace sugra47 {

enum class OrbitTag { GenericG2, GenericG2Star, Degenerate };

const char* orbit_tag_name(OrbitTag tag);

struct OrbitClass {
  OrbitTag tag = OrbitTag::Degenerate;
  Scalar det_b;
  int sig_p = 0, sig_q = 0;        // signature of the normalized form g
  int sig_b_p = 0, sig_b_q = 0;    // signature of the density form B itself
  bool near_zero_warning = false;  // float mode: |det| under tolerance
};

/// The reference generic 3-form
///   e^127 + e^347 + e^567 + e^135 - e^245 - e^146 - e^236
/// on a Euclidean 7-frame.
KForm canonical_g2_form(const Frame& frame);

/// B_ij = vol-coefficient of -(1/6) (e_i . w) ^ (e_j . w) ^ w. Symmetric,
/// cubic in w; equals the identity for the canonical form.
Mat induced_bilinear(const KForm& omega);

struct InducedMetric {
  Mat b;
  Scalar det_b;
  Mat g;            // (det B)^(-1/9) B when det B != 0
  bool exact_root;  // ninth root stayed rational
};

/// Normalized metric from a nondegenerate 3-form; throws on det B = 0.
InducedMetric induced_metric(const KForm& omega, const ToleranceConfig& tol = {});

/// Orbit of a 3-form on a 7-frame: definite normalized form -> GenericG2,
/// split signature -> GenericG2Star, det B = 0 -> Degenerate.
OrbitClass classify(const KForm& omega, const ToleranceConfig& tol = {});

/// Basis of {A in gl7 : A . omega = 0} (the derivation action annihilator).
std::vector<Mat> stabilizer_algebra(const KForm& omega);

/// Same system restricted to antisymmetric matrices.
std::vector<Mat> stabilizer_algebra_skew(const KForm& omega);

/// Max over basis pairs of |<e_i . w, e_j . w> - 3 delta_ij| for a generic w
/// whose induced bilinear form is the identity (so the frame is orthonormal
/// for the metric w induces and |w|^2 = 7).
Scalar contraction_3g_residual(const KForm& omega, const ToleranceConfig& tol = {});

}  // namespace sugra47

#endif
