#ifndef SUGRA47_SCENARIOS_HPP
#define SUGRA47_SCENARIOS_HPP

#include <array>

#include "sugra47/dga.hpp"
#include "sugra47/sugra.hpp"

namespace sugra47 {

/// Structure equations of (SU3/U2) x SU2 on the coframe
/// a1..a4 (coset of CP^2), b1..b3 (S^3), g1..g4 (u2 connection).
CoframeDGA cp2s3_structure_equations();

inline const std::vector<std::string>& cp2s3_vertical() {
  static const std::vector<std::string> v = {"g1", "g2", "g3", "g4"};
  return v;
}

/// The coset space with invariant metric a * sum alpha^i x alpha^i on the
/// CP^2 block and diag(c1, c2, c3) on the S^3 block, orthonormalized.
ReductiveSpace cp2s3_space(const Scalar& a, const Scalar& c1, const Scalar& c2,
                           const Scalar& c3);

/// Kahler 2-form and the S^3 volume in the orthonormal coframe.
KForm cp2s3_kahler(const ReductiveSpace& space);
KForm cp2s3_vol3(const ReductiveSpace& space);

/// su2 + R^4 with d w^a = w^b ^ w^g; lambda signs flip coframe axes of the
/// su2 block (the metric itself is the identity).
ReductiveSpace s3t4_space(const std::array<int, 3>& lambda_signs);

/// sigma = rho^1 ^ rho^2 +- rho^3 ^ rho^4 on the torus block (self- or
/// anti-self-dual for the standard orientation).
KForm s3t4_sigma(const ReductiveSpace& space, bool self_dual);

/// First su2 coframe axis wedged with sigma.
KForm s3t4_phi(const ReductiveSpace& space, bool self_dual);

/// so7 / g2 with the stabilizer of the reference 3-form as isotropy and the
/// cross-product image of R^7 as the (Killing-orthogonal) complement; the
/// -tr/6 metric makes that basis orthonormal. Fully rational.
ReductiveSpace so7_g2_space();

/// Flat 7-torus.
ReductiveSpace torus7_space();

/// Q^3 x P^4 with Einstein constants -1/6 and 1/3: hyperbolic 3-space as
/// SO(3,1)/SO(3) (curvature data only) and the round S^4 = SO5/SO4, scaled.
/// The hyperbolic rescale is irrational, so the space carries float data.
ReductiveSpace example215_space();

/// Glue two spaces into the product G1 x G2 / H1 x H2 with the block metric.
ReductiveSpace product_space(const ReductiveSpace& a, const ReductiveSpace& b);

}  // namespace sugra47

#endif
