#ifndef SUGRA47_MODELS_HPP
#define SUGRA47_MODELS_HPP

#include "sugra47/kform.hpp"
#include "sugra47/lie.hpp"

namespace sugra47 {

/// so(n): basis E_ij - E_ji, i < j.
std::vector<Mat> so_n_matrices(int n);
LieAlgebraData so_n(int n);

/// {A : A^t G + G A = 0} for a symmetric nondegenerate G; equals so(p,q) in
/// suitable coordinates. Returns the matrix basis.
std::vector<Mat> orthogonal_algebra_of_form(const Mat& gram);

/// su(3) realified to 6x6 real matrices; 8 generators, rational entries.
std::vector<Mat> su3_matrices();

/// sp(2) as quaternionic anti-Hermitian 2x2 matrices realified to 8x8;
/// 10 generators.
std::vector<Mat> sp2_matrices();

/// su(2) acting on R^7 = H + R^3 by left quaternion multiplication (V4 + 3R).
std::vector<Mat> su2_v4_matrices();

/// so(3) embedded diagonally as A -> diag(A, A, 0): R^7 = V3 + V3 + R.
std::vector<Mat> so3_33_matrices();

/// Irreducible so(3) action on harmonic polynomials of degree l in 3
/// variables: three (2l+1) x (2l+1) matrices plus a rational invariant Gram.
/// l = 2 gives V5, l = 3 gives V7.
struct HarmonicRep {
  std::vector<Mat> generators;
  Mat gram;
};
HarmonicRep so3_harmonic_rep(int l);

/// diag(rep, 0_pad) acting on R^(dim+pad).
std::vector<Mat> pad_matrices(const std::vector<Mat>& mats, int pad);

/// g = h (semidirect) R^d, h acting on the abelian ideal by the given
/// matrices. Models a flat space with prescribed isotropy.
LieAlgebraData semidirect_flat(const std::vector<Mat>& action);

/// Cross-product matrices of a 3-form: (T_v x)_k = sum over omega(v, x, e_k).
/// For the reference generic form, T_{e_1}..T_{e_7} span the stabilizer
/// complement in so(7) equivariantly, with -tr(T_i T_j)/6 = delta_ij.
std::vector<Mat> cross_product_matrices(const KForm& omega);

}  // namespace sugra47

#endif
