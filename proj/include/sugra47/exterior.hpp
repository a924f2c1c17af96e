#ifndef SUGRA47_EXTERIOR_HPP
#define SUGRA47_EXTERIOR_HPP

#include "sugra47/kform.hpp"
#include "sugra47/linalg.hpp"

namespace sugra47 {

/// Graded-commutative wedge product. Degrees above the frame dimension give
/// the zero form of that formal degree capped at n.
KForm wedge(const KForm& a, const KForm& b);

/// Interior product filling the FIRST slot: (i_X a)(Y, ...) = a(X, Y, ...).
KForm interior(const FrameVector& x, const KForm& a);

/// <a, b> = det(<a_i, b_j>) extended bilinearly; on orthonormal basis k-forms
/// it is (-1)^(number of timelike indices).
Scalar form_inner(const KForm& a, const KForm& b);

/// Hodge star from a ^ star(b) = <a, b> vol.
KForm hodge(const KForm& a);

/// Star with an explicit orientation sign (-1 flips the volume form).
KForm hodge_oriented(const KForm& a, int orientation);

/// Derivation action of gl(n) on forms: (A.a)(X_1..X_k) = -sum_i a(.., A X_i, ..).
/// On covectors A.e^j = -sum_i A_{ji} e^i. Identity acts as -k on degree k.
KForm endo_action(const Mat& a_matrix, const KForm& a);

/// Pull-back by a linear map: (A* a)(X_1..X_k) = a(A X_1, .., A X_k).
KForm pullback(const Mat& a_matrix, const KForm& a);

/// Both sides of the contraction identity
///   (-1)^q <X . star a, Y . star a> = <a,a><X,Y> - <X . a, Y . a>   (1 <= k < n)
/// and its top-degree form <X . a, Y . a> = <a,a><X,Y>               (k = n).
struct ContractionSides {
  Scalar lhs;
  Scalar rhs;
};
ContractionSides contraction_identity(const KForm& a, const FrameVector& x,
                                      const FrameVector& y);

}  // namespace sugra47

#endif
