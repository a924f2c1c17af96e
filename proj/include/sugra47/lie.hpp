#ifndef SUGRA47_LIE_HPP
#define SUGRA47_LIE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sugra47/linalg.hpp"

namespace sugra47 {

/// Structure constants c^k_{ij} of a finite-dimensional real Lie algebra,
/// stored for i < j; antisymmetry is by construction and the Jacobi identity
/// is verified on construction.
class LieAlgebraData {
 public:
  using SparseVec = std::vector<std::pair<int, Scalar>>;

  LieAlgebraData() = default;
  /// triples: (i, j, k, c) meaning [x_i, x_j] = sum_k c^k_{ij} x_k, i < j.
  LieAlgebraData(int dim, std::vector<std::string> labels,
                 const std::vector<std::tuple<int, int, int, Scalar>>& triples);

  static LieAlgebraData abelian(int dim);
  static LieAlgebraData direct_sum(const LieAlgebraData& a, const LieAlgebraData& b);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// [x_i, x_j] as a sparse coordinate vector (any i, j).
  SparseVec bracket_basis(int i, int j) const;
  /// [X, Y] for coordinate vectors.
  std::vector<Scalar> bracket(const std::vector<Scalar>& x,
                              const std::vector<Scalar>& y) const;

  /// ad_X as a dim x dim matrix.
  Mat ad(const std::vector<Scalar>& x) const;

  /// Killing form K(X, Y) = tr(ad_X ad_Y) as a matrix in the basis.
  Mat killing_form() const;

  /// tr(ad_{x_i}) = 0 for all i.
  bool unimodular() const;

  const std::vector<Mat>& matrices() const { return mats_; }
  bool has_matrices() const { return !mats_.empty(); }
  void attach_matrices(std::vector<Mat> mats);

 private:
  void validate_jacobi() const;

  int dim_ = 0;
  std::vector<std::string> labels_;
  std::map<std::pair<int, int>, SparseVec> brackets_;  // keys i < j
  std::vector<Mat> mats_;
};

/// Structure constants of the span of the given matrices under commutator.
/// Errors name the first pair whose commutator leaves the span.
LieAlgebraData lie_from_matrices(const std::vector<Mat>& mats,
                                 std::vector<std::string> labels = {});

/// Basis of {X in g : [X, h] = 0 for all h in the span of h_basis columns}.
Mat centralizer(const LieAlgebraData& g, const Mat& h_basis);

/// Columns are closed under bracket (used to sanity-check centralizers and
/// stabilizers).
bool spans_subalgebra(const LieAlgebraData& g, const Mat& basis);

}  // namespace sugra47

#endif
