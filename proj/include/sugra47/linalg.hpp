#ifndef SUGRA47_LINALG_HPP
#define SUGRA47_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "sugra47/scalar.hpp"

namespace sugra47 {

/// Dense row-major matrix of Scalars. Sized for this project's solves
/// (nullspaces up to a few hundred rows); exact when its entries are.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Scalar& s) const;

  std::vector<Scalar> col(std::size_t j) const;
  std::vector<Scalar> row(std::size_t i) const;
  void set_col(std::size_t j, const std::vector<Scalar>& v);

  bool is_zero() const;
  friend bool operator==(const Mat& a, const Mat& b);

  /// Max |entry| as double (diagnostic / pivoting aid).
  double max_abs() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);
Mat from_columns(const std::vector<std::vector<Scalar>>& cols);

std::vector<Scalar> mat_vec(const Mat& a, const std::vector<Scalar>& x);

/// Reduced row echelon form in place; returns pivot column indices.
/// Exact entries pivot on the first nonzero, float entries on the largest.
std::vector<std::size_t> rref_in_place(Mat& m, const ToleranceConfig& tol = {});

std::size_t rank(Mat m, const ToleranceConfig& tol = {});

/// Columns span the right nullspace of m.
Mat nullspace(const Mat& m, const ToleranceConfig& tol = {});

/// One solution of A x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Mat& a, const std::vector<Scalar>& b,
                                         const ToleranceConfig& tol = {});

Mat inverse(const Mat& a, const ToleranceConfig& tol = {});

Scalar det(Mat m, const ToleranceConfig& tol = {});

/// Signature (p, q) of a symmetric matrix by congruence diagonalization.
/// Exact for exact entries; float entries compare against tol.abs_tol.
std::pair<int, int> symmetric_signature(Mat m, const ToleranceConfig& tol = {});

struct Eigenpair {
  Scalar value;
  Mat vectors;  // columns span the eigenspace
};

/// All eigenvalues of a square matrix that are exactly rational, with their
/// eigenspaces. `complete` is set when the geometric multiplicities sum to n.
/// Exact path: float eigenvalues seed rational candidates that are then
/// verified by det(M - lambda I) == 0, so every returned pair is certified.
std::vector<Eigenpair> rational_eigenpairs(const Mat& m, bool* complete = nullptr,
                                           const ToleranceConfig& tol = {});

/// Float eigenvalues (real parts with imaginary magnitude below tol count as
/// real) of an arbitrary square matrix, via Eigen.
std::vector<double> real_eigenvalues_f(const Mat& m, const ToleranceConfig& tol = {});

/// Gram-Schmidt against a symmetric positive bilinear form G (in the ambient
/// coordinates): returns columns spanning the same space, pairwise
/// G-orthogonal, exact. No normalization.
Mat gram_schmidt(const Mat& basis, const Mat& gram, const ToleranceConfig& tol = {});

}  // namespace sugra47

#endif
