#include "sugra47/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace sugra47 {

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows.size() ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw structural_error("Mat: ragged initializer");
    for (const auto& v : r) a_.push_back(v);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw structural_error("Mat: dimension mismatch in product");
  Mat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw structural_error("Mat: shape mismatch");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw structural_error("Mat: shape mismatch");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator-() const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

std::vector<Scalar> Mat::col(std::size_t j) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Scalar> Mat::row(std::size_t i) const {
  std::vector<Scalar> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Mat::set_col(std::size_t j, const std::vector<Scalar>& v) {
  if (v.size() != rows_) throw structural_error("Mat: set_col size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool Mat::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (!(a.a_[i] == b.a_[i])) return false;
  return true;
}

double Mat::max_abs() const {
  double m = 0;
  for (const auto& v : a_) m = std::max(m, std::fabs(v.value()));
  return m;
}

Mat hcat(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw structural_error("hcat: row mismatch");
  Mat r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Mat vcat(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw structural_error("vcat: column mismatch");
  Mat r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

Mat from_columns(const std::vector<std::vector<Scalar>>& cols) {
  if (cols.empty()) return Mat();
  Mat m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

std::vector<Scalar> mat_vec(const Mat& a, const std::vector<Scalar>& x) {
  if (a.cols() != x.size()) throw structural_error("mat_vec: size mismatch");
  std::vector<Scalar> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero() && !x[j].is_zero()) y[i] += a.at(i, j) * x[j];
  return y;
}

namespace {

bool pivot_nonzero(const Scalar& v, const ToleranceConfig& tol) {
  if (v.exact()) return !v.is_zero();
  return std::fabs(v.value()) > tol.abs_tol;
}

}  // namespace

std::vector<std::size_t> rref_in_place(Mat& m, const ToleranceConfig& tol) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    // choose pivot row
    std::size_t best = m.rows();
    double best_abs = 0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      const Scalar& v = m.at(i, c);
      if (!pivot_nonzero(v, tol)) continue;
      if (v.exact()) { best = i; break; }
      double a = std::fabs(v.value());
      if (a > best_abs) { best_abs = a; best = i; }
    }
    if (best == m.rows()) continue;
    if (best != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(best, j));
    Scalar inv = Scalar(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    m.at(r, c) = Scalar(1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Scalar f = m.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
      m.at(i, c) = Scalar(0);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Mat m, const ToleranceConfig& tol) { return rref_in_place(m, tol).size(); }

Mat nullspace(const Mat& m, const ToleranceConfig& tol) {
  Mat r = m;
  auto pivots = rref_in_place(r, tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::size_t free_count = m.cols() - pivots.size();
  Mat ns(m.cols(), free_count);
  std::size_t k = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    ns.at(c, k) = Scalar(1);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) ns.at(pivots[pi], k) = -r.at(pi, c);
    ++k;
  }
  return ns;
}

std::optional<std::vector<Scalar>> solve(const Mat& a, const std::vector<Scalar>& b,
                                         const ToleranceConfig& tol) {
  if (a.rows() != b.size()) throw structural_error("solve: size mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = rref_in_place(aug, tol);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
  std::vector<Scalar> x(a.cols());
  for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(pi, a.cols());
  return x;
}

Mat inverse(const Mat& a, const ToleranceConfig& tol) {
  if (a.rows() != a.cols()) throw structural_error("inverse: not square");
  Mat aug = hcat(a, Mat::identity(a.rows()));
  auto pivots = rref_in_place(aug, tol);
  if (pivots.size() != a.rows()) throw structural_error("inverse: singular matrix");
  Mat inv(a.rows(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) inv.at(i, j) = aug.at(i, a.cols() + j);
  return inv;
}

Scalar det(Mat m, const ToleranceConfig& tol) {
  if (m.rows() != m.cols()) throw structural_error("det: not square");
  Scalar d(1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t best = m.rows();
    for (std::size_t i = c; i < m.rows(); ++i)
      if (pivot_nonzero(m.at(i, c), tol)) { best = i; break; }
    if (best == m.rows()) return Scalar(0);
    if (best != c) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(c, j), m.at(best, j));
      d = -d;
    }
    d *= m.at(c, c);
    Scalar inv = Scalar(1) / m.at(c, c);
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      Scalar f = m.at(i, c) * inv;
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

std::pair<int, int> symmetric_signature(Mat m, const ToleranceConfig& tol) {
  if (m.rows() != m.cols()) throw structural_error("symmetric_signature: not square");
  std::size_t n = m.rows();
  std::vector<bool> done(n, false);
  int p = 0, q = 0;
  for (;;) {
    // diagonal pivot if available
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && pivot_nonzero(m.at(i, i), tol)) { k = i; break; }
    if (k < n) {
      if (m.at(k, k).sign() > 0) ++p; else ++q;
      Scalar inv = Scalar(1) / m.at(k, k);
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i] || i == k) continue;
        Scalar f = m.at(i, k) * inv;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!done[j]) m.at(i, j) -= f * m.at(k, j);
        for (std::size_t j = 0; j < n; ++j)
          if (!done[j]) m.at(j, i) = m.at(i, j);
      }
      done[k] = true;
      continue;
    }
    // hyperbolic pair: zero diagonal but some off-diagonal entry
    std::size_t bi = n, bj = n;
    for (std::size_t i = 0; i < n && bi == n; ++i) {
      if (done[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (!done[j] && pivot_nonzero(m.at(i, j), tol)) { bi = i; bj = j; break; }
    }
    if (bi == n) break;  // remaining block is zero
    // congruence row_i += row_j produces a nonzero diagonal at (i, i)
    for (std::size_t j = 0; j < n; ++j)
      if (!done[j]) m.at(bi, j) += m.at(bj, j);
    for (std::size_t j = 0; j < n; ++j)
      if (!done[j]) m.at(j, bi) = m.at(bi, j);
  }
  return {p, q};
}

namespace {

Eigen::MatrixXd to_eigen(const Mat& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m.at(i, j).value();
  return e;
}

// Best rational approximation with denominator bound, by continued fractions.
std::optional<Rational> rationalize(double x, long long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  double v = x;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 9e17 || fl < -9e17) return std::nullopt;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = v - fl;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  if (q1 == 0) return std::nullopt;
  Rational r(p1, q1);
  if (std::fabs(static_cast<double>(r) - x) > 1e-7 * std::max(1.0, std::fabs(x)))
    return std::nullopt;
  return r;
}

}  // namespace

std::vector<double> real_eigenvalues_f(const Mat& m, const ToleranceConfig& tol) {
  if (m.rows() != m.cols()) throw structural_error("eigenvalues: not square");
  if (m.rows() == 0) return {};
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(m));
  std::vector<double> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    auto ev = es.eigenvalues()[i];
    if (std::fabs(ev.imag()) <= std::max(tol.abs_tol, 1e-9 * std::fabs(ev.real())))
      out.push_back(ev.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Eigenpair> rational_eigenpairs(const Mat& m, bool* complete,
                                           const ToleranceConfig& tol) {
  if (m.rows() != m.cols()) throw structural_error("rational_eigenpairs: not square");
  std::size_t n = m.rows();
  std::vector<Eigenpair> out;
  std::size_t found_dims = 0;
  if (n > 0) {
    bool all_exact = true;
    for (std::size_t i = 0; i < n && all_exact; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!m.at(i, j).exact()) { all_exact = false; break; }

    std::vector<double> cand = real_eigenvalues_f(m, tol);
    std::vector<Scalar> used;
    for (double x : cand) {
      std::optional<Scalar> lambda;
      if (all_exact) {
        auto r = rationalize(x, 1000000);
        if (!r) continue;
        Scalar lam(*r);
        Mat shifted = m - Mat::identity(n).scaled(lam);
        if (!det(shifted, tol).is_zero()) continue;
        lambda = lam;
      } else {
        lambda = Scalar::of_double(x);
      }
      bool dup = false;
      for (const auto& u : used)
        if (approx_equal(u, *lambda, tol)) { dup = true; break; }
      if (dup) continue;
      used.push_back(*lambda);
      Mat shifted = m - Mat::identity(n).scaled(*lambda);
      Mat space = nullspace(shifted, tol);
      if (space.cols() == 0) continue;
      found_dims += space.cols();
      out.push_back({*lambda, space});
    }
  }
  if (complete) *complete = (found_dims == n);
  return out;
}

Mat gram_schmidt(const Mat& basis, const Mat& gram, const ToleranceConfig& tol) {
  Mat out = basis;
  std::size_t k = basis.cols();
  auto form = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    Scalar s(0);
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!gram.at(i, j).is_zero() && !v[j].is_zero()) s += u[i] * gram.at(i, j) * v[j];
    }
    return s;
  };
  for (std::size_t j = 0; j < k; ++j) {
    auto vj = out.col(j);
    for (std::size_t i = 0; i < j; ++i) {
      auto vi = out.col(i);
      Scalar nii = form(vi, vi);
      if (!pivot_nonzero(nii, tol))
        throw structural_error("gram_schmidt: degenerate form on span");
      Scalar c = form(vi, vj) / nii;
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < vj.size(); ++r) vj[r] -= c * vi[r];
    }
    out.set_col(j, vj);
  }
  return out;
}

}  // namespace sugra47
