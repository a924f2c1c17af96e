#ifndef SUGRA47_SCALAR_HPP
#define SUGRA47_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <string>

#include "sugra47/errors.hpp"

namespace sugra47 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Comparison tolerances used by float-mode checks. Exact mode ignores them.
struct ToleranceConfig {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
};

/// A coefficient that is either an exact rational or a double, with exact
/// arithmetic closed under +,-,*,/ and automatic demotion to float when any
/// operand is float.
class Scalar {
 public:
  Scalar() : exact_(true), q_(0) {}
  Scalar(int n) : exact_(true), q_(n) {}
  Scalar(long long n) : exact_(true), q_(n) {}
  Scalar(const BigInt& n) : exact_(true), q_(n) {}
  Scalar(const Rational& q) : exact_(true), q_(q) {}
  Scalar(Rational&& q) : exact_(true), q_(std::move(q)) {}
  Scalar(int num, int den) : exact_(true), q_(Rational(num, den)) {
    if (den == 0) throw structural_error("Scalar: zero denominator");
  }

  static Scalar of_double(double x) {
    Scalar s;
    s.exact_ = false;
    s.x_ = x;
    return s;
  }

  bool exact() const { return exact_; }

  double value() const { return exact_ ? static_cast<double>(q_) : x_; }

  const Rational& rational() const {
    if (!exact_) throw structural_error("Scalar: rational() on float value");
    return q_;
  }

  bool is_zero() const { return exact_ ? q_.is_zero() : x_ == 0.0; }

  int sign() const {
    if (exact_) return q_.sign();
    return x_ > 0 ? 1 : (x_ < 0 ? -1 : 0);
  }

  Scalar operator-() const {
    if (exact_) return Scalar(Rational(-q_));
    return of_double(-x_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(Rational(a.q_ + b.q_));
    return of_double(a.value() + b.value());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(Rational(a.q_ - b.q_));
    return of_double(a.value() - b.value());
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(Rational(a.q_ * b.q_));
    return of_double(a.value() * b.value());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw structural_error("Scalar: division by zero");
    if (a.exact_ && b.exact_) return Scalar(Rational(a.q_ / b.q_));
    return of_double(a.value() / b.value());
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Exact equality for exact pairs, bitwise double equality otherwise.
  /// Tolerant comparison lives in approx_equal.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return a.q_ == b.q_;
    return a.value() == b.value();
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return a.q_ < b.q_;
    return a.value() < b.value();
  }

  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  /// "p/q", "p", decimal, or scientific notation. Rational strings stay exact.
  static Scalar parse(const std::string& text);

  /// Exact values render as "p" or "p/q"; floats via shortest round-trip.
  std::string str() const;

 private:
  bool exact_;
  Rational q_;
  double x_ = 0.0;
};

inline bool approx_equal(const Scalar& a, const Scalar& b, const ToleranceConfig& tol) {
  if (a.exact() && b.exact()) return a.rational() == b.rational();
  double x = a.value(), y = b.value();
  double d = std::fabs(x - y);
  return d <= tol.abs_tol || d <= tol.rel_tol * std::max(std::fabs(x), std::fabs(y));
}

inline bool approx_zero(const Scalar& a, const ToleranceConfig& tol) {
  if (a.exact()) return a.is_zero();
  return std::fabs(a.value()) <= tol.abs_tol;
}

/// Exact k-th root when the operand is a perfect k-th power of a rational
/// (sign allowed for odd k), nullopt otherwise.
std::optional<Scalar> exact_root(const Scalar& s, unsigned k);

/// Square root; exact when possible, float fallback otherwise.
Scalar scalar_sqrt(const Scalar& s);

/// k-th root with the sign convention of real odd roots; float fallback.
Scalar scalar_root(const Scalar& s, unsigned k);

}  // namespace sugra47

#endif
