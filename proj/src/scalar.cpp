#include "sugra47/scalar.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>

namespace sugra47 {

Scalar Scalar::parse(const std::string& text) {
  if (text.empty()) throw structural_error("Scalar: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    try {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den.is_zero()) throw structural_error("Scalar: zero denominator in '" + text + "'");
      return Scalar(Rational(num, den));
    } catch (const std::exception&) {
      throw structural_error("Scalar: cannot parse rational '" + text + "'");
    }
  }
  if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
      text.find('E') == std::string::npos) {
    try {
      return Scalar(BigInt(text));
    } catch (const std::exception&) {
      throw structural_error("Scalar: cannot parse integer '" + text + "'");
    }
  }
  char* end = nullptr;
  double x = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0')
    throw structural_error("Scalar: cannot parse number '" + text + "'");
  return Scalar::of_double(x);
}

std::string Scalar::str() const {
  if (exact_) {
    std::string s = boost::multiprecision::numerator(q_).str();
    if (boost::multiprecision::denominator(q_) != 1)
      s += "/" + boost::multiprecision::denominator(q_).str();
    return s;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x_);
  return buf;
}

namespace {

// Integer k-th root if n >= 0 is a perfect k-th power.
std::optional<BigInt> int_root(const BigInt& n, unsigned k) {
  if (n < 0) return std::nullopt;
  if (n.is_zero() || n == 1) return n;
  // Newton iteration seeded from a double estimate.
  double est = std::pow(static_cast<double>(n), 1.0 / k);
  BigInt r(static_cast<long long>(est));
  if (r < 1) r = 1;
  for (int it = 0; it < 200; ++it) {
    BigInt rk = boost::multiprecision::pow(r, k - 1);
    if (rk.is_zero()) { r = 1; continue; }
    BigInt next = ((k - 1) * r * rk + n) / (k * rk);
    if (next == r) break;
    r = next;
  }
  // Adjust to the floor root.
  while (boost::multiprecision::pow(r, k) > n) --r;
  while (boost::multiprecision::pow(r + 1, k) <= n) ++r;
  if (boost::multiprecision::pow(r, k) == n) return r;
  return std::nullopt;
}

}  // namespace

std::optional<Scalar> exact_root(const Scalar& s, unsigned k) {
  if (!s.exact() || k == 0) return std::nullopt;
  const Rational& q = s.rational();
  bool neg = q < 0;
  if (neg && k % 2 == 0) return std::nullopt;
  BigInt num = boost::multiprecision::numerator(q);
  if (neg) num = -num;
  BigInt den = boost::multiprecision::denominator(q);
  auto rn = int_root(num, k);
  auto rd = int_root(den, k);
  if (!rn || !rd) return std::nullopt;
  Rational r(*rn, *rd);
  if (neg) r = -r;
  return Scalar(r);
}

Scalar scalar_sqrt(const Scalar& s) {
  if (s.sign() < 0) throw structural_error("scalar_sqrt: negative operand");
  if (auto r = exact_root(s, 2)) return *r;
  return Scalar::of_double(std::sqrt(s.value()));
}

Scalar scalar_root(const Scalar& s, unsigned k) {
  if (k == 0) throw structural_error("scalar_root: zeroth root");
  if (s.sign() < 0 && k % 2 == 0) throw structural_error("scalar_root: even root of negative");
  if (auto r = exact_root(s, k)) return *r;
  double x = s.value();
  double r = x < 0 ? -std::pow(-x, 1.0 / k) : std::pow(x, 1.0 / k);
  return Scalar::of_double(r);
}

}  // namespace sugra47
