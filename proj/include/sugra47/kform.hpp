#ifndef SUGRA47_KFORM_HPP
#define SUGRA47_KFORM_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "sugra47/frame.hpp"

namespace sugra47 {

/// A strictly increasing multi-index i1 < ... < ik encoded as a bitmask:
/// bit i set means e^{i+1} participates. Degree = popcount.
using Mask = std::uint32_t;

int mask_degree(Mask m);
std::vector<int> mask_indices(Mask m);          // 0-based ascending
Mask mask_of_indices(const std::vector<int>& idx0);  // throws on repeats

/// Sign of e^A ^ e^B as a multiple of e^{sorted(A u B)}; 0 encoded by the
/// caller checking overlap first.
int merge_sign(Mask a, Mask b);

/// Sparse alternating k-form over a fixed frame. Only strictly increasing
/// multi-indices are stored and zero coefficients are pruned eagerly.
class KForm {
 public:
  KForm() : degree_(0) {}
  KForm(Frame frame, int degree);

  static KForm zero(const Frame& fr, int degree) { return KForm(fr, degree); }
  static KForm one(const Frame& fr);     // the constant 0-form 1
  static KForm volume(const Frame& fr);  // e^{1..n}
  /// Basis k-form from 0-based indices, e.g. {0,1} -> e^{12}.
  static KForm basis(const Frame& fr, std::initializer_list<int> idx0);
  static KForm basis(const Frame& fr, const std::vector<int>& idx0);

  const Frame& frame() const { return frame_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const std::map<Mask, Scalar>& terms() const { return terms_; }
  Scalar coefficient(Mask m) const;

  /// Accumulate c * e^mask (mask degree must match); prunes zeros.
  void add_term(Mask mask, const Scalar& c);

  KForm operator+(const KForm& o) const;
  KForm operator-(const KForm& o) const;
  KForm operator-() const;
  KForm scaled(const Scalar& s) const;

  friend bool operator==(const KForm& a, const KForm& b);

  /// Largest |coefficient| (max-norm used for residuals).
  Scalar max_abs_coefficient() const;

  std::string str() const;

 private:
  Frame frame_;
  int degree_;
  std::map<Mask, Scalar> terms_;
};

bool approx_equal(const KForm& a, const KForm& b, const ToleranceConfig& tol);

}  // namespace sugra47

#endif
