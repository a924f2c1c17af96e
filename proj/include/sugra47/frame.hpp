#ifndef SUGRA47_FRAME_HPP
#define SUGRA47_FRAME_HPP

#include <string>
#include <vector>

#include "sugra47/scalar.hpp"

namespace sugra47 {

/// An oriented pseudo-orthonormal coframe e^1..e^n. Each axis carries a metric
/// sign; the volume form is e^1 ^ ... ^ e^n. The standard constructors place
/// spacelike axes first; product frames concatenate blocks, so the sign
/// pattern is stored explicitly.
class Frame {
 public:
  Frame() = default;

  static Frame euclidean(int n);
  /// p spacelike axes then q timelike axes.
  static Frame pseudo(int p, int q);
  static Frame with_pattern(std::vector<int> signs);

  int dim() const { return static_cast<int>(signs_.size()); }
  int spacelike() const { return p_; }
  int timelike() const { return q_; }

  /// +1 or -1 for <e_i, e_i>, i in [0, n).
  int metric_sign(int i) const { return signs_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& pattern() const { return signs_; }

  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const Frame& a, const Frame& b) { return a.signs_ == b.signs_; }
  friend bool operator!=(const Frame& a, const Frame& b) { return !(a == b); }

 private:
  std::vector<int> signs_;
  std::vector<std::string> labels_;
  int p_ = 0, q_ = 0;
};

/// A tangent vector expressed in the frame basis e_1..e_n.
struct FrameVector {
  Frame frame;
  std::vector<Scalar> components;

  FrameVector() = default;
  FrameVector(Frame fr, std::vector<Scalar> comp);
  static FrameVector basis(const Frame& fr, int i);
};

/// <X, Y> with the frame's signature.
Scalar vec_inner(const FrameVector& x, const FrameVector& y);

}  // namespace sugra47

#endif
