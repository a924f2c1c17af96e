#include "sugra47/frame.hpp"

#include "sugra47/errors.hpp"

namespace sugra47 {

namespace {
std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}
}  // namespace

Frame Frame::euclidean(int n) { return pseudo(n, 0); }

Frame Frame::pseudo(int p, int q) {
  if (p < 0 || q < 0) throw structural_error("Frame: negative signature counts");
  std::vector<int> signs;
  signs.reserve(static_cast<std::size_t>(p + q));
  for (int i = 0; i < p; ++i) signs.push_back(1);
  for (int i = 0; i < q; ++i) signs.push_back(-1);
  return with_pattern(std::move(signs));
}

Frame Frame::with_pattern(std::vector<int> signs) {
  Frame f;
  for (int s : signs) {
    if (s == 1) ++f.p_;
    else if (s == -1) ++f.q_;
    else throw structural_error("Frame: signs must be +1 or -1");
  }
  if (signs.size() > 30) throw structural_error("Frame: dimension too large");
  f.signs_ = std::move(signs);
  f.labels_ = default_labels(f.dim());
  return f;
}

void Frame::set_labels(std::vector<std::string> labels) {
  if (labels.size() != signs_.size()) throw structural_error("Frame: label count mismatch");
  labels_ = std::move(labels);
}

FrameVector::FrameVector(Frame fr, std::vector<Scalar> comp)
    : frame(std::move(fr)), components(std::move(comp)) {
  if (components.size() != static_cast<std::size_t>(frame.dim()))
    throw structural_error("FrameVector: component count does not match frame dimension");
}

FrameVector FrameVector::basis(const Frame& fr, int i) {
  if (i < 0 || i >= fr.dim()) throw structural_error("FrameVector: basis index out of range");
  std::vector<Scalar> comp(static_cast<std::size_t>(fr.dim()));
  comp[static_cast<std::size_t>(i)] = Scalar(1);
  return FrameVector(fr, std::move(comp));
}

Scalar vec_inner(const FrameVector& x, const FrameVector& y) {
  if (x.frame != y.frame) throw structural_error("vec_inner: frame mismatch");
  Scalar s(0);
  for (int i = 0; i < x.frame.dim(); ++i) {
    const Scalar& a = x.components[static_cast<std::size_t>(i)];
    const Scalar& b = y.components[static_cast<std::size_t>(i)];
    if (a.is_zero() || b.is_zero()) continue;
    Scalar t = a * b;
    s += x.frame.metric_sign(i) < 0 ? -t : t;
  }
  return s;
}

}  // namespace sugra47
