#include "sugra47/g2.hpp"

#include <cmath>

#include "sugra47/errors.hpp"

namespace sugra47 {

const char* orbit_tag_name(OrbitTag tag) {
  switch (tag) {
    case OrbitTag::GenericG2: return "GenericG2";
    case OrbitTag::GenericG2Star: return "GenericG2Star";
    case OrbitTag::Degenerate: return "Degenerate";
  }
  return "?";
}

namespace {

void require_seven(const KForm& omega, const char* who) {
  if (omega.frame().dim() != 7)
    throw structural_error(std::string(who) + ": expects a 7-dimensional frame");
  if (omega.degree() != 3)
    throw structural_error(std::string(who) + ": expects a 3-form");
}

}  // namespace

KForm canonical_g2_form(const Frame& frame) {
  if (frame.dim() != 7 || frame.timelike() != 0)
    throw structural_error("canonical_g2_form: expects a Euclidean 7-frame");
  KForm w(frame, 3);
  auto put = [&](int i, int j, int k, int sign) {
    w.add_term(mask_of_indices({i - 1, j - 1, k - 1}), Scalar(sign));
  };
  put(1, 2, 7, 1);
  put(3, 4, 7, 1);
  put(5, 6, 7, 1);
  put(1, 3, 5, 1);
  put(2, 4, 5, -1);
  put(1, 4, 6, -1);
  put(2, 3, 6, -1);
  return w;
}

Mat induced_bilinear(const KForm& omega) {
  require_seven(omega, "induced_bilinear");
  const Frame& fr = omega.frame();
  Mask full = (Mask{1} << 7) - 1;
  Mat b(7, 7);
  for (int i = 0; i < 7; ++i) {
    KForm wi = interior(FrameVector::basis(fr, i), omega);
    for (int j = i; j < 7; ++j) {
      KForm wj = interior(FrameVector::basis(fr, j), omega);
      KForm triple = wedge(wedge(wi, wj), omega);
      // Sign fixed so the reference form induces the identity; with first-slot
      // contraction and vol = e^{1..7} that is the + convention.
      Scalar v = triple.coefficient(full) * Scalar(1, 6);
      b.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
      b.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v;
    }
  }
  return b;
}

InducedMetric induced_metric(const KForm& omega, const ToleranceConfig& tol) {
  Mat b = induced_bilinear(omega);
  Scalar d = det(b, tol);
  if (approx_zero(d, tol)) throw precondition_error("induced_metric: det B = 0");
  InducedMetric im;
  im.b = b;
  im.det_b = d;
  Scalar root = scalar_root(d, 9);
  im.exact_root = root.exact();
  im.g = b.scaled(Scalar(1) / root);
  return im;
}

OrbitClass classify(const KForm& omega, const ToleranceConfig& tol) {
  require_seven(omega, "classify");
  Mat b = induced_bilinear(omega);
  OrbitClass oc;
  oc.det_b = det(b, tol);
  if (oc.det_b.is_zero()) {
    oc.tag = OrbitTag::Degenerate;
    return oc;
  }
  if (!oc.det_b.exact() && std::fabs(oc.det_b.value()) <= tol.abs_tol) {
    oc.tag = OrbitTag::Degenerate;
    oc.near_zero_warning = true;
    return oc;
  }
  auto [p, q] = symmetric_signature(b, tol);
  oc.sig_b_p = p;
  oc.sig_b_q = q;
  // g = (det B)^(-1/9) B flips the signature when det B < 0
  if (oc.det_b.sign() < 0) std::swap(p, q);
  oc.sig_p = p;
  oc.sig_q = q;
  if (p == 7 && q == 0) {
    oc.tag = OrbitTag::GenericG2;
  } else if ((p == 4 && q == 3) || (p == 3 && q == 4)) {
    oc.tag = OrbitTag::GenericG2Star;
  } else {
    throw structural_error("classify: nondegenerate 3-form with unexpected signature (" +
                           std::to_string(p) + "," + std::to_string(q) + ")");
  }
  return oc;
}

namespace {

std::vector<Mat> stabilizer_common(const KForm& omega, bool skew_only) {
  require_seven(omega, "stabilizer_algebra");
  // unknowns: entries of A (or the 21 entries above the diagonal when skew)
  std::vector<Mat> gens;
  if (skew_only) {
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j) {
        Mat e(7, 7);
        e.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Scalar(1);
        e.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = Scalar(-1);
        gens.push_back(e);
      }
  } else {
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        Mat e(7, 7);
        e.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Scalar(1);
        gens.push_back(e);
      }
  }
  // rows: coefficients of all 3-form basis elements
  std::vector<Mask> masks;
  for (Mask m = 0; m < (Mask{1} << 7); ++m)
    if (mask_degree(m) == 3) masks.push_back(m);
  Mat sys(masks.size(), gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c) {
    KForm acted = endo_action(gens[c], omega);
    for (std::size_t r = 0; r < masks.size(); ++r)
      sys.at(r, c) = acted.coefficient(masks[r]);
  }
  Mat ns = nullspace(sys);
  std::vector<Mat> basis;
  for (std::size_t k = 0; k < ns.cols(); ++k) {
    Mat a(7, 7);
    for (std::size_t c = 0; c < gens.size(); ++c) {
      const Scalar& coeff = ns.at(c, k);
      if (coeff.is_zero()) continue;
      a = a + gens[c].scaled(coeff);
    }
    basis.push_back(a);
  }
  return basis;
}

}  // namespace

std::vector<Mat> stabilizer_algebra(const KForm& omega) {
  return stabilizer_common(omega, false);
}

std::vector<Mat> stabilizer_algebra_skew(const KForm& omega) {
  return stabilizer_common(omega, true);
}

Scalar contraction_3g_residual(const KForm& omega, const ToleranceConfig& tol) {
  OrbitClass oc = classify(omega, tol);
  if (oc.tag != OrbitTag::GenericG2)
    throw precondition_error("contraction_3g_residual: form is not of generic G2 type");
  Mat b = induced_bilinear(omega);
  Mat dev = b - Mat::identity(7);
  if (!dev.is_zero() && dev.max_abs() > tol.abs_tol)
    throw precondition_error(
        "contraction_3g_residual: frame is not orthonormal for the induced metric");
  const Frame& fr = omega.frame();
  Scalar worst(0);
  for (int i = 0; i < 7; ++i) {
    KForm wi = interior(FrameVector::basis(fr, i), omega);
    for (int j = i; j < 7; ++j) {
      KForm wj = interior(FrameVector::basis(fr, j), omega);
      Scalar v = form_inner(wi, wj);
      if (i == j) v -= Scalar(3);
      Scalar a = v.abs();
      if (worst < a) worst = a;
    }
  }
  return worst;
}

}  // namespace sugra47
