#include "sugra47/sugra.hpp"

#include <cmath>

#include "sugra47/errors.hpp"

namespace sugra47 {

const char* solution_tag_name(SolutionTag tag) {
  switch (tag) {
    case SolutionTag::TypeI: return "TypeI";
    case SolutionTag::TypeII: return "TypeII";
    case SolutionTag::TypeIIIalpha: return "TypeIIIalpha";
    case SolutionTag::TypeIIIbeta: return "TypeIIIbeta";
  }
  return "?";
}

SpecialFormResiduals special_form_residual(const SpecialFormCandidate& c) {
  if (c.phi.degree() != 3) throw structural_error("special_form_residual: phi must be a 3-form");
  KForm star_phi = hodge_oriented(c.phi, c.orientation);
  KForm d_star = ce_differential(c.space, star_phi);
  KForm d_phi = ce_differential(c.space, c.phi);
  KForm maxwell = d_phi - star_phi.scaled(c.f);
  return {d_star.max_abs_coefficient(), maxwell.max_abs_coefficient()};
}

namespace {

std::vector<Mask> masks_of_degree(const Frame& fr, int k) {
  std::vector<Mask> masks;
  for (Mask m = 0; m < (Mask{1} << fr.dim()); ++m)
    if (mask_degree(m) == k) masks.push_back(m);
  return masks;
}

Mat forms_to_columns(const std::vector<KForm>& forms, const std::vector<Mask>& masks) {
  Mat out(masks.size(), forms.size());
  for (std::size_t c = 0; c < forms.size(); ++c)
    for (std::size_t r = 0; r < masks.size(); ++r)
      out.at(r, c) = forms[c].coefficient(masks[r]);
  return out;
}

bool all_exact(const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).exact()) return false;
  return true;
}

}  // namespace

MaxwellResult solve_maxwell(const ReductiveSpace& space, int orientation,
                            const ToleranceConfig& tol) {
  MaxwellResult result;
  const Frame& fr = space.mframe();
  if (fr.dim() != 7)
    throw structural_error("solve_maxwell: d phi = f star phi needs a 7-dimensional space");
  std::vector<KForm> inv3 = invariant_forms(space, 3);
  result.invariant_dim = static_cast<int>(inv3.size());
  if (inv3.empty()) return result;

  // restrict to the co-closed subspace first
  std::vector<KForm> dstar;
  for (const auto& phi : inv3)
    dstar.push_back(ce_differential(space, hodge_oriented(phi, orientation)));
  Mat co_sys = forms_to_columns(dstar, masks_of_degree(fr, 5));
  Mat co = nullspace(co_sys, tol);
  result.coclosed_dim = static_cast<int>(co.cols());
  if (co.cols() == 0) return result;
  std::vector<KForm> kappa;
  for (std::size_t c = 0; c < co.cols(); ++c) {
    KForm f(fr, 3);
    for (std::size_t a = 0; a < inv3.size(); ++a) {
      if (co.at(a, c).is_zero()) continue;
      f = f + inv3[a].scaled(co.at(a, c));
    }
    kappa.push_back(f);
  }

  auto masks4 = masks_of_degree(fr, 4);
  std::vector<KForm> d_kappa, s_kappa;
  for (const auto& k : kappa) {
    d_kappa.push_back(ce_differential(space, k));
    s_kappa.push_back(hodge_oriented(k, orientation));
  }
  Mat d_mat = forms_to_columns(d_kappa, masks4);
  Mat s_mat = forms_to_columns(s_kappa, masks4);

  // pick rows making S square and invertible (star is injective)
  Mat st = s_mat.transpose();
  auto row_pivots = rref_in_place(st, tol);
  if (row_pivots.size() != kappa.size())
    throw structural_error("solve_maxwell: star matrix lost rank");
  Mat s_sq(kappa.size(), kappa.size()), d_sq(kappa.size(), kappa.size());
  for (std::size_t r = 0; r < row_pivots.size(); ++r)
    for (std::size_t c = 0; c < kappa.size(); ++c) {
      s_sq.at(r, c) = s_mat.at(row_pivots[r], c);
      d_sq.at(r, c) = d_mat.at(row_pivots[r], c);
    }
  Mat a = inverse(s_sq, tol) * d_sq;

  // eigen decomposition, certified against the rectangular pencil
  std::vector<std::pair<Scalar, Mat>> candidates;
  if (all_exact(a)) {
    bool complete = false;
    auto pairs = rational_eigenpairs(a, &complete, tol);
    int found = 0;
    for (const auto& ep : pairs) {
      candidates.emplace_back(ep.value, ep.vectors);
      found += static_cast<int>(ep.vectors.cols());
    }
    result.unresolved_dim = static_cast<int>(kappa.size()) - found;
    if (result.unresolved_dim > 0)
      result.notes.push_back("non-rational or complex eigenvalues span dimension " +
                             std::to_string(result.unresolved_dim) + "; rerun in float mode");
  } else {
    auto evs = real_eigenvalues_f(a, tol);
    std::vector<double> used;
    int found = 0;
    for (double x : evs) {
      bool dup = false;
      for (double u : used)
        if (std::fabs(u - x) <= 10 * tol.abs_tol) dup = true;
      if (dup) continue;
      used.push_back(x);
      Mat shifted = a - Mat::identity(a.rows()).scaled(Scalar::of_double(x));
      Mat space_vecs = nullspace(shifted, tol);
      if (space_vecs.cols() == 0) continue;
      candidates.emplace_back(Scalar::of_double(x), space_vecs);
      found += static_cast<int>(space_vecs.cols());
    }
    result.unresolved_dim = static_cast<int>(kappa.size()) - found;
    if (result.unresolved_dim > 0)
      result.notes.push_back("complex eigenvalues span dimension " +
                             std::to_string(result.unresolved_dim) + "; discarded");
  }

  for (auto& [f, vecs] : candidates) {
    MaxwellEigenpair pair;
    pair.f = f;
    for (std::size_t c = 0; c < vecs.cols(); ++c) {
      KForm phi(fr, 3);
      for (std::size_t r = 0; r < kappa.size(); ++r) {
        if (vecs.at(r, c).is_zero()) continue;
        phi = phi + kappa[r].scaled(vecs.at(r, c));
      }
      // certify against the full equation
      SpecialFormCandidate cand{space, orientation, phi, f};
      auto res = special_form_residual(cand);
      if (!approx_zero(res.maxwell, tol) || !approx_zero(res.closure, tol)) {
        result.notes.push_back("discarded a spurious eigenvector at f = " + f.str());
        continue;
      }
      pair.eigenforms.push_back(phi);
    }
    if (!pair.eigenforms.empty()) result.pairs.push_back(pair);
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const MaxwellEigenpair& x, const MaxwellEigenpair& y) {
              return x.f.value() < y.f.value();
            });
  return result;
}

SolutionType classify_type(const SpecialFormCandidate& c, const ToleranceConfig& tol) {
  auto res = special_form_residual(c);
  if (!approx_zero(res.closure, tol) || !approx_zero(res.maxwell, tol))
    throw precondition_error("classify_type: candidate is not a special form");
  bool phi_zero = approx_zero(c.phi.max_abs_coefficient(), tol);
  bool f_zero = approx_zero(c.f, tol);
  SolutionType st{SolutionTag::TypeI, {}};
  if (phi_zero && f_zero)
    throw precondition_error("classify_type: trivial candidate (phi = 0, f = 0)");
  if (phi_zero) {
    st.tag = SolutionTag::TypeI;
    st.genericity.tag = OrbitTag::Degenerate;
    st.genericity.det_b = Scalar(0);
    return st;
  }
  st.genericity = classify(c.phi, tol);
  if (f_zero)
    st.tag = SolutionTag::TypeII;
  else
    st.tag = st.genericity.tag == OrbitTag::GenericG2 ? SolutionTag::TypeIIIalpha
                                                      : SolutionTag::TypeIIIbeta;
  return st;
}

Mat q_phi(const KForm& phi) {
  if (phi.degree() != 3) throw structural_error("q_phi: need a 3-form");
  const Frame& fr = phi.frame();
  std::size_t n = static_cast<std::size_t>(fr.dim());
  Mat q(n, n);
  std::vector<KForm> contractions;
  for (int i = 0; i < fr.dim(); ++i)
    contractions.push_back(interior(FrameVector::basis(fr, i), phi));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar v = -form_inner(contractions[i], contractions[j]) * Scalar(1, 2);
      q.at(i, j) = v;
      q.at(j, i) = v;
    }
  return q;
}

Scalar einstein7_residual(const SpecialFormCandidate& c) {
  Mat ric = ricci(c.space);
  Scalar phi2 = form_inner(c.phi, c.phi);
  Scalar factor = (c.f * c.f + Scalar(2) * phi2) * Scalar(1, 6);
  Mat rhs = Mat::identity(ric.rows()).scaled(factor) + q_phi(c.phi);
  Mat dev = ric - rhs;
  Scalar worst(0);
  for (std::size_t i = 0; i < dev.rows(); ++i)
    for (std::size_t j = 0; j < dev.cols(); ++j) {
      Scalar a = dev.at(i, j).abs();
      if (worst < a) worst = a;
    }
  return worst;
}

Scalar lorentz_einstein_constant(const KForm& phi, const Scalar& f) {
  return -(Scalar(2) * f * f + form_inner(phi, phi)) * Scalar(1, 6);
}

std::pair<Scalar, Scalar> weak_g2_f_values() {
  // (3/8) f^2 = (1/6)(f^2 + 5)
  Scalar coeff = Scalar(3, 8) - Scalar(1, 6);
  Scalar f2 = Scalar(5, 6) / coeff;
  Scalar f = scalar_sqrt(f2);
  return {f, -f};
}

G2Flags g2_structure_flags(const ReductiveSpace& space, int orientation, const KForm& omega,
                           const ToleranceConfig& tol) {
  if (classify(omega, tol).tag != OrbitTag::GenericG2)
    throw precondition_error("g2_structure_flags: form is not of generic G2 type");
  G2Flags flags;
  KForm star_w = hodge_oriented(omega, orientation);
  KForm d_w = ce_differential(space, omega);
  KForm d_star = ce_differential(space, star_w);
  flags.cocalibrated = approx_zero(d_star.max_abs_coefficient(), tol);
  bool d_w_zero = approx_zero(d_w.max_abs_coefficient(), tol);
  flags.parallel = flags.cocalibrated && d_w_zero;
  if (!d_w_zero) {
    // test d w = lambda star w: lambda from the first nonzero star coefficient
    for (const auto& [m, c] : star_w.terms()) {
      if (approx_zero(c, tol)) continue;
      Scalar lambda = d_w.coefficient(m) / c;
      KForm dev = d_w - star_w.scaled(lambda);
      if (approx_zero(dev.max_abs_coefficient(), tol) && !approx_zero(lambda, tol)) {
        flags.weak = true;
        flags.weak_lambda = lambda;
      }
      break;
    }
  }
  return flags;
}

SpecialFormCandidate rescale(const SpecialFormCandidate& c, const Scalar& t) {
  if (t.sign() <= 0) throw structural_error("rescale: t must be positive");
  SpecialFormCandidate out = c;
  out.space = rescaled_space(c.space, t);
  // phi coefficients are unchanged in the rescaled orthonormal coframe
  out.phi = KForm(out.space.mframe(), 3);
  for (const auto& [m, v] : c.phi.terms()) out.phi.add_term(m, v);
  out.f = c.f / t;
  return out;
}

SpecialFormCandidate normalize_to_weak_g2(const SpecialFormCandidate& c,
                                          const Scalar& f_measured,
                                          const ToleranceConfig& tol) {
  if (approx_zero(f_measured, tol))
    throw precondition_error("normalize_to_weak_g2: f = 0 cannot be normalized");
  SpecialFormCandidate cur = c;
  Scalar f = f_measured;
  if (f.sign() < 0) {
    cur.orientation = -cur.orientation;  // star and hence f change sign
    f = -f;
  }
  // |phi|^2 -> 7
  Scalar n2 = form_inner(cur.phi, cur.phi);
  if (n2.sign() <= 0) throw precondition_error("normalize_to_weak_g2: phi = 0");
  Scalar ratio = Scalar(7) / n2;
  Scalar s = scalar_sqrt(ratio);
  cur.phi = cur.phi.scaled(s);
  // Maxwell constant -> 2
  cur = rescale({cur.space, cur.orientation, cur.phi, f}, f / Scalar(2));
  cur.f = Scalar(2);
  auto res = special_form_residual(cur);
  if (!approx_zero(res.maxwell, tol))
    throw precondition_error("normalize_to_weak_g2: residual survives normalization");
  return cur;
}

BackgroundReport verify_background(const SpecialFormCandidate& c, const ToleranceConfig& tol) {
  if (c.space.dim_m() != 7)
    throw structural_error("verify_background: the internal space must be 7-dimensional");
  BackgroundReport report;
  auto res = special_form_residual(c);
  report.closure_residual = res.closure;
  report.maxwell_residual = res.maxwell;
  report.maxwell_ok = approx_zero(res.closure, tol) && approx_zero(res.maxwell, tol);
  report.phi_norm2 = form_inner(c.phi, c.phi);
  report.f = c.f;
  report.lambda = lorentz_einstein_constant(c.phi, c.f);
  report.einstein_residual = einstein7_residual(c);
  report.einstein_ok = approx_zero(report.einstein_residual, tol);

  if (report.maxwell_ok) {
    bool trivial = approx_zero(c.phi.max_abs_coefficient(), tol) && approx_zero(c.f, tol);
    if (!trivial) {
      report.type = classify_type(c, tol);
      if (report.type->tag == SolutionTag::TypeII &&
          report.type->genericity.tag == OrbitTag::GenericG2)
        report.flags.push_back(
            "generic type II special form is parallel: the closure and Maxwell equations "
            "force a Ricci-flat internal factor, which contradicts the Einstein equation; "
            "no decomposable background exists");
    }
  }
  if (report.maxwell_ok && !report.einstein_ok)
    report.flags.push_back("not a special gravitational Einstein manifold");

  // 11-frame cross-check of the reduced stress formulas
  ProductFrame pf = ProductFrame::lorentz4_times(c.phi.frame());
  FluxForm flux(pf, c.f, hodge_oriented(c.phi, c.orientation));
  Mat qp = q_phi(c.phi);
  Scalar factor7 = (c.f * c.f + Scalar(2) * report.phi_norm2) * Scalar(1, 6);
  Scalar worst(0);
  auto bump = [&](const Scalar& dev) {
    Scalar a = dev.abs();
    if (worst < a) worst = a;
  };
  for (int i = 0; i < 11; ++i) {
    FrameVector x = FrameVector::basis(pf.combined(), i);
    for (int j = i; j < 11; ++j) {
      FrameVector y = FrameVector::basis(pf.combined(), j);
      Scalar got = stress_rhs(pf, flux, x, y);
      Scalar want(0);
      if (i < 4 && j < 4) {
        if (i == j) want = pf.left().metric_sign(i) < 0 ? -report.lambda : report.lambda;
      } else if (i >= 4 && j >= 4) {
        want = qp.at(static_cast<std::size_t>(i - 4), static_cast<std::size_t>(j - 4));
        if (i == j) want += factor7;
      }
      bump(got - want);
    }
  }
  report.crosscheck_residual = worst;
  report.crosscheck_ok = approx_zero(worst, tol);
  return report;
}

}  // namespace sugra47
