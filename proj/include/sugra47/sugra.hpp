#ifndef SUGRA47_SUGRA_HPP
#define SUGRA47_SUGRA_HPP

#include <optional>

#include "sugra47/g2.hpp"
#include "sugra47/product.hpp"
#include "sugra47/reductive.hpp"

namespace sugra47 {

/// A 3-form candidate (phi, f) for d star phi = 0 and d phi = f star phi on a
/// homogeneous 7-space whose m-basis is orthonormal for the invariant metric.
struct SpecialFormCandidate {
  ReductiveSpace space;
  int orientation = 1;  // sign of vol relative to the coframe wedge
  KForm phi;            // degree 3 on space.mframe()
  Scalar f;
};

struct SpecialFormResiduals {
  Scalar closure;  // max-norm of d star phi
  Scalar maxwell;  // max-norm of d phi - f star phi
};

SpecialFormResiduals special_form_residual(const SpecialFormCandidate& c);

struct MaxwellEigenpair {
  Scalar f;
  std::vector<KForm> eigenforms;
};

struct MaxwellResult {
  std::vector<MaxwellEigenpair> pairs;   // real (rational in exact mode) f
  int invariant_dim = 0;                 // dim of invariant 3-forms
  int coclosed_dim = 0;                  // after imposing d star phi = 0
  int unresolved_dim = 0;                // complex or non-rational leftovers
  std::vector<std::string> notes;
};

/// All invariant co-closed solutions of d phi = f star phi, as the spectrum
/// of star^-1 d on the co-closed invariant 3-forms. Every returned pair is
/// certified against the full equation.
MaxwellResult solve_maxwell(const ReductiveSpace& space, int orientation = 1,
                            const ToleranceConfig& tol = {});

enum class SolutionTag { TypeI, TypeII, TypeIIIalpha, TypeIIIbeta };
const char* solution_tag_name(SolutionTag tag);

struct SolutionType {
  SolutionTag tag;
  OrbitClass genericity;
};

/// Taxonomy by (phi = 0, f) and genericity; requires vanishing residuals.
SolutionType classify_type(const SpecialFormCandidate& c, const ToleranceConfig& tol = {});

/// q_phi(e_i, e_j) = -(1/2) <e_i . phi, e_j . phi> on the orthonormal frame.
Mat q_phi(const KForm& phi);

/// Max over basis pairs of |Ric - (1/6)(f^2 + 2|phi|^2) g - q_phi|.
Scalar einstein7_residual(const SpecialFormCandidate& c);

/// Lambda = -(2 f^2 + |phi|^2) / 6.
Scalar lorentz_einstein_constant(const KForm& phi, const Scalar& f);

/// The two values of f for which (3/8) f^2 = (1/6)(f^2 + 5).
std::pair<Scalar, Scalar> weak_g2_f_values();

/// Differential type of a generic 3-form on a homogeneous 7-space:
/// parallel (d w = d star w = 0), weak (d w = lambda star w, lambda != 0),
/// co-calibrated (d star w = 0). Requires a generic form.
struct G2Flags {
  bool parallel = false;
  bool weak = false;
  Scalar weak_lambda;  // set when weak
  bool cocalibrated = false;
};

G2Flags g2_structure_flags(const ReductiveSpace& space, int orientation, const KForm& omega,
                           const ToleranceConfig& tol = {});

/// Homothety: metric -> t^2 metric, phi -> t^3 phi. In orthonormal-frame
/// data the form coefficients are unchanged, structure constants scale by
/// 1/t and f by 1/t.
SpecialFormCandidate rescale(const SpecialFormCandidate& c, const Scalar& t);

/// Scale phi to |phi|^2 = 7, orient so f > 0, and rescale the metric so the
/// Maxwell constant is exactly 2 (the weak-G2 normalization). f_measured is
/// the Maxwell eigenvalue of phi at the current scale.
SpecialFormCandidate normalize_to_weak_g2(const SpecialFormCandidate& c,
                                          const Scalar& f_measured,
                                          const ToleranceConfig& tol = {});

struct BackgroundReport {
  Scalar closure_residual;
  Scalar maxwell_residual;
  Scalar einstein_residual;
  Scalar phi_norm2;
  Scalar f;
  Scalar lambda;
  bool maxwell_ok = false;
  bool einstein_ok = false;
  std::optional<SolutionType> type;  // set when the candidate is special
  Scalar crosscheck_residual;        // 11-frame stress vs reduced blocks
  bool crosscheck_ok = false;
  std::vector<std::string> flags;
};

/// Full verification: closure/Maxwell residuals, the 7-dimensional Einstein
/// equation, Lambda, the type taxonomy, and the 11-frame cross-check of the
/// reduced stress formulas. Flags record the known obstructions.
BackgroundReport verify_background(const SpecialFormCandidate& c,
                                   const ToleranceConfig& tol = {});

}  // namespace sugra47

#endif
