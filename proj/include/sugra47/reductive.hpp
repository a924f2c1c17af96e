#ifndef SUGRA47_REDUCTIVE_HPP
#define SUGRA47_REDUCTIVE_HPP

#include "sugra47/exterior.hpp"
#include "sugra47/lie.hpp"

namespace sugra47 {

/// Reductive decomposition g = h + m with the isotropy action and the
/// m-bracket split cached in the chosen m-basis. Forms live on a Euclidean
/// frame indexed by the m-basis; the basis is declared orthonormal for the
/// invariant metric once orthonormalized_space has been applied.
class ReductiveSpace {
 public:
  ReductiveSpace() = default;

  const LieAlgebraData& algebra() const { return g_; }
  const Mat& h_basis() const { return h_; }
  const Mat& m_basis() const { return m_; }
  int dim_h() const { return static_cast<int>(h_.cols()); }
  int dim_m() const { return static_cast<int>(m_.cols()); }

  const Frame& mframe() const { return mframe_; }
  const std::vector<Mat>& isotropy() const { return isotropy_; }
  bool almost_effective() const { return almost_effective_; }

  /// m-part structure constants: [m_i, m_j]_m = sum_k cm(k,i,j) m_k.
  const Scalar& cm(int k, int i, int j) const {
    return cm_[static_cast<std::size_t>((k * dim_m() + i) * dim_m() + j)];
  }
  /// h-part: [m_i, m_j]_h = sum_a ch(a,i,j) h_a.
  const Scalar& ch(int a, int i, int j) const {
    return ch_[static_cast<std::size_t>((a * dim_m() + i) * dim_m() + j)];
  }

  friend ReductiveSpace make_reductive(const LieAlgebraData& g, const Mat& h_basis,
                                       const Mat& m_basis);

 private:
  LieAlgebraData g_;
  Mat h_, m_;
  std::vector<Mat> isotropy_;
  std::vector<Scalar> cm_, ch_;
  Frame mframe_;
  bool almost_effective_ = true;
};

/// Build and validate: h a subalgebra, [h, m] in m, h + m = g.
ReductiveSpace make_reductive(const LieAlgebraData& g, const Mat& h_basis, const Mat& m_basis);

enum class ComplementForm { Killing, Trace };

/// m = orthogonal complement of h under the Killing form (or -tr(XY) of an
/// attached matrix realization). Errors if the form degenerates on h or the
/// complement is not reductive.
ReductiveSpace reductive_split(const LieAlgebraData& g, const Mat& h_basis,
                               ComplementForm form = ComplementForm::Killing);

/// Positive invariant metric on m. Diagonal in every built-in scenario;
/// general symmetric matrices are accepted and orthonormalized by
/// Gram-Schmidt.
struct InvariantMetric {
  Mat gram;  // dim_m x dim_m, symmetric positive

  static InvariantMetric diag(const std::vector<Scalar>& entries);
  static InvariantMetric identity(int n);
};

/// -scale * tr(M_a M_b) on the m-basis, via the algebra's matrix realization.
/// The natural invariant metric for matrix algebras.
InvariantMetric trace_metric_on_m(const ReductiveSpace& space, const Scalar& scale);

/// Rescale/rotate the m-basis so the metric becomes the identity; structure
/// data is transported. Factors may be irrational, demoting constants to
/// float. Optional per-axis signs flip coframe orientations (the lambda = -1
/// convention); they must have unit modulus.
ReductiveSpace orthonormalized_space(const ReductiveSpace& space, const InvariantMetric& metric,
                                     const std::vector<int>& axis_signs = {});

/// Uniform coframe rescaling e^i -> t e^i (metric -> t^2 metric): m-part
/// constants scale by 1/t, h-part by 1/t^2.
ReductiveSpace rescaled_space(const ReductiveSpace& space, const Scalar& t);

struct IsotypicBlock {
  int dim;
  Scalar casimir_eigenvalue;
  bool trivial;
  Mat basis;  // columns in m-coordinates of the frame
};

/// Eigenspace decomposition of the Casimir sum_{ab} (M^-1)_{ab} X_a X_b of the
/// isotropy action (M the negative trace form). The kernel is reported as
/// dim-many one-dimensional trivial blocks.
std::vector<IsotypicBlock> isotypic_decomposition(const ReductiveSpace& space,
                                                  const ToleranceConfig& tol = {});

/// Basis of h-invariant k-forms on the m-frame.
std::vector<KForm> invariant_forms(const ReductiveSpace& space, int k);

bool is_invariant(const ReductiveSpace& space, const KForm& a);

/// Chevalley-Eilenberg differential of an invariant form,
/// d e^k = -sum_{i<j} cm^k_{ij} e^i ^ e^j extended as an antiderivation.
/// Errors on non-invariant input.
KForm ce_differential(const ReductiveSpace& space, const KForm& a);

/// Ricci tensor of the invariant metric for which the current m-basis is
/// orthonormal, via the canonical connection's Nomizu operator. Exact for
/// exact structure constants.
Mat ricci(const ReductiveSpace& space);

/// If Ric = c * id returns c.
std::optional<Scalar> einstein_constant(const Mat& ric, const ToleranceConfig& tol = {});

}  // namespace sugra47

#endif
