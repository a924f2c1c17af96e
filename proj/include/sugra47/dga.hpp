#ifndef SUGRA47_DGA_HPP
#define SUGRA47_DGA_HPP

#include "sugra47/reductive.hpp"

namespace sugra47 {

/// A coframe with declared first structure equations: d of each generator is
/// a 2-form with constant coefficients. d extends as an antiderivation and
/// d.d = 0 is validated, which is the Jacobi identity in disguise.
class CoframeDGA {
 public:
  CoframeDGA(std::vector<std::string> generator_names, std::vector<KForm> d_of_generators);

  int generators() const { return frame_.dim(); }
  const Frame& frame() const { return frame_; }
  const std::vector<std::string>& names() const { return names_; }
  const KForm& d_generator(int i) const { return d_gen_[static_cast<std::size_t>(i)]; }
  int generator_index(const std::string& name) const;

  KForm d(const KForm& a) const;

  /// Throws naming the first generator with d(d(gen)) != 0.
  void validate_d2() const;

  /// New coframe ghat^i = factor_i * g^i; structure coefficients transform as
  /// c * factor_k / (factor_i * factor_j).
  CoframeDGA rescaled(const std::vector<Scalar>& factors) const;

  /// Rescale by factor_i = sign_i * sqrt(square_i). Each coefficient picks up
  /// sqrt(square_k / (square_i * square_j)), computed exactly whenever that
  /// ratio is a perfect square even if the individual roots are not (the
  /// metric-orthonormalization case).
  CoframeDGA rescaled_root(const std::vector<Scalar>& squares,
                           const std::vector<int>& signs = {}) const;

 private:
  Frame frame_;
  std::vector<std::string> names_;
  std::vector<KForm> d_gen_;
};

/// Brackets read off the structure equations: c^k_{ij} = -(d g^k)(e_i, e_j).
LieAlgebraData lie_algebra_from_dga(const CoframeDGA& dga);

/// Split the coframe into horizontal (coset) and vertical (connection)
/// generators and build the reductive space they encode. Vertical generators
/// are named; the rest become the m-block in declaration order.
ReductiveSpace reductive_space_from_dga(const CoframeDGA& dga,
                                        const std::vector<std::string>& vertical_names);

/// Invariant horizontal k-forms directly from the DGA: phi horizontal with
/// i_v(d phi) = 0 for every vertical direction v (Cartan's magic formula for
/// a horizontal form).
std::vector<KForm> invariant_horizontal_forms(const CoframeDGA& dga,
                                              const std::vector<std::string>& vertical_names,
                                              int k);

/// Reinterpret a form on the horizontal sub-coframe (first dm generators of
/// the reductive space's frame) from its DGA-frame representation.
KForm restrict_to_horizontal(const CoframeDGA& dga,
                             const std::vector<std::string>& vertical_names, const KForm& a);

}  // namespace sugra47

#endif
