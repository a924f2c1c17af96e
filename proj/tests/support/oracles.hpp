#ifndef SUGRA47_TESTS_ORACLES_HPP
#define SUGRA47_TESTS_ORACLES_HPP

#include "sugra47/exterior.hpp"
#include "sugra47/linalg.hpp"

namespace sugra47::testing {

/// Independent Hodge star: solve the defining relation
///   e^I ^ X = <e^I, psi> vol   for every basis k-form e^I
/// as a linear system for the coefficients of X. Shares no code with hodge().
inline KForm oracle_hodge(const KForm& psi) {
  const Frame& fr = psi.frame();
  int n = fr.dim();
  int k = psi.degree();
  std::vector<Mask> kmasks, cmasks;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    int d = mask_degree(m);
    if (d == k) kmasks.push_back(m);
    if (d == n - k) cmasks.push_back(m);
  }
  Mask full = (Mask{1} << n) - 1;
  Mat sys(kmasks.size(), cmasks.size());
  std::vector<Scalar> rhs(kmasks.size());
  for (std::size_t r = 0; r < kmasks.size(); ++r) {
    KForm ei = KForm::zero(fr, k);
    ei.add_term(kmasks[r], Scalar(1));
    for (std::size_t c = 0; c < cmasks.size(); ++c) {
      KForm ej = KForm::zero(fr, n - k);
      ej.add_term(cmasks[c], Scalar(1));
      sys.at(r, c) = wedge(ei, ej).coefficient(full);
    }
    rhs[r] = form_inner(ei, psi);
  }
  auto x = solve(sys, rhs);
  if (!x) throw std::logic_error("oracle_hodge: defining relation unsolvable");
  KForm star(fr, n - k);
  for (std::size_t c = 0; c < cmasks.size(); ++c) star.add_term(cmasks[c], (*x)[c]);
  return star;
}

/// det(<a_i, b_j>) for decomposable forms given by their 1-form factors.
inline Scalar oracle_decomposable_inner(const std::vector<KForm>& a_factors,
                                        const std::vector<KForm>& b_factors) {
  std::size_t k = a_factors.size();
  Mat gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      gram.at(i, j) = form_inner(a_factors[i], b_factors[j]);
  return det(gram);
}

}  // namespace sugra47::testing

#endif
