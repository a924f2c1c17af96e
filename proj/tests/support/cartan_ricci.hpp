#ifndef SUGRA47_TESTS_CARTAN_RICCI_HPP
#define SUGRA47_TESTS_CARTAN_RICCI_HPP

#include "sugra47/reductive.hpp"

namespace sugra47::testing {

/// Independent Ricci for Lie groups (trivial isotropy) on an orthonormal
/// coframe: solve the first structure equation de^i + w^i_j ^ e^j = 0 for
/// skew constant-coefficient connection forms, build Omega = dw + w ^ w and
/// contract. Shares nothing with the Nomizu-operator path.
inline Mat cartan_ricci(const ReductiveSpace& space) {
  if (space.dim_h() != 0)
    throw std::logic_error("cartan_ricci: oracle defined for Lie groups only");
  int n = space.dim_m();
  const Frame& fr = space.mframe();

  // d on the coframe from the structure constants
  auto d_form = [&](const KForm& a) {
    KForm out(fr, a.degree() + 1 > n ? n : a.degree() + 1);
    if (a.degree() + 1 > n) return out;
    for (const auto& [mask, coeff] : a.terms()) {
      auto idx = mask_indices(mask);
      for (std::size_t r = 0; r < idx.size(); ++r) {
        Mask rest = mask & ~(Mask{1} << idx[r]);
        int outer = (r & 1) ? -1 : 1;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            const Scalar& c = space.cm(idx[r], i, j);
            if (c.is_zero()) continue;
            Mask two = (Mask{1} << i) | (Mask{1} << j);
            if (two & rest) continue;
            int s = merge_sign(two, rest) * outer;
            Scalar v = -(c * coeff);
            out.add_term(two | rest, s < 0 ? -v : v);
          }
      }
    }
    return out;
  };

  // unknowns G(i,j,k) = coefficient of e^k in w^i_j, for i < j
  auto unknown = [&](int i, int j, int k) { return ((i * n + j) * n) + k; };
  int nun = n * n * n;
  std::vector<Mask> basis2;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (mask_degree(m) == 2) basis2.push_back(m);
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  // de^i = -sum_j w^i_j ^ e^j, coefficient of e^a ^ e^b:
  //   -cm(i,a,b) = G(i,b,a) - G(i,a,b)
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        std::vector<Scalar> row(static_cast<std::size_t>(nun));
        row[static_cast<std::size_t>(unknown(i, a, b))] += Scalar(1);
        row[static_cast<std::size_t>(unknown(i, b, a))] -= Scalar(1);
        rows.push_back(std::move(row));
        rhs.push_back(-space.cm(i, a, b));
      }
  // skewness w^i_j = -w^j_i
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<Scalar> row(static_cast<std::size_t>(nun));
        row[static_cast<std::size_t>(unknown(i, j, k))] += Scalar(1);
        row[static_cast<std::size_t>(unknown(j, i, k))] += Scalar(1);
        rows.push_back(std::move(row));
        rhs.push_back(Scalar(0));
      }
  Mat sys(rows.size(), static_cast<std::size_t>(nun));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < nun; ++c) sys.at(r, static_cast<std::size_t>(c)) = rows[r][static_cast<std::size_t>(c)];
  auto sol = solve(sys, rhs);
  if (!sol) throw std::logic_error("cartan_ricci: structure equations unsolvable");

  auto omega = [&](int i, int j) {
    KForm w(fr, 1);
    for (int k = 0; k < n; ++k)
      w.add_term(Mask{1} << k, (*sol)[static_cast<std::size_t>(unknown(i, j, k))]);
    return w;
  };
  // curvature 2-forms and Ricci contraction Ric(j,l) = sum_i Omega^i_l(e_i, e_j)
  std::vector<std::vector<KForm>> curv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      KForm om = d_form(omega(i, j));
      for (int k = 0; k < n; ++k) om = om + wedge(omega(i, k), omega(k, j));
      curv[static_cast<std::size_t>(i)].push_back(om);
    }
  auto eval2 = [&](const KForm& w2, int x, int y) {
    // w2(e_x, e_y), x != y
    if (x == y) return Scalar(0);
    Mask m = (Mask{1} << x) | (Mask{1} << y);
    Scalar c = w2.coefficient(m);
    return x < y ? c : -c;
  };
  Mat ric(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      Scalar s(0);
      for (int i = 0; i < n; ++i)
        s += eval2(curv[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)], i, j);
      ric.at(static_cast<std::size_t>(j), static_cast<std::size_t>(l)) = s;
    }
  return ric;
}

}  // namespace sugra47::testing

#endif
