#include "sugra47/scenarios.hpp"

#include "sugra47/errors.hpp"
#include "sugra47/g2.hpp"
#include "sugra47/models.hpp"

namespace sugra47 {

CoframeDGA cp2s3_structure_equations() {
  std::vector<std::string> names = {"a1", "a2", "a3", "a4", "b1", "b2", "b3",
                                    "g1", "g2", "g3", "g4"};
  Frame fr = Frame::euclidean(11);
  fr.set_labels(names);
  auto mk = [&](std::initializer_list<std::tuple<int, int, int>> terms) {
    KForm f(fr, 2);
    for (auto [c, i, j] : terms)
      f.add_term(mask_of_indices({std::min(i, j), std::max(i, j)}), Scalar(i < j ? c : -c));
    return f;
  };
  // indices: a1..a4 -> 0..3, b1..b3 -> 4..6, g1..g4 -> 7..10
  std::vector<KForm> d(11);
  d[0] = mk({{-1, 1, 9}, {-3, 2, 7}, {1, 2, 8}, {-1, 3, 10}});
  d[1] = mk({{1, 0, 9}, {-1, 2, 10}, {-3, 3, 7}, {-1, 3, 8}});
  d[2] = mk({{3, 0, 7}, {-1, 0, 8}, {1, 1, 10}, {-1, 3, 9}});
  d[3] = mk({{1, 0, 10}, {3, 1, 7}, {1, 1, 8}, {1, 2, 9}});
  d[4] = mk({{-1, 5, 6}});
  d[5] = mk({{-1, 6, 4}});
  d[6] = mk({{-1, 4, 5}});
  d[7] = mk({{-1, 0, 2}, {-1, 1, 3}});
  d[8] = mk({{1, 0, 2}, {-1, 1, 3}, {-2, 9, 10}});
  d[9] = mk({{-1, 0, 1}, {-1, 2, 3}, {-2, 10, 8}});
  d[10] = mk({{-1, 0, 3}, {-1, 1, 2}, {-2, 8, 9}});
  return CoframeDGA(names, std::move(d));
}

ReductiveSpace cp2s3_space(const Scalar& a, const Scalar& c1, const Scalar& c2,
                           const Scalar& c3) {
  CoframeDGA dga = cp2s3_structure_equations();
  std::vector<Scalar> squares = {a,  a,  a,  a,  c1, c2,
                                 c3, Scalar(1), Scalar(1), Scalar(1), Scalar(1)};
  CoframeDGA scaled = dga.rescaled_root(squares);
  return reductive_space_from_dga(scaled, cp2s3_vertical());
}

KForm cp2s3_kahler(const ReductiveSpace& space) {
  KForm w(space.mframe(), 2);
  w.add_term(mask_of_indices({0, 2}), Scalar(1));
  w.add_term(mask_of_indices({1, 3}), Scalar(1));
  return w;
}

KForm cp2s3_vol3(const ReductiveSpace& space) {
  KForm v(space.mframe(), 3);
  v.add_term(mask_of_indices({4, 5, 6}), Scalar(1));
  return v;
}

ReductiveSpace s3t4_space(const std::array<int, 3>& lambda_signs) {
  // [t_beta, t_gamma] = -t_alpha gives d w^a = w^b ^ w^g on the coframe
  LieAlgebraData su2m(3, {"t1", "t2", "t3"},
                      {{0, 1, 2, Scalar(-1)}, {1, 2, 0, Scalar(-1)}, {2, 0, 1, Scalar(-1)}});
  LieAlgebraData g = LieAlgebraData::direct_sum(su2m, LieAlgebraData::abelian(4));
  ReductiveSpace group = make_reductive(g, Mat(7, 0), Mat::identity(7));
  std::vector<int> signs = {lambda_signs[0], lambda_signs[1], lambda_signs[2], 1, 1, 1, 1};
  return orthonormalized_space(group, InvariantMetric::identity(7), signs);
}

KForm s3t4_sigma(const ReductiveSpace& space, bool self_dual) {
  KForm s(space.mframe(), 2);
  s.add_term(mask_of_indices({3, 4}), Scalar(1));
  s.add_term(mask_of_indices({5, 6}), Scalar(self_dual ? 1 : -1));
  return s;
}

KForm s3t4_phi(const ReductiveSpace& space, bool self_dual) {
  KForm w1(space.mframe(), 1);
  w1.add_term(Mask{1}, Scalar(1));
  return wedge(w1, s3t4_sigma(space, self_dual));
}

ReductiveSpace so7_g2_space() {
  Frame r7 = Frame::euclidean(7);
  KForm omega = canonical_g2_form(r7);
  auto stab = stabilizer_algebra_skew(omega);
  auto cross = cross_product_matrices(omega);
  std::vector<Mat> basis = stab;
  basis.insert(basis.end(), cross.begin(), cross.end());
  LieAlgebraData so7 = lie_from_matrices(basis);
  Mat h(21, 14), m(21, 7);
  for (int i = 0; i < 14; ++i)
    h.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = Scalar(1);
  for (int i = 0; i < 7; ++i)
    m.at(static_cast<std::size_t>(14 + i), static_cast<std::size_t>(i)) = Scalar(1);
  ReductiveSpace space = make_reductive(so7, h, m);
  // -tr/6 on the cross-product basis is the identity, so the coframe is
  // already orthonormal for that invariant metric
  InvariantMetric metric = trace_metric_on_m(space, Scalar(1, 6));
  if (!(metric.gram == Mat::identity(7)))
    throw structural_error("so7_g2_space: unexpected trace normalization");
  return space;
}

ReductiveSpace torus7_space() {
  return make_reductive(LieAlgebraData::abelian(7), Mat(7, 0), Mat::identity(7));
}

ReductiveSpace product_space(const ReductiveSpace& a, const ReductiveSpace& b) {
  LieAlgebraData g = LieAlgebraData::direct_sum(a.algebra(), b.algebra());
  std::size_t na = static_cast<std::size_t>(a.algebra().dim());
  std::size_t nb = static_cast<std::size_t>(b.algebra().dim());
  Mat h(na + nb, a.h_basis().cols() + b.h_basis().cols());
  Mat m(na + nb, a.m_basis().cols() + b.m_basis().cols());
  for (std::size_t c = 0; c < a.h_basis().cols(); ++c)
    for (std::size_t r = 0; r < na; ++r) h.at(r, c) = a.h_basis().at(r, c);
  for (std::size_t c = 0; c < b.h_basis().cols(); ++c)
    for (std::size_t r = 0; r < nb; ++r) h.at(na + r, a.h_basis().cols() + c) = b.h_basis().at(r, c);
  for (std::size_t c = 0; c < a.m_basis().cols(); ++c)
    for (std::size_t r = 0; r < na; ++r) m.at(r, c) = a.m_basis().at(r, c);
  for (std::size_t c = 0; c < b.m_basis().cols(); ++c)
    for (std::size_t r = 0; r < nb; ++r) m.at(na + r, a.m_basis().cols() + c) = b.m_basis().at(r, c);
  return make_reductive(g, h, m);
}

ReductiveSpace example215_space() {
  // hyperbolic factor: so(3,1) over the form diag(1,1,1,-1), h = rotations
  Mat form = Mat::identity(4);
  form.at(3, 3) = Scalar(-1);
  auto so31_mats = orthogonal_algebra_of_form(form);
  LieAlgebraData so31 = lie_from_matrices(so31_mats);
  // rotations = elements with vanishing 4th row, cut out as a kernel
  Mat row4(4, so31_mats.size());
  for (std::size_t c = 0; c < so31_mats.size(); ++c)
    for (std::size_t r = 0; r < 4; ++r) row4.at(r, c) = so31_mats[c].at(3, r);
  Mat h_rot = nullspace(row4);
  if (h_rot.cols() != 3) throw structural_error("example215_space: so3 block not found");
  ReductiveSpace q_raw = reductive_split(so31, h_rot);
  ReductiveSpace q_unit = orthonormalized_space(q_raw, trace_metric_on_m(q_raw, Scalar(-1, 2)));
  // Ric = -2 g at this scale; metric 12 g moves the Einstein constant to -1/6
  ReductiveSpace q = rescaled_space(q_unit, scalar_sqrt(Scalar(12)));

  // round S^4 = SO5/SO4: Ric = 3 g at the -tr/2 scale; want 1/3, so t = 3
  LieAlgebraData so5 = so_n(5);
  std::vector<Mat> so4_in_so5;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Mat mm(5, 5);
      mm.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Scalar(1);
      mm.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = Scalar(-1);
      so4_in_so5.push_back(mm);
    }
  std::size_t nn = 25;
  Mat span(nn, so5.matrices().size());
  for (std::size_t c = 0; c < so5.matrices().size(); ++c) {
    const Mat& mm = so5.matrices()[c];
    std::vector<Scalar> flat;
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t s = 0; s < 5; ++s) flat.push_back(mm.at(r, s));
    span.set_col(c, flat);
  }
  Mat h45(so5.dim(), so4_in_so5.size());
  for (std::size_t c = 0; c < so4_in_so5.size(); ++c) {
    std::vector<Scalar> flat;
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t s = 0; s < 5; ++s) flat.push_back(so4_in_so5[c].at(r, s));
    auto x = solve(span, flat);
    if (!x) throw structural_error("example215_space: so4 embedding failed");
    h45.set_col(c, *x);
  }
  ReductiveSpace p_raw = reductive_split(so5, h45);
  ReductiveSpace p_unit = orthonormalized_space(p_raw, trace_metric_on_m(p_raw, Scalar(1, 2)));
  ReductiveSpace p = rescaled_space(p_unit, Scalar(3));

  return product_space(q, p);
}

}  // namespace sugra47
