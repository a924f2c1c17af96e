#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sugra47/models.hpp"
#include "sugra47/scenarios.hpp"
#include "support/generators.hpp"

using namespace sugra47;
using namespace sugra47::testing;

TEST_CASE("weak g2 constants") {
  auto [fp, fm] = weak_g2_f_values();
  CHECK(fp == Scalar(2));
  CHECK(fm == Scalar(-2));
  // f = 2 makes both Ricci expressions (3/8) f^2 and (1/6)(f^2 + 5) equal 3/2
  CHECK(Scalar(3, 8) * fp * fp == Scalar(3, 2));
  CHECK((fp * fp + Scalar(5)) * Scalar(1, 6) == Scalar(3, 2));
  // f = 1 is not a solution
  CHECK(Scalar(3, 8) != (Scalar(1) + Scalar(5)) * Scalar(1, 6));
}

TEST_CASE("q_phi: zero, generic, and volume cases") {
  Frame r7 = Frame::euclidean(7);
  CHECK(q_phi(KForm::zero(r7, 3)).is_zero());
  KForm w = canonical_g2_form(r7);
  CHECK(q_phi(w) == Mat::identity(7).scaled(Scalar(-3, 2)));
  // phi = vol of a 3-dimensional block: q = -(1/2) g on that block
  KForm volq = KForm::basis(r7, {0, 1, 2});
  Mat q = q_phi(volq);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      Scalar want = (i == j && i < 3) ? Scalar(-1, 2) : Scalar(0);
      CHECK(q.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == want);
    }
}

TEST_CASE("torus with the reference form: parallel generic type II, flagged") {
  ReductiveSpace t7 = torus7_space();
  KForm w = canonical_g2_form(t7.mframe());
  SpecialFormCandidate c{t7, 1, w, Scalar(0)};
  auto res = special_form_residual(c);
  CHECK(res.closure == Scalar(0));
  CHECK(res.maxwell == Scalar(0));
  SolutionType st = classify_type(c);
  CHECK(st.tag == SolutionTag::TypeII);
  CHECK(st.genericity.tag == OrbitTag::GenericG2);
  // Ricci-flat vs (1/6)(0 + 14) g + q = (5/6) g
  CHECK(einstein7_residual(c) == Scalar(5, 6));
  BackgroundReport rep = verify_background(c);
  CHECK(rep.maxwell_ok);
  CHECK(!rep.einstein_ok);
  CHECK(rep.lambda == Scalar(-7, 6));
  CHECK(rep.crosscheck_ok);
  bool has_parallel_flag = false;
  for (const auto& f : rep.flags)
    if (f.find("no decomposable background") != std::string::npos) has_parallel_flag = true;
  CHECK(has_parallel_flag);
}

TEST_CASE("type I: zero form with nonzero constant") {
  ReductiveSpace t7 = torus7_space();
  SpecialFormCandidate c{t7, 1, KForm::zero(t7.mframe(), 3), Scalar(2)};
  SolutionType st = classify_type(c);
  CHECK(st.tag == SolutionTag::TypeI);
  BackgroundReport rep = verify_background(c);
  CHECK(rep.lambda == Scalar(-4, 3));
  // flat torus is not Einstein with constant f^2/6, so the residual shows it
  CHECK(einstein7_residual(c) == Scalar(2, 3));
}

TEST_CASE("maxwell solver on the flat torus: d = 0 so the spectrum is {0}") {
  MaxwellResult mr = solve_maxwell(torus7_space());
  CHECK(mr.invariant_dim == 35);
  CHECK(mr.coclosed_dim == 35);
  REQUIRE(mr.pairs.size() == 1);
  CHECK(mr.pairs[0].f == Scalar(0));
  CHECK(mr.pairs[0].eigenforms.size() == 35);
}

TEST_CASE("cp2 x s3, unit metric: f = 1 branch (dim 3) and f = 0 branch (vol3)") {
  ReductiveSpace space = cp2s3_space(Scalar(1), Scalar(1), Scalar(1), Scalar(1));
  CHECK(space.dim_m() == 7);
  CHECK(invariant_forms(space, 3).size() == 4);
  MaxwellResult mr = solve_maxwell(space);
  CHECK(mr.invariant_dim == 4);
  CHECK(mr.coclosed_dim == 4);
  CHECK(mr.unresolved_dim == 0);
  REQUIRE(mr.pairs.size() == 2);
  CHECK(mr.pairs[0].f == Scalar(0));
  CHECK(mr.pairs[0].eigenforms.size() == 1);
  CHECK(mr.pairs[1].f == Scalar(1));
  CHECK(mr.pairs[1].eigenforms.size() == 3);
  // the f = 0 eigenvector is vol3 up to scale
  const KForm& v0 = mr.pairs[0].eigenforms[0];
  Scalar coeff = v0.coefficient(mask_of_indices({4, 5, 6}));
  CHECK(!coeff.is_zero());
  CHECK(v0 == cp2s3_vol3(space).scaled(coeff));
  // every f = 1 eigenform is omega ^ theta for some invariant 1-form theta
  KForm omega = cp2s3_kahler(space);
  for (const auto& phi : mr.pairs[1].eigenforms) {
    // phi lives in the span of omega ^ b4, omega ^ b5, omega ^ b6
    bool in_span = false;
    std::vector<KForm> gens;
    for (int b = 4; b < 7; ++b) {
      KForm theta(space.mframe(), 1);
      theta.add_term(Mask{1} << b, Scalar(1));
      gens.push_back(wedge(omega, theta));
    }
    std::vector<Mask> masks;
    for (Mask m = 0; m < (Mask{1} << 7); ++m)
      if (mask_degree(m) == 3) masks.push_back(m);
    Mat sys(masks.size(), 3);
    std::vector<Scalar> rhs;
    for (std::size_t r = 0; r < masks.size(); ++r) {
      for (int c = 0; c < 3; ++c)
        sys.at(r, static_cast<std::size_t>(c)) = gens[static_cast<std::size_t>(c)].coefficient(masks[r]);
      rhs.push_back(phi.coefficient(masks[r]));
    }
    in_span = solve(sys, rhs).has_value();
    CHECK(in_span);
  }
}

TEST_CASE("cp2 x s3, metric (4,2,2): branch values 1 and 1/2") {
  ReductiveSpace space = cp2s3_space(Scalar(1), Scalar(4), Scalar(2), Scalar(2));
  MaxwellResult mr = solve_maxwell(space);
  REQUIRE(mr.pairs.size() == 3);
  CHECK(mr.pairs[0].f == Scalar(0));
  CHECK(mr.pairs[1].f == Scalar(1, 2));
  CHECK(mr.pairs[1].eigenforms.size() == 2);
  CHECK(mr.pairs[2].f == Scalar(1));
  CHECK(mr.pairs[2].eigenforms.size() == 1);
}

TEST_CASE("cp2 x s3: mixed candidate with b != 0 and f != 0 fails Maxwell") {
  ReductiveSpace space = cp2s3_space(Scalar(1), Scalar(1), Scalar(1), Scalar(1));
  KForm theta(space.mframe(), 1);
  theta.add_term(Mask{1} << 4, Scalar(1));
  KForm phi = wedge(cp2s3_kahler(space), theta) + cp2s3_vol3(space).scaled(Scalar(3));
  SpecialFormCandidate c{space, 1, phi, Scalar(1)};
  auto res = special_form_residual(c);
  CHECK(res.closure == Scalar(0));
  CHECK(res.maxwell != Scalar(0));
}

TEST_CASE("cp2 x s3: maxwell solutions fail the Einstein equation") {
  ReductiveSpace space = cp2s3_space(Scalar(1), Scalar(1), Scalar(1), Scalar(1));
  MaxwellResult mr = solve_maxwell(space);
  for (const auto& pair : mr.pairs) {
    for (const auto& phi : pair.eigenforms) {
      SpecialFormCandidate c{space, 1, phi, pair.f};
      BackgroundReport rep = verify_background(c);
      CHECK(rep.maxwell_ok);
      CHECK(!rep.einstein_ok);
      CHECK(rep.einstein_residual.sign() > 0);
      CHECK(rep.crosscheck_ok);
      bool flagged = false;
      for (const auto& fl : rep.flags)
        if (fl.find("not a special gravitational Einstein manifold") != std::string::npos)
          flagged = true;
      CHECK(flagged);
      if (!pair.f.is_zero()) {
        SolutionType st = classify_type(c);
        CHECK(st.tag == SolutionTag::TypeIIIbeta);  // omega ^ theta is degenerate
      }
    }
  }
}

TEST_CASE("s3 x t4: parity rule over all sign patterns and duality types") {
  for (int mask = 0; mask < 8; ++mask) {
    std::array<int, 3> lambda = {(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1,
                                 (mask & 4) ? -1 : 1};
    int plus_count = (lambda[0] > 0) + (lambda[1] > 0) + (lambda[2] > 0);
    ReductiveSpace space = s3t4_space(lambda);
    for (bool self_dual : {true, false}) {
      KForm phi = s3t4_phi(space, self_dual);
      SpecialFormCandidate c{space, 1, phi, Scalar(1)};
      auto res = special_form_residual(c);
      CHECK(res.closure == Scalar(0));
      bool parity_holds = self_dual ? (plus_count % 2 == 1) : (plus_count % 2 == 0);
      CHECK((res.maxwell == Scalar(0)) == parity_holds);
      // a Maxwell constant always exists; it is the product of the signs
      // (times the duality sign), so it is +1 exactly when parity holds
      Scalar f_actual = Scalar(lambda[0] * lambda[1] * lambda[2] * (self_dual ? 1 : -1));
      SpecialFormCandidate c2{space, 1, phi, f_actual};
      auto res2 = special_form_residual(c2);
      CHECK(res2.maxwell == Scalar(0));
      CHECK((f_actual == Scalar(1)) == parity_holds);
    }
  }
}

TEST_CASE("s3 x t4 all-ones self-dual: d phi = star phi exactly, type III beta") {
  ReductiveSpace space = s3t4_space({1, 1, 1});
  KForm phi = s3t4_phi(space, true);
  CHECK(ce_differential(space, phi) == hodge(phi));
  SpecialFormCandidate c{space, 1, phi, Scalar(1)};
  SolutionType st = classify_type(c);
  CHECK(st.tag == SolutionTag::TypeIIIbeta);
  CHECK(st.genericity.tag == OrbitTag::Degenerate);
}

TEST_CASE("so7/g2: exact end-to-end weak-g2 normalization") {
  ReductiveSpace space = so7_g2_space();
  CHECK(space.dim_m() == 7);
  CHECK(space.almost_effective());
  // the cross-product basis is Killing-orthogonal to g2
  Mat k = space.algebra().killing_form();
  Mat cross_block = space.h_basis().transpose() * k * space.m_basis();
  CHECK(cross_block.is_zero());

  auto inv3 = invariant_forms(space, 3);
  REQUIRE(inv3.size() == 1);
  MaxwellResult mr = solve_maxwell(space);
  REQUIRE(mr.pairs.size() == 1);
  REQUIRE(mr.pairs[0].eigenforms.size() == 1);
  Scalar f0 = mr.pairs[0].f;
  CHECK(!f0.is_zero());
  CHECK(f0.exact());

  SpecialFormCandidate cand{space, 1, mr.pairs[0].eigenforms[0], f0};
  SpecialFormCandidate norm = normalize_to_weak_g2(cand, f0);
  CHECK(norm.f == Scalar(2));
  CHECK(form_inner(norm.phi, norm.phi) == Scalar(7));
  auto res = special_form_residual(norm);
  CHECK(res.closure == Scalar(0));
  CHECK(res.maxwell == Scalar(0));

  SolutionType st = classify_type(norm);
  CHECK(st.tag == SolutionTag::TypeIIIalpha);

  Mat ric = ricci(norm.space);
  CHECK(ric == Mat::identity(7).scaled(Scalar(3, 2)));
  CHECK(einstein7_residual(norm) == Scalar(0));

  BackgroundReport rep = verify_background(norm);
  CHECK(rep.maxwell_ok);
  CHECK(rep.einstein_ok);
  CHECK(rep.crosscheck_ok);
  CHECK(rep.lambda == Scalar(-15, 6));
  CHECK(rep.flags.empty());
}

TEST_CASE("rescale covariance laws") {
  ReductiveSpace space = so7_g2_space();
  MaxwellResult mr = solve_maxwell(space);
  SpecialFormCandidate c{space, 1, mr.pairs[0].eigenforms[0], mr.pairs[0].f};
  CHECK(rescale(c, Scalar(1)).f == c.f);
  for (const Scalar& t : {Scalar(2), Scalar(3, 2), Scalar(7, 3)}) {
    SpecialFormCandidate r = rescale(c, t);
    // |phi|^2 unchanged
    CHECK(form_inner(r.phi, r.phi) == form_inner(c.phi, c.phi));
    // f -> f / t and the residual stays zero
    CHECK(r.f == c.f / t);
    auto res = special_form_residual(r);
    CHECK(res.closure == Scalar(0));
    CHECK(res.maxwell == Scalar(0));
    // Einstein constant scales by t^-2: Ricci matrix too
    CHECK(ricci(r.space) == ricci(c.space).scaled(Scalar(1) / (t * t)));
  }
}

TEST_CASE("random invariant candidates: 11-frame cross-check always holds") {
  ReductiveSpace t7 = torus7_space();
  for (int trial = 0; trial < 25; ++trial) {
    KForm phi = random_form(t7.mframe(), 3, 6);
    SpecialFormCandidate c{t7, 1, phi, random_rational()};
    BackgroundReport rep = verify_background(c);
    CHECK(rep.crosscheck_ok);
  }
}

TEST_CASE("example 2.15: Q3 x P4 background verifies within tolerance") {
  ReductiveSpace space = example215_space();
  CHECK(space.dim_m() == 7);
  KForm volq(space.mframe(), 3);
  volq.add_term(mask_of_indices({0, 1, 2}), Scalar(1));
  SpecialFormCandidate c{space, 1, volq, Scalar(0)};
  ToleranceConfig tol;
  tol.abs_tol = 1e-9;
  auto res = special_form_residual(c);
  CHECK(approx_zero(res.closure, tol));
  CHECK(approx_zero(res.maxwell, tol));
  CHECK(form_inner(c.phi, c.phi) == Scalar(1));
  Scalar er = einstein7_residual(c);
  CHECK(approx_zero(er, tol));
  BackgroundReport rep = verify_background(c, tol);
  CHECK(rep.maxwell_ok);
  CHECK(rep.einstein_ok);
  CHECK(rep.crosscheck_ok);
  CHECK(approx_equal(rep.lambda, Scalar(-1, 6), tol));
  SolutionType st = classify_type(c, tol);
  CHECK(st.tag == SolutionTag::TypeII);
  CHECK(st.genericity.tag == OrbitTag::Degenerate);  // vol_Q is decomposable
}

TEST_CASE("g2 structure flags: parallel on the torus, weak on so7/g2") {
  ReductiveSpace t7 = torus7_space();
  KForm w = canonical_g2_form(t7.mframe());
  G2Flags torus_flags = g2_structure_flags(t7, 1, w);
  CHECK(torus_flags.parallel);
  CHECK(torus_flags.cocalibrated);
  CHECK(!torus_flags.weak);

  ReductiveSpace space = so7_g2_space();
  MaxwellResult mr = solve_maxwell(space);
  SpecialFormCandidate norm =
      normalize_to_weak_g2({space, 1, mr.pairs[0].eigenforms[0], mr.pairs[0].f}, mr.pairs[0].f);
  // type IIIalpha forces the weak-G2 flag with lambda = f
  G2Flags weak_flags = g2_structure_flags(norm.space, norm.orientation, norm.phi);
  CHECK(weak_flags.weak);
  CHECK(weak_flags.weak_lambda == Scalar(2));
  CHECK(weak_flags.cocalibrated);
  CHECK(!weak_flags.parallel);

  // non-generic input is a precondition error
  ReductiveSpace unit = cp2s3_space(Scalar(1), Scalar(1), Scalar(1), Scalar(1));
  CHECK_THROWS_AS(g2_structure_flags(unit, 1, cp2s3_vol3(unit)), precondition_error);
}

TEST_CASE("classify in float mode flags a nearly degenerate determinant") {
  // a genuinely generic form scaled down so det B = t^21 drops under tolerance
  Frame r7 = Frame::euclidean(7);
  KForm nearly = canonical_g2_form(r7).scaled(Scalar::of_double(0.3));
  ToleranceConfig tol{1e-6, 1e-6};
  OrbitClass oc = classify(nearly, tol);
  CHECK(oc.tag == OrbitTag::Degenerate);
  CHECK(oc.near_zero_warning);
  // exact zero det reports plain degeneracy, no warning
  OrbitClass dec = classify(KForm::basis(r7, {0, 1, 2}), tol);
  CHECK(dec.tag == OrbitTag::Degenerate);
  CHECK(!dec.near_zero_warning);
}

TEST_CASE("cp2 x s3 differentials: vol3 is closed and d(omega ^ theta) = omega ^ d theta") {
  ReductiveSpace space = cp2s3_space(Scalar(1), Scalar(1), Scalar(1), Scalar(1));
  CHECK(ce_differential(space, cp2s3_vol3(space)).is_zero());
  KForm omega = cp2s3_kahler(space);
  CHECK(ce_differential(space, omega).is_zero());
  for (int b = 4; b < 7; ++b) {
    KForm theta(space.mframe(), 1);
    theta.add_term(Mask{1} << b, Scalar(1));
    CHECK(ce_differential(space, wedge(omega, theta)) ==
          wedge(omega, ce_differential(space, theta)));
  }
}

TEST_CASE("type I on an Einstein space with matching constant has zero residual") {
  // so7/g2 normalized has Ric = (3/2) g = (f^2/6) g at f = 3
  ReductiveSpace space = so7_g2_space();
  MaxwellResult mr = solve_maxwell(space);
  SpecialFormCandidate weak =
      normalize_to_weak_g2({space, 1, mr.pairs[0].eigenforms[0], mr.pairs[0].f}, mr.pairs[0].f);
  SpecialFormCandidate type1{weak.space, 1, KForm::zero(weak.space.mframe(), 3), Scalar(3)};
  CHECK(einstein7_residual(type1) == Scalar(0));
  BackgroundReport rep = verify_background(type1);
  CHECK(rep.maxwell_ok);
  CHECK(rep.einstein_ok);
  CHECK(rep.lambda == Scalar(-3));  // -f^2/3
  REQUIRE(rep.type.has_value());
  CHECK(rep.type->tag == SolutionTag::TypeI);
}

TEST_CASE("cp2 x s3 with irrational rescale ratios runs through the float path") {
  // c = (2,2,2): the coefficient ratios sqrt(c_a/(c_b c_c)) = sqrt(1/2) are
  // irrational, so the transported constants demote to float
  ReductiveSpace space = cp2s3_space(Scalar(1), Scalar(2), Scalar(2), Scalar(2));
  ToleranceConfig tol{1e-9, 1e-9};
  MaxwellResult mr = solve_maxwell(space, 1, tol);
  CHECK(mr.invariant_dim == 4);
  REQUIRE(mr.pairs.size() == 2);
  CHECK(approx_zero(mr.pairs[0].f, tol));
  CHECK(mr.pairs[0].eigenforms.size() == 1);
  CHECK(approx_equal(mr.pairs[1].f, Scalar::of_double(std::sqrt(0.5)), tol));
  CHECK(mr.pairs[1].eigenforms.size() == 3);
  for (const auto& phi : mr.pairs[1].eigenforms) {
    auto res = special_form_residual({space, 1, phi, mr.pairs[1].f});
    CHECK(approx_zero(res.closure, tol));
    CHECK(approx_zero(res.maxwell, tol));
  }
}
