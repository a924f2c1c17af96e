#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sugra47/exterior.hpp"
#include "sugra47/g2.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace sugra47;
using namespace sugra47::testing;

TEST_CASE("wedge on basis forms") {
  Frame r3 = Frame::euclidean(3);
  KForm e1 = KForm::basis(r3, {0});
  KForm e2 = KForm::basis(r3, {1});
  KForm e12 = KForm::basis(r3, {0, 1});
  CHECK(wedge(e1, e2) == e12);
  CHECK(wedge(e12, e12).is_zero());
  CHECK(wedge(e2, e1) == -e12);
  Frame other = Frame::euclidean(4);
  CHECK_THROWS_AS(wedge(e1, KForm::basis(other, {0})), structural_error);
}

TEST_CASE("wedge is graded-commutative, associative, bilinear") {
  Frame fr = Frame::pseudo(4, 2);
  for (int trial = 0; trial < 60; ++trial) {
    int s = 1 + static_cast<int>(rng()() % 3);
    int t = 1 + static_cast<int>(rng()() % 3);
    KForm a = random_form(fr, s);
    KForm b = random_form(fr, t);
    KForm ab = wedge(a, b);
    KForm ba = wedge(b, a);
    CHECK(ab == ((s * t) % 2 ? -ba : ba));
    KForm c = random_form(fr, 1);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    Scalar lam = random_rational();
    CHECK(wedge(a.scaled(lam), b) == ab.scaled(lam));
    KForm a2 = random_form(fr, s);
    CHECK(wedge(a + a2, b) == ab + wedge(a2, b));
  }
}

TEST_CASE("interior product on basis data") {
  Frame r3 = Frame::euclidean(3);
  KForm e12 = KForm::basis(r3, {0, 1});
  KForm e13 = KForm::basis(r3, {0, 2});
  CHECK(interior(FrameVector::basis(r3, 0), e12) == KForm::basis(r3, {1}));
  CHECK(interior(FrameVector::basis(r3, 1), e13).is_zero());
  CHECK_THROWS_AS(interior(FrameVector::basis(r3, 0), KForm::one(r3)), structural_error);
}

TEST_CASE("interior of the reference 3-form along e7") {
  Frame r7 = Frame::euclidean(7);
  KForm w = canonical_g2_form(r7);
  KForm expected = KForm::basis(r7, {0, 1}) + KForm::basis(r7, {2, 3}) + KForm::basis(r7, {4, 5});
  CHECK(interior(FrameVector::basis(r7, 6), w) == expected);
}

TEST_CASE("interior is an antiderivation and squares to zero") {
  Frame fr = Frame::pseudo(3, 2);
  for (int trial = 0; trial < 60; ++trial) {
    int s = 1 + static_cast<int>(rng()() % 2);
    KForm a = random_form(fr, s);
    KForm b = random_form(fr, 2);
    FrameVector x = random_vector(fr);
    KForm lhs = interior(x, wedge(a, b));
    KForm rhs = wedge(interior(x, a), b) +
                (s % 2 ? -wedge(a, interior(x, b)) : wedge(a, interior(x, b)));
    CHECK(lhs == rhs);
    KForm once = interior(x, wedge(a, b));
    if (once.degree() >= 1) CHECK(interior(x, once).is_zero());
  }
}

TEST_CASE("form_inner basics and signature signs") {
  Frame r7 = Frame::euclidean(7);
  KForm e12 = KForm::basis(r7, {0, 1});
  CHECK(form_inner(e12, e12) == Scalar(1));
  Frame l4 = Frame::pseudo(3, 1);
  KForm vol = KForm::volume(l4);
  CHECK(form_inner(vol, vol) == Scalar(-1));
  KForm w = canonical_g2_form(r7);
  CHECK(form_inner(w, w) == Scalar(7));
  CHECK_THROWS_AS(form_inner(e12, KForm::basis(r7, {0})), structural_error);
}

TEST_CASE("form_inner agrees with det of the 1-form Gram on decomposables") {
  for (auto [p, q] : {std::pair{4, 0}, std::pair{3, 1}, std::pair{2, 3}}) {
    Frame fr = Frame::pseudo(p, q);
    for (int trial = 0; trial < 40; ++trial) {
      int k = 1 + static_cast<int>(rng()() % 3);
      std::vector<KForm> af, bf;
      KForm a = KForm::one(fr), b = KForm::one(fr);
      for (int i = 0; i < k; ++i) {
        af.push_back(random_form(fr, 1, 3));
        bf.push_back(random_form(fr, 1, 3));
        a = wedge(a, af.back());
        b = wedge(b, bf.back());
      }
      CHECK(form_inner(a, b) == oracle_decomposable_inner(af, bf));
    }
  }
}

TEST_CASE("hodge star fixed values") {
  Frame l4 = Frame::pseudo(3, 1);
  CHECK(hodge(KForm::one(l4)) == KForm::volume(l4));
  CHECK(hodge(KForm::volume(l4)) == -KForm::one(l4));
  Frame r7 = Frame::euclidean(7);
  CHECK(hodge(KForm::basis(r7, {0, 1, 2})) == KForm::basis(r7, {3, 4, 5, 6}));
}

TEST_CASE("hodge star against the defining-relation oracle") {
  for (auto [p, q] : {std::pair{3, 0}, std::pair{3, 1}, std::pair{2, 2}, std::pair{4, 1}}) {
    Frame fr = Frame::pseudo(p, q);
    for (int k = 0; k <= fr.dim(); ++k) {
      for (int trial = 0; trial < 8; ++trial) {
        KForm a = random_form(fr, k);
        CHECK(hodge(a) == oracle_hodge(a));
      }
    }
  }
}

TEST_CASE("star-squared sign and the wedge-star pairing") {
  for (int n = 1; n <= 6; ++n) {
    for (int q = 0; q <= n; ++q) {
      Frame fr = Frame::pseudo(n - q, q);
      for (int k = 0; k <= n; ++k) {
        KForm a = random_form(fr, k);
        KForm ss = hodge(hodge(a));
        int sign = ((k * (n - k) + q) % 2) ? -1 : 1;
        CHECK(ss == (sign < 0 ? -a : a));
        KForm b = random_form(fr, k);
        CHECK(wedge(a, hodge(b)) == KForm::volume(fr).scaled(form_inner(a, b)));
      }
    }
  }
}

TEST_CASE("endo_action: Euler identity, rotation generator, derivation rule") {
  Frame r3 = Frame::euclidean(3);
  for (int k = 1; k <= 3; ++k) {
    KForm a = random_form(r3, k);
    CHECK(endo_action(Mat::identity(3), a) == a.scaled(Scalar(-k)));
  }
  Mat rot(3, 3);  // E12 - E21
  rot.at(0, 1) = Scalar(1);
  rot.at(1, 0) = Scalar(-1);
  // A.e^1 = -e^2 under the convention (A.a)(X,..) = -sum a(..,AX,..)
  CHECK(endo_action(rot, KForm::basis(r3, {0})) == -KForm::basis(r3, {1}));
  CHECK(endo_action(rot, KForm::basis(r3, {1})) == KForm::basis(r3, {0}));
  Frame fr = Frame::pseudo(3, 1);
  for (int trial = 0; trial < 40; ++trial) {
    Mat m = random_matrix(4, 4);
    KForm a = random_form(fr, 1 + static_cast<int>(rng()() % 2));
    KForm b = random_form(fr, 1);
    CHECK(endo_action(m, wedge(a, b)) ==
          wedge(endo_action(m, a), b) + wedge(a, endo_action(m, b)));
  }
  CHECK_THROWS_AS(endo_action(Mat::identity(5), KForm::basis(r3, {0})), structural_error);
}

TEST_CASE("g2 stabilizer annihilates the canonical form") {
  Frame r7 = Frame::euclidean(7);
  KForm w = canonical_g2_form(r7);
  auto basis = stabilizer_algebra(w);
  for (const auto& a : basis) CHECK(endo_action(a, w).is_zero());
}

TEST_CASE("contraction identity examples") {
  Frame r3 = Frame::euclidean(3);
  auto [l0, r0] = contraction_identity(KForm::basis(r3, {0}), FrameVector::basis(r3, 0),
                                       FrameVector::basis(r3, 0));
  CHECK(l0 == Scalar(0));
  CHECK(r0 == Scalar(0));

  Frame l4 = Frame::pseudo(3, 1);
  auto [l1, r1] = contraction_identity(KForm::volume(l4), FrameVector::basis(l4, 3),
                                       FrameVector::basis(l4, 3));
  CHECK(l1 == Scalar(1));
  CHECK(r1 == Scalar(1));

  Frame r7 = Frame::euclidean(7);
  auto [l2, r2] = contraction_identity(canonical_g2_form(r7), FrameVector::basis(r7, 0),
                                       FrameVector::basis(r7, 0));
  CHECK(l2 == Scalar(4));
  CHECK(r2 == Scalar(4));

  CHECK_THROWS_AS(contraction_identity(KForm::one(r3), FrameVector::basis(r3, 0),
                                       FrameVector::basis(r3, 0)),
                  structural_error);
}

TEST_CASE("contraction identity holds for random forms, all degrees and signatures") {
  for (int n = 1; n <= 7; ++n) {
    for (int q = 0; q <= n; ++q) {
      Frame fr = Frame::pseudo(n - q, q);
      for (int k = 1; k <= n; ++k) {
        for (int trial = 0; trial < 6; ++trial) {
          KForm a = random_form(fr, k);
          FrameVector x = random_vector(fr);
          FrameVector y = random_vector(fr);
          auto [lhs, rhs] = contraction_identity(a, x, y);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("pullback transforms the volume by the determinant") {
  Frame fr = Frame::euclidean(4);
  for (int trial = 0; trial < 20; ++trial) {
    Mat t = random_matrix(4, 4);
    KForm vol = KForm::volume(fr);
    CHECK(pullback(t, vol) == vol.scaled(det(t)));
    // multiplicativity over wedge
    KForm a = random_form(fr, 1);
    KForm b = random_form(fr, 2);
    CHECK(pullback(t, wedge(a, b)) == wedge(pullback(t, a), pullback(t, b)));
  }
}
