#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sugra47/linalg.hpp"
#include "support/generators.hpp"

using namespace sugra47;
using sugra47::testing::random_matrix;

TEST_CASE("rref, rank, nullspace") {
  Mat m{{Scalar(1), Scalar(2), Scalar(3)},
        {Scalar(2), Scalar(4), Scalar(6)},
        {Scalar(1), Scalar(0), Scalar(1)}};
  CHECK(rank(m) == 2);
  Mat ns = nullspace(m);
  CHECK(ns.cols() == 1);
  auto v = ns.col(0);
  auto mv = mat_vec(m, v);
  for (const auto& x : mv) CHECK(x.is_zero());
}

TEST_CASE("solve consistent and inconsistent systems") {
  Mat a{{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(-1)}};
  auto x = solve(a, {Scalar(5), Scalar(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar(2));
  CHECK((*x)[1] == Scalar(1));
  Mat b{{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(1)}};
  CHECK(!solve(b, {Scalar(0), Scalar(1)}).has_value());
}

TEST_CASE("determinant and inverse, exact") {
  Mat a{{Scalar(1), Scalar(1, 2), Scalar(0)},
        {Scalar(0), Scalar(1, 3), Scalar(2)},
        {Scalar(5), Scalar(0), Scalar(1)}};
  Scalar d = det(a);
  CHECK(d.exact());
  Mat inv = inverse(a);
  CHECK(a * inv == Mat::identity(3));
  // det of a singular matrix
  Mat s{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
  CHECK(det(s).is_zero());
}

TEST_CASE("property: A * nullspace(A) = 0 and rank-nullity") {
  for (int trial = 0; trial < 30; ++trial) {
    Mat a = random_matrix(5, 7);
    Mat ns = nullspace(a);
    CHECK(rank(a) + ns.cols() == 7);
    Mat prod = a * ns;
    CHECK(prod.is_zero());
  }
}

TEST_CASE("symmetric signature, exact congruence") {
  Mat diag{{Scalar(2), Scalar(0), Scalar(0)},
           {Scalar(0), Scalar(-3), Scalar(0)},
           {Scalar(0), Scalar(0), Scalar(1, 5)}};
  auto [p, q] = symmetric_signature(diag);
  CHECK(p == 2);
  CHECK(q == 1);
  // hyperbolic plane: zero diagonal
  Mat hyp{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
  auto [hp, hq] = symmetric_signature(hyp);
  CHECK(hp == 1);
  CHECK(hq == 1);
  // congruence invariance: sig(T^t D T) = sig(D) for invertible T
  for (int trial = 0; trial < 20; ++trial) {
    Mat t = random_matrix(3, 3);
    if (det(t).is_zero()) continue;
    Mat m = t.transpose() * diag * t;
    auto [sp, sq] = symmetric_signature(m);
    CHECK(sp == 2);
    CHECK(sq == 1);
  }
}

TEST_CASE("rational eigenpairs certified exactly") {
  // eigenvalues 2 (twice, geometric 2) and -1/2
  Mat m{{Scalar(2), Scalar(0), Scalar(0)},
        {Scalar(0), Scalar(2), Scalar(0)},
        {Scalar(0), Scalar(0), Scalar(-1, 2)}};
  bool complete = false;
  auto pairs = rational_eigenpairs(m, &complete);
  CHECK(complete);
  REQUIRE(pairs.size() == 2);
  for (const auto& ep : pairs) {
    if (ep.value == Scalar(2)) CHECK(ep.vectors.cols() == 2);
    if (ep.value == Scalar(-1, 2)) CHECK(ep.vectors.cols() == 1);
    Mat residual = m * ep.vectors - ep.vectors.scaled(ep.value);
    CHECK(residual.is_zero());
  }
  // rotation matrix: no real eigenvalues
  Mat rot{{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}};
  auto none = rational_eigenpairs(rot, &complete);
  CHECK(none.empty());
  CHECK(!complete);
  // non-diagonal with rational spectrum
  Mat a{{Scalar(0), Scalar(1)}, {Scalar(-2), Scalar(3)}};  // eigenvalues 1, 2
  auto ab = rational_eigenpairs(a, &complete);
  CHECK(complete);
  CHECK(ab.size() == 2);
}

TEST_CASE("gram_schmidt produces G-orthogonal columns spanning the same space") {
  Mat gram = Mat::identity(4);
  gram.at(0, 0) = Scalar(2);
  for (int trial = 0; trial < 10; ++trial) {
    Mat basis = random_matrix(4, 3);
    if (rank(basis) != 3) continue;
    Mat gs = gram_schmidt(basis, gram);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        Scalar ip(0);
        for (std::size_t r = 0; r < 4; ++r)
          for (std::size_t c = 0; c < 4; ++c)
            ip += gs.at(r, i) * gram.at(r, c) * gs.at(c, j);
        CHECK(ip.is_zero());
      }
    CHECK(rank(hcat(basis, gs)) == 3);
  }
}
