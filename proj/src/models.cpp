#include "sugra47/models.hpp"

#include <array>

#include "sugra47/errors.hpp"

namespace sugra47 {

namespace {

Mat e_minus(int n, int i, int j) {
  Mat m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Scalar(1);
  m.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = Scalar(-1);
  return m;
}

// complex matrix as pair (re, im) of rational matrices, realified as
// [[re, -im], [im, re]] interleaved per entry
Mat realify(const Mat& re, const Mat& im) {
  std::size_t n = re.rows();
  Mat r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r.at(2 * i, 2 * j) = re.at(i, j);
      r.at(2 * i + 1, 2 * j + 1) = re.at(i, j);
      r.at(2 * i, 2 * j + 1) = -im.at(i, j);
      r.at(2 * i + 1, 2 * j) = im.at(i, j);
    }
  return r;
}

// left multiplication by a quaternion a + bi + cj + dk on coordinates (1,i,j,k)
Mat quat_left(int a, int b, int c, int d) {
  auto s = [](int v) { return Scalar(v); };
  return Mat{{s(a), s(-b), s(-c), s(-d)},
             {s(b), s(a), s(-d), s(c)},
             {s(c), s(d), s(a), s(-b)},
             {s(d), s(-c), s(b), s(a)}};
}

}  // namespace

std::vector<Mat> so_n_matrices(int n) {
  std::vector<Mat> mats;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) mats.push_back(e_minus(n, i, j));
  return mats;
}

LieAlgebraData so_n(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  auto g = lie_from_matrices(so_n_matrices(n), std::move(labels));
  return g;
}

std::vector<Mat> orthogonal_algebra_of_form(const Mat& gram) {
  if (gram.rows() != gram.cols())
    throw structural_error("orthogonal_algebra_of_form: form must be square");
  std::size_t n = gram.rows();
  // unknowns: entries of A; equations: (A^t G + G A)_{ij} = 0 for i <= j
  Mat sys(n * (n + 1) / 2, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          // coefficient of A_{ab} in sum_k (A_{ki} G_{kj} + G_{ik} A_{kj})
          Scalar coeff(0);
          if (b == i) coeff += gram.at(a, j);
          if (b == j) coeff += gram.at(i, a);
          if (!coeff.is_zero()) sys.at(row, a * n + b) = coeff;
        }
      ++row;
    }
  Mat ns = nullspace(sys);
  std::vector<Mat> basis;
  for (std::size_t c = 0; c < ns.cols(); ++c) {
    Mat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) = ns.at(i * n + j, c);
    basis.push_back(a);
  }
  return basis;
}

std::vector<Mat> su3_matrices() {
  auto zero3 = [] { return Mat(3, 3); };
  std::vector<Mat> out;
  // off-diagonal real: E_ab - E_ba
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      Mat re = zero3();
      re.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = Scalar(1);
      re.at(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = Scalar(-1);
      out.push_back(realify(re, zero3()));
    }
  // off-diagonal imaginary: i(E_ab + E_ba)
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      Mat im = zero3();
      im.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = Scalar(1);
      im.at(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = Scalar(1);
      out.push_back(realify(zero3(), im));
    }
  // diagonal imaginary traceless: i(E_11 - E_22), i(E_22 - E_33)
  for (int a = 0; a < 2; ++a) {
    Mat im = zero3();
    im.at(static_cast<std::size_t>(a), static_cast<std::size_t>(a)) = Scalar(1);
    im.at(static_cast<std::size_t>(a + 1), static_cast<std::size_t>(a + 1)) = Scalar(-1);
    out.push_back(realify(zero3(), im));
  }
  return out;
}

std::vector<Mat> sp2_matrices() {
  // 2x2 quaternionic anti-Hermitian: imaginary diagonal (2 x 3) plus a free
  // off-diagonal quaternion (4), realified via 4x4 left-multiplication blocks
  auto embed = [](const Mat& q11, const Mat& q12, const Mat& q21, const Mat& q22) {
    Mat m(8, 8);
    auto put = [&](const Mat& q, std::size_t r0, std::size_t c0) {
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.at(r0 + i, c0 + j) = q.at(i, j);
    };
    put(q11, 0, 0);
    put(q12, 0, 4);
    put(q21, 4, 0);
    put(q22, 4, 4);
    return m;
  };
  Mat zero = quat_left(0, 0, 0, 0);
  std::array<Mat, 3> imag = {quat_left(0, 1, 0, 0), quat_left(0, 0, 1, 0),
                             quat_left(0, 0, 0, 1)};
  std::vector<Mat> out;
  for (const auto& u : imag) out.push_back(embed(u, zero, zero, zero));
  for (const auto& u : imag) out.push_back(embed(zero, zero, zero, u));
  // off-diagonal q with A21 = -conj(q)
  std::array<std::array<int, 4>, 4> units = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  for (const auto& u : units) {
    Mat q = quat_left(u[0], u[1], u[2], u[3]);
    Mat qc = quat_left(-u[0], u[1], u[2], u[3]);  // -conjugate
    out.push_back(embed(zero, q, qc, zero));
  }
  return out;
}

std::vector<Mat> su2_v4_matrices() {
  std::vector<Mat> out;
  for (auto [b, c, d] : {std::array{1, 0, 0}, std::array{0, 1, 0}, std::array{0, 0, 1}}) {
    Mat q = quat_left(0, b, c, d);
    Mat m(7, 7);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = q.at(i, j);
    out.push_back(m);
  }
  return out;
}

std::vector<Mat> so3_33_matrices() {
  std::vector<Mat> out;
  for (const auto& a : so_n_matrices(3)) {
    Mat m(7, 7);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        m.at(i, j) = a.at(i, j);
        m.at(3 + i, 3 + j) = a.at(i, j);
      }
    out.push_back(m);
  }
  return out;
}

HarmonicRep so3_harmonic_rep(int l) {
  if (l < 1) throw structural_error("so3_harmonic_rep: l >= 1");
  // monomials x^a y^b z^c of degree l
  struct Mono { int a, b, c; };
  std::vector<Mono> monos;
  for (int a = l; a >= 0; --a)
    for (int b = l - a; b >= 0; --b) monos.push_back({a, b, l - a - b});
  auto index = [&](int a, int b, int c) -> int {
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (monos[k].a == a && monos[k].b == b && monos[k].c == c) return static_cast<int>(k);
    return -1;
  };
  std::size_t nm = monos.size();

  // Laplacian into degree l-2 monomials
  std::vector<Mono> lower;
  for (int a = l - 2; a >= 0; --a)
    for (int b = l - 2 - a; b >= 0; --b) lower.push_back({a, b, l - 2 - a - b});
  auto lower_index = [&](int a, int b, int c) -> int {
    for (std::size_t k = 0; k < lower.size(); ++k)
      if (lower[k].a == a && lower[k].b == b && lower[k].c == c) return static_cast<int>(k);
    return -1;
  };
  Mat lap(lower.size(), nm);
  for (std::size_t k = 0; k < nm; ++k) {
    auto [a, b, c] = monos[k];
    if (a >= 2) lap.at(static_cast<std::size_t>(lower_index(a - 2, b, c)), k) += Scalar(a * (a - 1));
    if (b >= 2) lap.at(static_cast<std::size_t>(lower_index(a, b - 2, c)), k) += Scalar(b * (b - 1));
    if (c >= 2) lap.at(static_cast<std::size_t>(lower_index(a, b, c - 2)), k) += Scalar(c * (c - 1));
  }
  Mat harm = nullspace(lap);  // nm x (2l+1)

  // rotation vector fields on monomials
  auto field = [&](int which) {
    Mat m(nm, nm);
    for (std::size_t k = 0; k < nm; ++k) {
      auto [a, b, c] = monos[k];
      // L1 = y d/dz - z d/dy, L2 = z d/dx - x d/dz, L3 = x d/dy - y d/dx
      if (which == 0) {
        if (c >= 1) m.at(static_cast<std::size_t>(index(a, b + 1, c - 1)), k) += Scalar(c);
        if (b >= 1) m.at(static_cast<std::size_t>(index(a, b - 1, c + 1)), k) -= Scalar(b);
      } else if (which == 1) {
        if (a >= 1) m.at(static_cast<std::size_t>(index(a - 1, b, c + 1)), k) += Scalar(a);
        if (c >= 1) m.at(static_cast<std::size_t>(index(a + 1, b, c - 1)), k) -= Scalar(c);
      } else {
        if (b >= 1) m.at(static_cast<std::size_t>(index(a + 1, b - 1, c)), k) += Scalar(b);
        if (a >= 1) m.at(static_cast<std::size_t>(index(a - 1, b + 1, c)), k) -= Scalar(a);
      }
    }
    return m;
  };

  HarmonicRep rep;
  for (int w = 0; w < 3; ++w) {
    Mat on_mono = field(w) * harm;  // nm x (2l+1)
    // coordinates in the harmonic basis
    Mat coords(harm.cols(), harm.cols());
    for (std::size_t c = 0; c < on_mono.cols(); ++c) {
      auto x = solve(harm, on_mono.col(c));
      if (!x) throw structural_error("so3_harmonic_rep: rotation does not preserve harmonics");
      for (std::size_t r = 0; r < harm.cols(); ++r) coords.at(r, c) = (*x)[r];
    }
    rep.generators.push_back(coords);
  }

  // apolar Gram on monomials: <m, m> = a! b! c!, diagonal
  Mat gram_mono(nm, nm);
  for (std::size_t k = 0; k < nm; ++k) {
    auto [a, b, c] = monos[k];
    long long f = 1;
    for (int i = 2; i <= a; ++i) f *= i;
    for (int i = 2; i <= b; ++i) f *= i;
    for (int i = 2; i <= c; ++i) f *= i;
    gram_mono.at(k, k) = Scalar(f);
  }
  rep.gram = harm.transpose() * gram_mono * harm;
  return rep;
}

LieAlgebraData semidirect_flat(const std::vector<Mat>& action) {
  if (action.empty()) throw structural_error("semidirect_flat: need at least one generator");
  int dh = static_cast<int>(action.size());
  int dm = static_cast<int>(action[0].rows());
  LieAlgebraData h = lie_from_matrices(action);
  std::vector<std::tuple<int, int, int, Scalar>> triples;
  for (int a = 0; a < dh; ++a)
    for (int b = a + 1; b < dh; ++b)
      for (const auto& [k, c] : h.bracket_basis(a, b)) triples.emplace_back(a, b, k, c);
  for (int a = 0; a < dh; ++a)
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dm; ++j) {
        const Scalar& v = action[static_cast<std::size_t>(a)].at(static_cast<std::size_t>(j),
                                                                 static_cast<std::size_t>(i));
        if (!v.is_zero()) triples.emplace_back(a, dh + i, dh + j, v);
      }
  return LieAlgebraData(dh + dm, {}, triples);
}

std::vector<Mat> cross_product_matrices(const KForm& omega) {
  int n = omega.frame().dim();
  if (omega.degree() != 3) throw structural_error("cross_product_matrices: need a 3-form");
  // omega(e_i, e_j, e_k) with full antisymmetry from the stored coefficients
  auto eval = [&](int i, int j, int k) -> Scalar {
    if (i == j || j == k || i == k) return Scalar(0);
    Mask m = (Mask{1} << i) | (Mask{1} << j) | (Mask{1} << k);
    Scalar c = omega.coefficient(m);
    if (c.is_zero()) return c;
    // parity of the permutation sorting (i, j, k)
    int inv = (i > j) + (i > k) + (j > k);
    return (inv & 1) ? -c : c;
  };
  std::vector<Mat> out;
  for (int v = 0; v < n; ++v) {
    Mat t(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        t.at(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = eval(v, j, k);
    out.push_back(t);
  }
  return out;
}

std::vector<Mat> pad_matrices(const std::vector<Mat>& mats, int pad) {
  std::vector<Mat> out;
  for (const auto& m : mats) {
    Mat p(m.rows() + static_cast<std::size_t>(pad), m.cols() + static_cast<std::size_t>(pad));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) p.at(i, j) = m.at(i, j);
    out.push_back(p);
  }
  return out;
}

}  // namespace sugra47
