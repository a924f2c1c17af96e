#include "sugra47/reductive.hpp"

#include "sugra47/errors.hpp"

namespace sugra47 {

ReductiveSpace make_reductive(const LieAlgebraData& g, const Mat& h_basis, const Mat& m_basis) {
  std::size_t n = static_cast<std::size_t>(g.dim());
  if (h_basis.rows() != n || m_basis.rows() != n)
    throw structural_error("make_reductive: basis rows must match dim g");
  std::size_t dh = h_basis.cols(), dm = m_basis.cols();
  if (dh + dm != n) throw structural_error("make_reductive: h + m must fill g");
  Mat full = hcat(h_basis, m_basis);
  if (rank(full) != n) throw structural_error("make_reductive: h + m does not span g");
  if (!spans_subalgebra(g, h_basis))
    throw structural_error("make_reductive: h is not a subalgebra");

  ReductiveSpace s;
  s.g_ = g;
  s.h_ = h_basis;
  s.m_ = m_basis;
  s.mframe_ = Frame::euclidean(static_cast<int>(dm));

  // decompose an algebra element into (h-part | m-part) coordinates
  auto decompose = [&](const std::vector<Scalar>& v) {
    auto x = solve(full, v);
    if (!x) throw structural_error("make_reductive: decomposition failed");
    return *x;
  };

  // isotropy: [h_a, m_i] must have no h-component
  s.isotropy_.resize(dh, Mat(dm, dm));
  for (std::size_t a = 0; a < dh; ++a) {
    for (std::size_t i = 0; i < dm; ++i) {
      auto br = g.bracket(h_basis.col(a), m_basis.col(i));
      auto co = decompose(br);
      for (std::size_t b = 0; b < dh; ++b)
        if (!co[b].is_zero())
          throw structural_error("make_reductive: [h, m] leaves m (not reductive)");
      for (std::size_t j = 0; j < dm; ++j) s.isotropy_[a].at(j, i) = co[dh + j];
    }
  }

  // [m_i, m_j] split
  s.cm_.assign(dm * dm * dm, Scalar(0));
  s.ch_.assign(dh * dm * dm, Scalar(0));
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = i + 1; j < dm; ++j) {
      auto co = decompose(g.bracket(m_basis.col(i), m_basis.col(j)));
      for (std::size_t a = 0; a < dh; ++a) {
        s.ch_[(a * dm + i) * dm + j] = co[a];
        s.ch_[(a * dm + j) * dm + i] = -co[a];
      }
      for (std::size_t k = 0; k < dm; ++k) {
        s.cm_[(k * dm + i) * dm + j] = co[dh + k];
        s.cm_[(k * dm + j) * dm + i] = -co[dh + k];
      }
    }

  // almost-effectivity: the isotropy map is injective on h
  if (dh > 0) {
    Mat stacked(dm * dm, dh);
    for (std::size_t a = 0; a < dh; ++a)
      for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dm; ++j)
          stacked.at(i * dm + j, a) = s.isotropy_[a].at(i, j);
    s.almost_effective_ = rank(stacked) == dh;
  }
  return s;
}

ReductiveSpace reductive_split(const LieAlgebraData& g, const Mat& h_basis,
                               ComplementForm form) {
  std::size_t n = static_cast<std::size_t>(g.dim());
  std::size_t dh = h_basis.cols();
  if (dh == 0) return make_reductive(g, Mat(n, 0), Mat::identity(n));

  Mat b;
  if (form == ComplementForm::Killing) {
    b = g.killing_form();
  } else {
    if (!g.has_matrices())
      throw structural_error("reductive_split: trace form needs a matrix realization");
    b = Mat(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Mat prod = g.matrices()[i] * g.matrices()[j];
        Scalar tr(0);
        for (std::size_t r = 0; r < prod.rows(); ++r) tr += prod.at(r, r);
        b.at(i, j) = -tr;
        b.at(j, i) = -tr;
      }
  }
  // nondegeneracy of the form on h
  Mat bh = h_basis.transpose() * b * h_basis;
  if (rank(bh) != dh)
    throw structural_error(
        "reductive_split: bilinear form degenerates on h; supply an explicit m basis");
  // m = orthocomplement: rows h_a^t B
  Mat constraints = h_basis.transpose() * b;
  Mat m = nullspace(constraints);
  if (m.cols() != n - dh)
    throw structural_error("reductive_split: complement has unexpected dimension");
  return make_reductive(g, h_basis, m);
}

InvariantMetric InvariantMetric::diag(const std::vector<Scalar>& entries) {
  InvariantMetric g;
  g.gram = Mat(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].sign() <= 0)
      throw structural_error("InvariantMetric: diagonal entries must be positive");
    g.gram.at(i, i) = entries[i];
  }
  return g;
}

InvariantMetric InvariantMetric::identity(int n) {
  InvariantMetric g;
  g.gram = Mat::identity(static_cast<std::size_t>(n));
  return g;
}

InvariantMetric trace_metric_on_m(const ReductiveSpace& space, const Scalar& scale) {
  const LieAlgebraData& g = space.algebra();
  if (!g.has_matrices())
    throw structural_error("trace_metric_on_m: algebra has no matrix realization");
  std::size_t dm = static_cast<std::size_t>(space.dim_m());
  auto matrix_of = [&](const std::vector<Scalar>& coords) {
    Mat m(g.matrices()[0].rows(), g.matrices()[0].cols());
    for (std::size_t a = 0; a < coords.size(); ++a)
      if (!coords[a].is_zero()) m = m + g.matrices()[a].scaled(coords[a]);
    return m;
  };
  std::vector<Mat> mm;
  for (std::size_t i = 0; i < dm; ++i) mm.push_back(matrix_of(space.m_basis().col(i)));
  InvariantMetric metric;
  metric.gram = Mat(dm, dm);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = i; j < dm; ++j) {
      Mat prod = mm[i] * mm[j];
      Scalar tr(0);
      for (std::size_t r = 0; r < prod.rows(); ++r) tr += prod.at(r, r);
      metric.gram.at(i, j) = -tr * scale;
      metric.gram.at(j, i) = metric.gram.at(i, j);
    }
  return metric;
}

namespace {

bool is_diagonal(const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m.at(i, j).is_zero()) return false;
  return true;
}

}  // namespace

ReductiveSpace orthonormalized_space(const ReductiveSpace& space, const InvariantMetric& metric,
                                     const std::vector<int>& axis_signs) {
  std::size_t dm = static_cast<std::size_t>(space.dim_m());
  if (metric.gram.rows() != dm)
    throw structural_error("orthonormalized_space: metric size mismatch");
  // orthogonalize in m-coordinates, then normalize columns
  Mat coords = Mat::identity(dm);
  if (!is_diagonal(metric.gram)) coords = gram_schmidt(coords, metric.gram);
  std::vector<Scalar> norms(dm);
  for (std::size_t j = 0; j < dm; ++j) {
    Scalar n2(0);
    for (std::size_t a = 0; a < dm; ++a)
      for (std::size_t b = 0; b < dm; ++b)
        n2 += coords.at(a, j) * metric.gram.at(a, b) * coords.at(b, j);
    if (n2.sign() <= 0)
      throw structural_error("orthonormalized_space: metric is not positive definite");
    norms[j] = scalar_sqrt(n2);
  }
  if (!axis_signs.empty() && axis_signs.size() != dm)
    throw structural_error("orthonormalized_space: sign vector size mismatch");
  Mat new_m(space.m_basis().rows(), dm);
  for (std::size_t j = 0; j < dm; ++j) {
    Scalar factor = Scalar(1) / norms[j];
    if (!axis_signs.empty()) {
      if (axis_signs[j] == -1) factor = -factor;
      else if (axis_signs[j] != 1)
        throw structural_error("orthonormalized_space: signs must be +-1");
    }
    for (std::size_t r = 0; r < new_m.rows(); ++r) {
      Scalar acc(0);
      for (std::size_t a = 0; a < dm; ++a)
        acc += space.m_basis().at(r, a) * coords.at(a, j);
      new_m.at(r, j) = acc * factor;
    }
  }
  ReductiveSpace out = make_reductive(space.algebra(), space.h_basis(), new_m);
  // the metric must be ad(h)-invariant: isotropy skew in the orthonormal basis
  for (const auto& chi : out.isotropy()) {
    Mat sym = chi + chi.transpose();
    if (!sym.is_zero() && sym.max_abs() > 1e-9)
      throw structural_error("orthonormalized_space: metric is not isotropy-invariant");
  }
  return out;
}

ReductiveSpace rescaled_space(const ReductiveSpace& space, const Scalar& t) {
  if (t.sign() <= 0) throw structural_error("rescaled_space: scale must be positive");
  Mat new_m = space.m_basis().scaled(Scalar(1) / t);
  return make_reductive(space.algebra(), space.h_basis(), new_m);
}

std::vector<IsotypicBlock> isotypic_decomposition(const ReductiveSpace& space,
                                                  const ToleranceConfig& tol) {
  std::size_t dm = static_cast<std::size_t>(space.dim_m());
  std::size_t dh = static_cast<std::size_t>(space.dim_h());
  std::vector<IsotypicBlock> blocks;
  if (dh == 0) {
    // no isotropy: a single trivial block of full dimension
    blocks.push_back({static_cast<int>(dm), Scalar(0), true, Mat::identity(dm)});
    return blocks;
  }
  // negative trace form on the isotropy image
  Mat m(dh, dh);
  for (std::size_t a = 0; a < dh; ++a)
    for (std::size_t b = a; b < dh; ++b) {
      Mat prod = space.isotropy()[a] * space.isotropy()[b];
      Scalar tr(0);
      for (std::size_t r = 0; r < dm; ++r) tr += prod.at(r, r);
      m.at(a, b) = -tr;
      m.at(b, a) = -tr;
    }
  Mat minv = inverse(m, tol);
  Mat casimir(dm, dm);
  for (std::size_t a = 0; a < dh; ++a)
    for (std::size_t b = 0; b < dh; ++b) {
      if (minv.at(a, b).is_zero()) continue;
      casimir = casimir + (space.isotropy()[a] * space.isotropy()[b]).scaled(minv.at(a, b));
    }
  bool casimir_exact = true;
  for (std::size_t i = 0; i < dm && casimir_exact; ++i)
    for (std::size_t j = 0; j < dm; ++j)
      if (!casimir.at(i, j).exact()) { casimir_exact = false; break; }
  // float eigenvalues cluster at 10x the base tolerance
  ToleranceConfig cluster_tol = tol;
  if (!casimir_exact) cluster_tol.abs_tol *= 10;
  bool complete = false;
  auto pairs = rational_eigenpairs(casimir, &complete, cluster_tol);
  if (!complete)
    throw structural_error("isotypic_decomposition: Casimir spectrum is not rational");
  for (const auto& ep : pairs) {
    if (approx_zero(ep.value, tol)) {
      for (std::size_t c = 0; c < ep.vectors.cols(); ++c) {
        Mat one(dm, 1);
        one.set_col(0, ep.vectors.col(c));
        blocks.push_back({1, Scalar(0), true, one});
      }
    } else {
      blocks.push_back({static_cast<int>(ep.vectors.cols()), ep.value, false, ep.vectors});
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const IsotypicBlock& x, const IsotypicBlock& y) { return x.dim > y.dim; });
  return blocks;
}

std::vector<KForm> invariant_forms(const ReductiveSpace& space, int k) {
  const Frame& fr = space.mframe();
  std::vector<Mask> masks;
  for (Mask m = 0; m < (Mask{1} << fr.dim()); ++m)
    if (mask_degree(m) == k) masks.push_back(m);
  std::size_t nk = masks.size();
  std::size_t dh = static_cast<std::size_t>(space.dim_h());
  if (dh == 0) {
    std::vector<KForm> all;
    for (Mask m : masks) {
      KForm f(fr, k);
      f.add_term(m, Scalar(1));
      all.push_back(f);
    }
    return all;
  }
  Mat sys(dh * nk, nk);
  for (std::size_t c = 0; c < nk; ++c) {
    KForm basis_form(fr, k);
    basis_form.add_term(masks[c], Scalar(1));
    for (std::size_t a = 0; a < dh; ++a) {
      KForm acted = endo_action(space.isotropy()[a], basis_form);
      for (std::size_t r = 0; r < nk; ++r) sys.at(a * nk + r, c) = acted.coefficient(masks[r]);
    }
  }
  Mat ns = nullspace(sys);
  std::vector<KForm> out;
  for (std::size_t c = 0; c < ns.cols(); ++c) {
    KForm f(fr, k);
    for (std::size_t r = 0; r < nk; ++r) f.add_term(masks[r], ns.at(r, c));
    out.push_back(f);
  }
  return out;
}

bool is_invariant(const ReductiveSpace& space, const KForm& a) {
  for (const auto& chi : space.isotropy())
    if (!endo_action(chi, a).is_zero()) return false;
  return true;
}

KForm ce_differential(const ReductiveSpace& space, const KForm& a) {
  if (a.frame() != space.mframe())
    throw structural_error("ce_differential: form not on the space's m-frame");
  if (!is_invariant(space, a))
    throw structural_error("ce_differential: form is not isotropy-invariant");
  int dm = space.dim_m();
  KForm out(space.mframe(), a.degree() + 1 > dm ? dm : a.degree() + 1);
  if (a.degree() + 1 > dm) return out;
  for (const auto& [mask, coeff] : a.terms()) {
    auto idx = mask_indices(mask);
    for (std::size_t r = 0; r < idx.size(); ++r) {
      int gen = idx[r];
      Mask rest = mask & ~(Mask{1} << gen);
      int outer_sign = (r & 1) ? -1 : 1;
      for (int i = 0; i < dm; ++i) {
        for (int j = i + 1; j < dm; ++j) {
          const Scalar& c = space.cm(gen, i, j);
          if (c.is_zero()) continue;
          Mask two = (Mask{1} << i) | (Mask{1} << j);
          if (two & rest) continue;
          int s = merge_sign(two, rest) * outer_sign;
          Scalar v = -(c * coeff);
          out.add_term(two | rest, s < 0 ? -v : v);
        }
      }
    }
  }
  return out;
}

Mat ricci(const ReductiveSpace& space) {
  int dm = space.dim_m();
  int dh = space.dim_h();
  std::size_t n = static_cast<std::size_t>(dm);
  // Nomizu operator L_i = Lambda(e_i):
  //   (L_i)_{kj} = 1/2 cm(k,i,j) + 1/2 (cm(j,k,i) + cm(i,k,j))
  std::vector<Mat> lam(n, Mat(n, n));
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dm; ++j)
      for (int k = 0; k < dm; ++k) {
        Scalar v = (space.cm(k, i, j) + space.cm(j, k, i) + space.cm(i, k, j)) * Scalar(1, 2);
        lam[static_cast<std::size_t>(i)].at(static_cast<std::size_t>(k),
                                            static_cast<std::size_t>(j)) = v;
      }
  Mat ric(n, n);
  for (int i = 0; i < dm; ++i) {
    for (int j = 0; j < dm; ++j) {
      // R(e_i, e_j) = [L_i, L_j] - L_{[e_i,e_j]_m} - chi([e_i,e_j]_h)
      Mat r = lam[static_cast<std::size_t>(i)] * lam[static_cast<std::size_t>(j)] -
              lam[static_cast<std::size_t>(j)] * lam[static_cast<std::size_t>(i)];
      for (int k = 0; k < dm; ++k) {
        const Scalar& c = space.cm(k, i, j);
        if (!c.is_zero()) r = r - lam[static_cast<std::size_t>(k)].scaled(c);
      }
      for (int a = 0; a < dh; ++a) {
        const Scalar& c = space.ch(a, i, j);
        if (!c.is_zero()) r = r - space.isotropy()[static_cast<std::size_t>(a)].scaled(c);
      }
      // Ric(j, l) accumulates <R(e_i, e_j) e_l, e_i>
      for (int l = 0; l < dm; ++l)
        ric.at(static_cast<std::size_t>(j), static_cast<std::size_t>(l)) +=
            r.at(static_cast<std::size_t>(i), static_cast<std::size_t>(l));
    }
  }
  return ric;
}

std::optional<Scalar> einstein_constant(const Mat& ric, const ToleranceConfig& tol) {
  if (ric.rows() != ric.cols() || ric.rows() == 0) return std::nullopt;
  Scalar c = ric.at(0, 0);
  Mat dev = ric - Mat::identity(ric.rows()).scaled(c);
  for (std::size_t i = 0; i < dev.rows(); ++i)
    for (std::size_t j = 0; j < dev.cols(); ++j)
      if (!approx_zero(dev.at(i, j), tol)) return std::nullopt;
  return c;
}

}  // namespace sugra47
