#include "sugra47/lie.hpp"

#include "sugra47/errors.hpp"

namespace sugra47 {

LieAlgebraData::LieAlgebraData(int dim, std::vector<std::string> labels,
                               const std::vector<std::tuple<int, int, int, Scalar>>& triples)
    : dim_(dim), labels_(std::move(labels)) {
  if (labels_.empty())
    for (int i = 1; i <= dim; ++i) labels_.push_back("x" + std::to_string(i));
  if (static_cast<int>(labels_.size()) != dim)
    throw structural_error("LieAlgebraData: label count mismatch");
  for (const auto& [i, j, k, c] : triples) {
    if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim)
      throw structural_error("LieAlgebraData: index out of range");
    if (i == j) throw structural_error("LieAlgebraData: [x,x] must vanish");
    if (c.is_zero()) continue;
    int a = i, b = j;
    Scalar v = c;
    if (a > b) {
      std::swap(a, b);
      v = -v;
    }
    auto& vec = brackets_[{a, b}];
    bool merged = false;
    for (auto& [kk, cc] : vec)
      if (kk == k) {
        cc += v;
        merged = true;
        break;
      }
    if (!merged) vec.emplace_back(k, v);
  }
  // prune zeros
  for (auto it = brackets_.begin(); it != brackets_.end();) {
    auto& vec = it->second;
    vec.erase(std::remove_if(vec.begin(), vec.end(),
                             [](const auto& p) { return p.second.is_zero(); }),
              vec.end());
    it = vec.empty() ? brackets_.erase(it) : std::next(it);
  }
  validate_jacobi();
}

LieAlgebraData LieAlgebraData::abelian(int dim) {
  return LieAlgebraData(dim, {}, {});
}

LieAlgebraData LieAlgebraData::direct_sum(const LieAlgebraData& a, const LieAlgebraData& b) {
  std::vector<std::tuple<int, int, int, Scalar>> triples;
  for (const auto& [ij, vec] : a.brackets_)
    for (const auto& [k, c] : vec) triples.emplace_back(ij.first, ij.second, k, c);
  for (const auto& [ij, vec] : b.brackets_)
    for (const auto& [k, c] : vec)
      triples.emplace_back(ij.first + a.dim_, ij.second + a.dim_, k + a.dim_, c);
  std::vector<std::string> labels = a.labels_;
  for (const auto& l : b.labels_) labels.push_back(l + "'");
  return LieAlgebraData(a.dim_ + b.dim_, std::move(labels), triples);
}

LieAlgebraData::SparseVec LieAlgebraData::bracket_basis(int i, int j) const {
  if (i == j) return {};
  bool flip = i > j;
  auto it = brackets_.find(flip ? std::pair{j, i} : std::pair{i, j});
  if (it == brackets_.end()) return {};
  if (!flip) return it->second;
  SparseVec out = it->second;
  for (auto& [k, c] : out) c = -c;
  return out;
}

std::vector<Scalar> LieAlgebraData::bracket(const std::vector<Scalar>& x,
                                            const std::vector<Scalar>& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw structural_error("bracket: coordinate size mismatch");
  std::vector<Scalar> out(static_cast<std::size_t>(dim_));
  for (const auto& [ij, vec] : brackets_) {
    auto [i, j] = ij;
    Scalar coeff = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)] -
                   x[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(i)];
    if (coeff.is_zero()) continue;
    for (const auto& [k, c] : vec) out[static_cast<std::size_t>(k)] += coeff * c;
  }
  return out;
}

Mat LieAlgebraData::ad(const std::vector<Scalar>& x) const {
  Mat a(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
  std::vector<Scalar> ej(static_cast<std::size_t>(dim_));
  for (int j = 0; j < dim_; ++j) {
    ej.assign(static_cast<std::size_t>(dim_), Scalar(0));
    ej[static_cast<std::size_t>(j)] = Scalar(1);
    auto col = bracket(x, ej);
    for (int i = 0; i < dim_; ++i)
      a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          col[static_cast<std::size_t>(i)];
  }
  return a;
}

Mat LieAlgebraData::killing_form() const {
  std::vector<Mat> ads;
  ads.reserve(static_cast<std::size_t>(dim_));
  std::vector<Scalar> e(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    e.assign(static_cast<std::size_t>(dim_), Scalar(0));
    e[static_cast<std::size_t>(i)] = Scalar(1);
    ads.push_back(ad(e));
  }
  Mat k(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      Mat prod = ads[static_cast<std::size_t>(i)] * ads[static_cast<std::size_t>(j)];
      Scalar tr(0);
      for (int r = 0; r < dim_; ++r)
        tr += prod.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
      k.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = tr;
      k.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = tr;
    }
  return k;
}

bool LieAlgebraData::unimodular() const {
  for (int i = 0; i < dim_; ++i) {
    Scalar tr(0);
    for (int j = 0; j < dim_; ++j)
      for (const auto& [k, c] : bracket_basis(i, j))
        if (k == j) tr += c;
    if (!tr.is_zero()) return false;
  }
  return true;
}

void LieAlgebraData::attach_matrices(std::vector<Mat> mats) {
  if (static_cast<int>(mats.size()) != dim_)
    throw structural_error("attach_matrices: expected one matrix per basis element");
  mats_ = std::move(mats);
}

void LieAlgebraData::validate_jacobi() const {
  std::vector<Scalar> ei(static_cast<std::size_t>(dim_));
  auto unit = [&](int i) {
    std::vector<Scalar> v(static_cast<std::size_t>(dim_));
    v[static_cast<std::size_t>(i)] = Scalar(1);
    return v;
  };
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      auto bij = bracket_basis(i, j);
      if (bij.empty()) continue;
      for (int k = j + 1; k < dim_; ++k) {
        std::vector<Scalar> total(static_cast<std::size_t>(dim_));
        auto acc = [&](const SparseVec& inner, int outer) {
          std::vector<Scalar> v(static_cast<std::size_t>(dim_));
          for (const auto& [m, c] : inner) v[static_cast<std::size_t>(m)] = c;
          auto res = bracket(v, unit(outer));
          for (int r = 0; r < dim_; ++r) total[static_cast<std::size_t>(r)] += res[static_cast<std::size_t>(r)];
        };
        acc(bracket_basis(i, j), k);
        acc(bracket_basis(j, k), i);
        acc(bracket_basis(k, i), j);
        for (const auto& v : total)
          if (!v.is_zero())
            throw structural_error("LieAlgebraData: Jacobi identity fails on (" +
                                   std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + ")");
      }
    }
}

namespace {

std::vector<Scalar> flatten(const Mat& m) {
  std::vector<Scalar> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

}  // namespace

LieAlgebraData lie_from_matrices(const std::vector<Mat>& mats, std::vector<std::string> labels) {
  if (mats.empty()) return LieAlgebraData::abelian(0);
  std::size_t n = mats[0].rows();
  for (const auto& m : mats)
    if (m.rows() != n || m.cols() != n)
      throw structural_error("lie_from_matrices: matrices must be square of equal size");
  Mat span(n * n, mats.size());
  for (std::size_t c = 0; c < mats.size(); ++c) span.set_col(c, flatten(mats[c]));
  if (rank(span) != mats.size())
    throw structural_error("lie_from_matrices: matrices are linearly dependent");
  std::vector<std::tuple<int, int, int, Scalar>> triples;
  int dim = static_cast<int>(mats.size());
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Mat comm = mats[static_cast<std::size_t>(i)] * mats[static_cast<std::size_t>(j)] -
                 mats[static_cast<std::size_t>(j)] * mats[static_cast<std::size_t>(i)];
      auto x = solve(span, flatten(comm));
      if (!x)
        throw structural_error("lie_from_matrices: commutator of generators " +
                               std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                               " is outside the span");
      for (int k = 0; k < dim; ++k)
        if (!(*x)[static_cast<std::size_t>(k)].is_zero())
          triples.emplace_back(i, j, k, (*x)[static_cast<std::size_t>(k)]);
    }
  LieAlgebraData g(dim, std::move(labels), triples);
  g.attach_matrices(mats);
  return g;
}

Mat centralizer(const LieAlgebraData& g, const Mat& h_basis) {
  std::size_t n = static_cast<std::size_t>(g.dim());
  if (h_basis.rows() != n) throw structural_error("centralizer: basis rows mismatch");
  if (h_basis.cols() == 0) return Mat::identity(n);
  if (!spans_subalgebra(g, h_basis))
    throw structural_error("centralizer: h_basis does not span a subalgebra");
  Mat stacked(n * h_basis.cols(), n);
  for (std::size_t a = 0; a < h_basis.cols(); ++a) {
    Mat ad_h = g.ad(h_basis.col(a));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked.at(a * n + i, j) = ad_h.at(i, j);
  }
  return nullspace(stacked);
}

bool spans_subalgebra(const LieAlgebraData& g, const Mat& basis) {
  if (basis.cols() == 0) return true;
  for (std::size_t i = 0; i < basis.cols(); ++i)
    for (std::size_t j = i + 1; j < basis.cols(); ++j) {
      auto br = g.bracket(basis.col(i), basis.col(j));
      Mat aug = basis;
      if (!solve(aug, br)) return false;
    }
  return true;
}

}  // namespace sugra47
