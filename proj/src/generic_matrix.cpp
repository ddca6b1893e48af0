#include "trivspec/generic_matrix.hpp"

#include "trivspec/alternator.hpp"

#include <cmath>
#include <map>

namespace trivspec {

PolyMatrix::PolyMatrix(Field f, std::size_t nvars, std::size_t rows, std::size_t cols)
    : field_(f), nvars_(nvars), rows_(rows), cols_(cols), e_(rows * cols, MPoly(f, nvars)) {}

PolyMatrix PolyMatrix::from_entries(const Field& f, std::size_t nvars, std::vector<std::vector<MPoly>> entries,
                                    std::optional<unsigned> deg) {
  const std::size_t rows = entries.size(), cols = rows ? entries[0].size() : 0;
  PolyMatrix m(f, nvars, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) fail(Errc::ShapeMismatch, "ragged polynomial matrix");
    for (std::size_t j = 0; j < cols; ++j) {
      if (deg && !entries[i][j].is_homogeneous(*deg))
        fail(Errc::NotHomogeneous, "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not " +
                                       std::to_string(*deg) + "-homogeneous");
      m(i, j) = std::move(entries[i][j]);
    }
  }
  return m;
}

PolyMatrix PolyMatrix::generic_of_basis(const Field& f, std::size_t rows, std::size_t cols,
                                        const std::vector<Matrix>& basis) {
  PolyMatrix m(f, basis.size(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Vec c(basis.size());
      for (std::size_t l = 0; l < basis.size(); ++l) c[l] = basis[l](i, j);
      m(i, j) = MPoly::linear(f, c);
    }
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) fail(Errc::ShapeMismatch, "polynomial matrix product");
  PolyMatrix r(field_, nvars_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const MPoly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) = r(i, j) + a * o(k, j);
    }
  return r;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  PolyMatrix r(field_, nvars_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

Matrix PolyMatrix::eval(const Vec& z) const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(z);
  return m;
}

int PolyMatrix::degree() const {
  int d = -1;
  for (const auto& p : e_) d = std::max(d, p.degree());
  return d;
}

PolyMatrix generic_of(const OperatorSpace& s) {
  const std::size_t d = s.algebra()->degree();
  const std::size_t m = s.cols() * d, rows = s.rows() * d;
  const Field& F = s.field();
  PolyMatrix g(F, m, rows, s.dim());
  for (std::size_t l = 0; l < s.dim(); ++l) {
    const Matrix& a = s.realified_basis()[l];
    for (std::size_t i = 0; i < rows; ++i) g(i, l) = MPoly::linear(F, a.row(i));
  }
  return g;
}

namespace {

std::size_t bareiss_rank(const PolyMatrix& m) {
  const Field& F = m.field();
  std::vector<std::vector<MPoly>> a(m.rows(), std::vector<MPoly>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  MPoly prev = MPoly::constant(F, m.nvars(), F.one());
  std::size_t r = 0;
  const std::size_t lim = std::min(m.rows(), m.cols());
  for (std::size_t k = 0; k < lim; ++k) {
    // Sparsest nonzero pivot in the trailing block.
    std::size_t pi = 0, pj = 0, best = SIZE_MAX;
    for (std::size_t i = k; i < m.rows(); ++i)
      for (std::size_t j = k; j < m.cols(); ++j)
        if (!a[i][j].is_zero() && a[i][j].terms().size() < best) {
          best = a[i][j].terms().size();
          pi = i;
          pj = j;
        }
    if (best == SIZE_MAX) break;
    std::swap(a[k], a[pi]);
    for (auto& row : a) std::swap(row[k], row[pj]);
    for (std::size_t i = k + 1; i < m.rows(); ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        MPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = num.exact_div(prev);
        if (!q) fail(Errc::Internal, "fraction-free elimination produced an inexact quotient");
        a[i][j] = std::move(*q);
      }
      a[i][k] = MPoly(F, m.nvars());
    }
    prev = a[k][k];
    ++r;
  }
  return r;
}

Vec random_point(const Field& f, std::size_t n, Rng& rng) {
  if (f.is_finite()) return rng.vec(f, n);
  return rng.vec(f, n, 1 << 20);
}

}  // namespace

PolyRank poly_rank(const PolyMatrix& m, Rng& rng, bool force_exact) {
  PolyRank res;
  const Field& F = m.field();
  const std::size_t small = std::min(m.rows(), m.cols());
  const int deg = std::max(m.degree(), 1);
  // Schwartz-Zippel: a nonzero minor of size k has degree <= k deg.
  const double box = F.is_finite() ? static_cast<double>(F.characteristic()) : static_cast<double>(2 * (1 << 20) + 1);
  const double miss = static_cast<double>(small) * deg / box;
  if (force_exact || small <= 6 || miss >= 0.5) {
    res.rank = bareiss_rank(m);
    res.verdict = Verdict::Certified;
    res.method = "fraction-free elimination";
  } else {
    const int trials = static_cast<int>(std::ceil(30.0 / -std::log2(miss)));
    for (int t = 0; t < trials && res.rank < small; ++t)
      res.rank = std::max(res.rank, rank(m.eval(random_point(F, m.nvars(), rng))));
    if (res.rank == small) {
      res.verdict = Verdict::Certified;
      res.method = "random specialisation of full rank";
    } else {
      res.verdict = Verdict::CertifiedProbabilistic;
      res.failure_bound = std::pow(miss, trials);
      res.method = "random specialisation, " + std::to_string(trials) + " points";
    }
  }
  res.maxrk_interpretation = !F.is_finite() || F.characteristic() > res.rank;
  return res;
}

std::size_t spanning_rank(const std::vector<MPoly>& row) {
  if (row.empty()) return 0;
  std::vector<Vec> coeffs;
  for (const auto& p : row) coeffs.push_back(p.linear_coeffs());
  return rank(Matrix::from_rows(row[0].field(), coeffs, row[0].nvars()));
}

std::vector<Matrix> catchers(const PolyMatrix& m) {
  const Field& F = m.field();
  const std::size_t p = m.rows(), nv = m.nvars(), nu = p * nv;
  // Unknown c(i, l) at index i * nv + l; one equation per column and monomial z_l z_k.
  std::vector<Vec> eqs;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::map<std::pair<std::size_t, std::size_t>, Vec> rows;
    for (std::size_t i = 0; i < p; ++i) {
      Vec a = m(i, j).linear_coeffs();
      for (std::size_t k = 0; k < nv; ++k) {
        if (a[k].is_zero()) continue;
        for (std::size_t l = 0; l < nv; ++l) {
          std::pair<std::size_t, std::size_t> key{std::min(l, k), std::max(l, k)};
          auto it = rows.find(key);
          if (it == rows.end()) it = rows.emplace(key, zero_vec(F, nu)).first;
          it->second[i * nv + l] += a[k];
        }
      }
    }
    for (auto& [key, v] : rows) eqs.push_back(std::move(v));
  }
  std::vector<Vec> sol;
  if (eqs.empty()) {
    for (std::size_t t = 0; t < nu; ++t) sol.push_back(unit_vec(F, nu, t));
  } else {
    sol = kernel(Matrix::from_rows(F, eqs, nu));
  }
  std::vector<Matrix> out;
  FSubspace canon = FSubspace::span(F, nu, sol);
  for (const auto& v : canon.basis()) {
    Matrix c(F, p, nv);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t l = 0; l < nv; ++l) c(i, l) = v[i * nv + l];
    out.push_back(std::move(c));
  }
  return out;
}

static bool catches(const Matrix& c, const PolyMatrix& m) {
  PolyMatrix row(m.field(), m.nvars(), 1, m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) row(0, i) = MPoly::linear(m.field(), c.row(i));
  return (row * m).is_zero();
}

AlternatorCatcherReport alternator_catcher_check(const OperatorSpace& s) {
  if (!is_target_reduced(s)) fail(Errc::NotTargetReduced, "the space is not target-reduced");
  const Field& F = s.field();
  AlternatorCatcherReport rep;
  auto alt = alternator_space(s);
  PolyMatrix g = generic_of(s);
  auto cat = catchers(g);
  rep.dim_alt = alt.size();
  rep.dim_catch = cat.size();
  // b -> (z -> b(z, e_i))_i has coefficient matrix G^T.
  std::vector<Vec> flat;
  rep.forward_ok = true;
  for (const auto& G : alt) {
    Matrix c = G.transpose();
    if (!catches(c, g)) rep.forward_ok = false;
    Vec v;
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t l = 0; l < c.cols(); ++l) v.push_back(c(i, l));
    flat.push_back(std::move(v));
  }
  if (!flat.empty() && rank(Matrix::from_rows(F, flat, flat[0].size())) != flat.size()) rep.forward_ok = false;
  rep.backward_ok = true;
  for (const auto& c : cat) {
    Matrix G = c.transpose();
    for (const auto& a : s.realified_basis())
      if (!is_alternating_for(G, a)) rep.backward_ok = false;
  }
  return rep;
}

Matrix j_matrix(const Field& f, std::size_t n, std::size_t p, std::size_t r) {
  Matrix j(f, n, p);
  for (std::size_t i = 0; i < r; ++i) j(i, i) = f.one();
  return j;
}

static DMatrix to_dmatrix(const AlgebraPtr& triv, const Matrix& m) {
  Vec flat;
  flat.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) flat.push_back(m(i, j));
  return DMatrix::from_flat(triv, m.rows(), m.cols(), std::move(flat));
}

FlandersAtkinsonReport flanders_atkinson_check(const OperatorSpace& space, std::size_t r, Rng& rng) {
  const Field& F = space.field();
  if (space.algebra()->degree() != 1) fail(Errc::InvalidInput, "expected a space of matrices over F");
  const std::size_t n = space.rows(), p = space.cols();
  if (r == 0 || r > std::min(n, p)) fail(Errc::InvalidInput, "r must lie in [1, min(n, p)]");
  if (F.is_finite() && F.characteristic() <= r) fail(Errc::CardinalityHypothesisFails, "|F| <= r");
  if (!space.contains(to_dmatrix(space.algebra(), j_matrix(F, n, p, r))))
    fail(Errc::HypothesisFails, "J_r does not belong to the space");
  FlandersAtkinsonReport rep;
  PolyMatrix M = PolyMatrix::generic_of_basis(F, n, p, space.realified_basis());
  rep.rank = poly_rank(M, rng);
  if (rep.rank.rank > r) {
    std::string where = "generic rank " + std::to_string(rep.rank.rank);
    for (int t = 0; t < 4096; ++t) {
      Vec z = random_point(F, M.nvars(), rng);
      if (rank(M.eval(z)) > r) {
        where += ", rank exceeds r at z = (";
        for (std::size_t i = 0; i < z.size(); ++i) where += (i ? ", " : "") + z[i].str();
        where += ")";
        break;
      }
    }
    fail(Errc::HypothesisViolated, where);
  }
  PolyMatrix A = M.block(0, 0, r, r), C = M.block(0, r, r, p - r), B = M.block(r, 0, n - r, r),
             D = M.block(r, r, n - r, p - r);
  auto first_nonzero = [](const PolyMatrix& x) {
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (!x(i, j).is_zero())
          return "(" + std::to_string(i) + ", " + std::to_string(j) + ") = " + x(i, j).str();
    return std::string();
  };
  if (!D.is_zero()) fail(Errc::IdentityViolated, "D != 0 at " + first_nonzero(D));
  rep.d_zero = true;
  // Powers of A satisfy a linear recurrence of length r, so k <= r suffices.
  PolyMatrix BA = B;
  for (std::size_t k = 0; k <= r; ++k) {
    PolyMatrix prod = BA * C;
    if (!prod.is_zero())
      fail(Errc::IdentityViolated, "B A^" + std::to_string(k) + " C != 0 at " + first_nonzero(prod));
    BA = BA * A;
  }
  rep.max_k = r;
  rep.note = "B A^k C = 0 checked for k = 0.." + std::to_string(r) + "; larger k follow from the recurrence of powers of A";
  return rep;
}

MPoly factor_collinear(const std::vector<MPoly>& x, const std::vector<MPoly>& y) {
  if (x.size() != y.size() || x.empty()) fail(Errc::ShapeMismatch, "rows of different lengths");
  if (spanning_rank(x) <= 1) fail(Errc::SpanningRankTooLow, "spanning rank of X is at most 1");
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] * y[j] != x[j] * y[i])
        fail(Errc::NotCollinear, "minor (" + std::to_string(i) + ", " + std::to_string(j) + ") does not vanish");
  std::size_t i0 = 0;
  while (x[i0].is_zero()) ++i0;
  auto q = y[i0].exact_div(x[i0]);
  if (!q) fail(Errc::NotCollinear, "X_" + std::to_string(i0) + " does not divide Y_" + std::to_string(i0));
  for (std::size_t j = 0; j < x.size(); ++j)
    if (*q * x[j] != y[j]) fail(Errc::NotCollinear, "Y_" + std::to_string(j) + " != p X_" + std::to_string(j));
  return *q;
}

static Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
  while (true) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.scalar(f);
    if (!determinant(m).is_zero()) return m;
  }
}

// Completes the columns to a basis of F^n with standard vectors.
static Matrix complete_basis(const Field& f, std::size_t n, std::vector<Vec> cols) {
  FSubspace cur = FSubspace::span(f, n, cols);
  for (std::size_t i = 0; i < n && cols.size() < n; ++i) {
    Vec e = unit_vec(f, n, i);
    if (!cur.contains(e)) {
      cols.push_back(e);
      cur = cur.sum(FSubspace::span(f, n, {e}));
    }
  }
  return Matrix::from_cols(f, cols, n);
}

OperatorSpace random_compression_space(const Field& f, std::size_t n, std::size_t p, std::size_t r, Rng& rng) {
  if (r == 0 || r > std::min(n, p)) fail(Errc::InvalidInput, "r must lie in [1, min(n, p)]");
  const std::size_t a = rng.below(r + 1), b = r - a;
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (i < a || j < b) {
        Matrix e(f, n, p);
        e(i, j) = f.one();
        gens.push_back(std::move(e));
      }
  Matrix K(f, n, p);
  for (std::size_t i = 0; i < a; ++i) K(i, b + i) = f.one();
  for (std::size_t j = 0; j < b; ++j) K(a + j, j) = f.one();
  Matrix P = random_invertible(f, n, rng), Q = random_invertible(f, p, rng);
  Matrix N = P * K * Q;
  // V = [complement | ker N], U = [N v_1 .. N v_r | completion]^{-1}, so U N V = J_r.
  auto ker = kernel(N);
  FSubspace ks = FSubspace::span(f, p, ker);
  std::vector<Vec> vcols;
  for (std::size_t j = 0; j < p && vcols.size() < r; ++j) {
    Vec e = unit_vec(f, p, j);
    if (!ks.contains(e)) {
      vcols.push_back(e);
      ks = ks.sum(FSubspace::span(f, p, {e}));
    }
  }
  std::vector<Vec> wcols;
  for (const auto& v : vcols) wcols.push_back(N * v);
  std::vector<Vec> all = vcols;
  all.insert(all.end(), ker.begin(), ker.end());
  Matrix V = Matrix::from_cols(f, all, p);
  Matrix U = *inverse(complete_basis(f, n, wcols));
  AlgebraPtr triv = Algebra::trivial(f);
  Matrix J = j_matrix(f, n, p, r);
  std::vector<DMatrix> out{to_dmatrix(triv, J)};
  // Random subspace of the conjugated compression space containing J_r.
  const std::size_t extra = rng.below(gens.size() + 1);
  for (std::size_t t = 0; t < extra; ++t) {
    Matrix m(f, n, p);
    for (const auto& g : gens) m = m + g.scaled(rng.scalar(f));
    out.push_back(to_dmatrix(triv, U * P * m * Q * V));
  }
  return OperatorSpace::span(triv, n, p, out);
}

}  // namespace trivspec
