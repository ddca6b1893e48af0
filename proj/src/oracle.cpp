#include "trivspec/oracle.hpp"

#include <algorithm>

namespace trivspec {

namespace {

using Row = std::vector<std::uint64_t>;

struct Search {
  const AlgebraPtr& alg;
  std::size_t n, N, nd;
  std::uint64_t q, budget;
  const std::function<bool(const Matrix&)>& pred;
  std::vector<Matrix> unit_real;  // realified elementary matrices, one per coordinate
  OracleResult res;
  std::vector<Row> best_key;
  bool stopped = false;

  Matrix realify(const Row& v) const {
    Matrix m(alg->base(), nd, nd);
    for (std::size_t c = 0; c < N; ++c)
      if (v[c]) m = m + unit_real[c].scaled(alg->base().element(v[c]));
    return m;
  }

  // Rows sorted by pivot, as the canonical key of the space.
  static std::vector<Row> key_of(std::vector<std::pair<std::size_t, Row>> rows) {
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Row> k;
    for (auto& r : rows) k.push_back(std::move(r.second));
    return k;
  }

  void record(const std::vector<std::pair<std::size_t, Row>>& rows) {
    auto key = key_of(rows);
    if (rows.size() > res.max_dim || !res.witness || (rows.size() == res.max_dim && key < best_key)) {
      res.max_dim = rows.size();
      best_key = key;
      std::vector<Vec> gens;
      for (const auto& r : key) {
        Vec v;
        for (auto x : r) v.push_back(alg->base().element(x));
        gens.push_back(std::move(v));
      }
      res.witness = OperatorSpace::from_coords(alg, n, n, FSubspace::span(alg->base(), N, gens));
    }
  }

  void dfs(std::vector<std::pair<std::size_t, Row>>& rows, std::vector<bool>& piv, std::size_t min_pivot,
           const std::vector<Matrix>& elems) {
    ++res.spaces_visited;
    record(rows);
    const Field& F = alg->base();
    for (std::size_t p = 0; p < min_pivot && !stopped; ++p) {
      std::vector<std::size_t> free;
      for (std::size_t c = p + 1; c < N; ++c)
        if (!piv[c]) free.push_back(c);
      std::vector<std::uint64_t> t(free.size(), 0);
      while (!stopped) {
        Row v(N, 0);
        v[p] = 1;
        for (std::size_t i = 0; i < free.size(); ++i) v[free[i]] = t[i];
        Matrix vr = realify(v);
        std::vector<Matrix> layer;
        bool ok = true;
        for (std::uint64_t lam = 1; lam < q && ok; ++lam) {
          Matrix lv = vr.scaled(F.element(lam));
          for (const auto& s : elems) {
            if (++res.element_checks > budget) {
              stopped = true;
              ok = false;
              break;
            }
            Matrix m = s + lv;
            if (!pred(m)) {
              ok = false;
              break;
            }
            layer.push_back(std::move(m));
          }
        }
        if (ok) {
          std::vector<Matrix> next = elems;
          next.insert(next.end(), layer.begin(), layer.end());
          rows.emplace_back(p, v);
          piv[p] = true;
          dfs(rows, piv, p, next);
          piv[p] = false;
          rows.pop_back();
        }
        std::size_t i = free.size();
        while (i > 0 && ++t[i - 1] == q) t[--i] = 0;
        if (i == 0) break;
      }
    }
  }
};

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

}  // namespace

std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t N, std::size_t k) {
  if (k > N) return 0;
  // prod_{i<k} (q^{N-i} - 1) / (q^{i+1} - 1), computed by the recurrence
  // [N, k] = [N-1, k-1] + q^k [N-1, k].
  std::vector<std::vector<std::uint64_t>> t(N + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (std::size_t m = 0; m <= N; ++m) {
    t[m][0] = 1;
    for (std::size_t j = 1; j <= std::min(m, k); ++j) {
      std::uint64_t qj = 1;
      for (std::size_t e = 0; e < j; ++e) qj = sat_mul(qj, q);
      t[m][j] = sat_add(t[m - 1][j - 1], m - 1 >= j ? sat_mul(qj, t[m - 1][j]) : 0);
    }
  }
  return t[N][k];
}

OracleResult exhaustive_max_subspace(const AlgebraPtr& alg, std::size_t n, std::uint64_t budget,
                                     const std::function<bool(const Matrix&)>& pred) {
  const Field& F = alg->base();
  if (!F.is_finite()) fail(Errc::Unsupported, "oracle search needs a finite field");
  const std::size_t d = alg->degree();
  Search s{alg, n, n * n * d, n * d, F.characteristic(), budget, pred, {}, {}, {}, false};
  for (std::size_t c = 0; c < s.N; ++c) {
    Vec flat = zero_vec(F, s.N);
    flat[c] = F.one();
    s.unit_real.push_back(DMatrix::from_flat(alg, n, n, flat).realify());
  }
  for (std::size_t k = 1; k <= s.N; ++k)
    s.res.predicted_checks = sat_add(s.res.predicted_checks,
                                     sat_mul(gaussian_binomial(s.q, s.N, k), sat_mul(ipow(s.q, k - 1), s.q - 1)));
  std::vector<std::pair<std::size_t, Row>> rows;
  std::vector<bool> piv(s.N, false);
  Matrix zero(F, s.nd, s.nd);
  if (!pred(zero)) fail(Errc::InvalidInput, "the predicate rejects 0");
  s.dfs(rows, piv, s.N, {zero});
  s.res.verdict = s.stopped ? Verdict::BudgetExceeded : Verdict::Certified;
  if (s.stopped) s.res.element_checks = budget;
  return s.res;
}

OracleResult exhaustive_max_trivspec(const AlgebraPtr& alg, std::size_t n, std::uint64_t budget) {
  const std::size_t nd = n * alg->degree();
  const Matrix id = Matrix::identity(alg->base(), nd);
  return exhaustive_max_subspace(alg, n, budget, [&](const Matrix& m) { return rank(m - id) == nd; });
}

OracleResult exhaustive_max_diagonalisable(const AlgebraPtr& alg, std::size_t n, std::uint64_t budget) {
  return exhaustive_max_subspace(alg, n, budget,
                                 [](const Matrix& m) { return splits_with_distinct_roots(min_poly_over_F(m)); });
}

OracleResult exhaustive_max_semisimple(const AlgebraPtr& alg, std::size_t n, std::uint64_t budget) {
  return exhaustive_max_subspace(alg, n, budget, [](const Matrix& m) { return is_separable(min_poly_over_F(m)); });
}

SubspaceCount count_trivspec_subspaces(const AlgebraPtr& alg, std::size_t n, std::size_t k, std::uint64_t budget) {
  const Field& F = alg->base();
  if (!F.is_finite()) fail(Errc::Unsupported, "subspace enumeration needs a finite field");
  const std::size_t d = alg->degree(), N = n * n * d, nd = n * d;
  const std::uint64_t q = F.characteristic();
  const std::uint64_t spaces = gaussian_binomial(q, N, k);
  if (spaces == UINT64_MAX || sat_mul(spaces, ipow(q, k)) > budget)
    fail(Errc::BudgetExceeded, "too many subspaces for plain enumeration");
  SubspaceCount out;
  const Matrix id = Matrix::identity(F, nd);
  // Pivot sets in lexicographic order, then free entries as an odometer.
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    std::vector<bool> is_piv(N, false);
    for (auto p : pivots) is_piv[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> slots;  // (row, column)
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = pivots[r] + 1; c < N; ++c)
        if (!is_piv[c]) slots.emplace_back(r, c);
    std::vector<std::uint64_t> t(slots.size(), 0);
    while (true) {
      std::vector<Vec> rows(k, zero_vec(F, N));
      for (std::size_t r = 0; r < k; ++r) rows[r][pivots[r]] = F.one();
      for (std::size_t i = 0; i < slots.size(); ++i) rows[slots[i].first][slots[i].second] = F.element(t[i]);
      std::vector<Matrix> real;
      for (const auto& r : rows) real.push_back(DMatrix::from_flat(alg, n, n, r).realify());
      ++out.total;
      bool passes = true;
      for (std::uint64_t idx = 0; idx < ipow(q, k) && passes; ++idx) {
        Matrix m = id.scaled(-F.one());
        std::uint64_t rest = idx;
        for (std::size_t r = k; r-- > 0;) {
          m = m + real[r].scaled(F.element(rest % q));
          rest /= q;
        }
        passes = !determinant(m).is_zero();
      }
      if (passes) {
        ++out.passing;
        if (!out.first) out.first = OperatorSpace::from_coords(alg, n, n, FSubspace::span(F, N, rows));
      }
      std::size_t i = t.size();
      while (i > 0 && ++t[i - 1] == q) t[--i] = 0;
      if (i == 0) break;
    }
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == N - k + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

std::vector<OperatorSpace> random_space_fuzzer(const AlgebraPtr& alg, std::size_t rows, std::size_t cols,
                                               std::size_t count, std::uint64_t seed, std::optional<std::size_t> dim) {
  Rng rng(seed);
  const Field& F = alg->base();
  const std::size_t N = rows * cols * alg->degree();
  std::vector<OperatorSpace> out;
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t k = dim ? std::min(*dim, N) : rng.below(N + 1);
    // Uniform k-subset of pivots by partial Fisher-Yates.
    std::vector<std::size_t> idx(N);
    for (std::size_t i = 0; i < N; ++i) idx[i] = i;
    for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng.below(N - i)]);
    std::vector<std::size_t> pivots(idx.begin(), idx.begin() + k);
    std::sort(pivots.begin(), pivots.end());
    std::vector<bool> is_piv(N, false);
    for (auto p : pivots) is_piv[p] = true;
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < k; ++r) {
      Vec v = zero_vec(F, N);
      v[pivots[r]] = F.one();
      for (std::size_t j = pivots[r] + 1; j < N; ++j)
        if (!is_piv[j]) v[j] = rng.scalar(F);
      gens.push_back(std::move(v));
    }
    out.push_back(OperatorSpace::from_coords(alg, rows, cols, FSubspace::span(F, N, gens)));
  }
  return out;
}

}  // namespace trivspec
