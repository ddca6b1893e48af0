#ifndef TRIVSPEC_TESTS_ORACLES_HPP
#define TRIVSPEC_TESTS_ORACLES_HPP

// Brute-force references used by the tests.  They only rely on scalar
// arithmetic, determinants and plain enumeration, never on the routines they
// are compared against.

#include <functional>
#include <vector>

#include "trivspec/json_io.hpp"

namespace oracle {

using namespace trivspec;

// Calls fn on every coefficient vector of F_q^k in lexicographic order.
inline void for_each_coeffs(const Field& f, std::size_t k, const std::function<void(const Vec&)>& fn) {
  const std::uint64_t q = f.characteristic();
  std::vector<std::uint64_t> t(k, 0);
  while (true) {
    Vec c;
    for (auto x : t) c.push_back(f.element(x));
    fn(c);
    std::size_t i = k;
    while (i > 0 && ++t[i - 1] == q) t[--i] = 0;
    if (i == 0) return;
  }
}

// Realified element sum c_i B_i, built entry by entry from the D-matrices.
inline Matrix realify_by_hand(const DMatrix& m) {
  const Algebra& a = *m.algebra();
  const std::size_t d = a.degree();
  Matrix out(a.base(), m.rows() * d, m.cols() * d);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Vec e = m.entry(i, j);
      for (std::size_t l = 0; l < d; ++l) {
        const Vec col = a.mul(e, a.basis(l));
        for (std::size_t k = 0; k < d; ++k) out(i * d + k, j * d + l) = col[k];
      }
    }
  return out;
}

// Number of elements of S with a nonzero fixed vector, by determinants.
inline std::uint64_t count_fixed_elements(const OperatorSpace& s) {
  const Field& f = s.field();
  const std::size_t nd = s.rows() * s.algebra()->degree();
  const Matrix id = Matrix::identity(f, nd);
  std::uint64_t bad = 0;
  for_each_coeffs(f, s.dim(), [&](const Vec& c) {
    DMatrix m(s.algebra(), s.rows(), s.cols());
    for (std::size_t i = 0; i < c.size(); ++i) m = m + s.basis()[i].scaled(c[i]);
    if (determinant(realify_by_hand(m) - id).is_zero()) ++bad;
  });
  return bad;
}

// Every x with m x = x, by enumerating F_q^N.
inline std::vector<Vec> fixed_vectors(const Matrix& m) {
  std::vector<Vec> out;
  for_each_coeffs(m.field(), m.cols(), [&](const Vec& x) {
    if (!is_zero_vec(x) && m * x == x) out.push_back(x);
  });
  return out;
}

// Minimum rank over all elements of an affine space over a finite field.
inline std::size_t min_rank_affine(const AffineSpace& a) {
  std::size_t best = SIZE_MAX;
  for_each_coeffs(a.base.algebra()->base(), a.direction.dim(),
                  [&](const Vec& c) { best = std::min(best, rank(realify_by_hand(a.element(c)))); });
  return best / a.base.algebra()->degree();
}

// Dimension of the largest subspace of F_q^N all of whose vectors satisfy
// pred, by enumerating every set of basis vectors in increasing index order.
// Only usable for q^N in the low hundreds.
inline std::size_t max_subspace_bruteforce(const Field& f, std::size_t N, const std::function<bool(const Vec&)>& pred) {
  const std::uint64_t q = f.characteristic();
  const std::uint64_t total = ipow(q, N);
  std::vector<Vec> all;
  std::vector<bool> good;
  for_each_coeffs(f, N, [&](const Vec& v) {
    all.push_back(v);
    good.push_back(pred(v));
  });
  auto index_of = [&](const Vec& v) {
    std::uint64_t idx = 0;
    for (const auto& x : v) idx = idx * q + x.mod_value();
    return idx;
  };
  std::size_t best = 0;
  // Span as a membership bitmap; grow it by one good vector at a time.
  std::function<void(std::vector<bool>&, std::size_t, std::uint64_t)> grow = [&](std::vector<bool>& span, std::size_t dim,
                                                                               std::uint64_t from) {
    best = std::max(best, dim);
    for (std::uint64_t v = from; v < total; ++v) {
      if (span[v] || !good[v]) continue;
      std::vector<bool> next(total, false);
      bool ok = true;
      for (std::uint64_t w = 0; w < total && ok; ++w) {
        if (!span[w]) continue;
        for (std::uint64_t lam = 0; lam < q; ++lam) {
          std::uint64_t idx = index_of(add(all[w], scale(f.element(lam), all[v])));
          if (!good[idx]) {
            ok = false;
            break;
          }
          next[idx] = true;
        }
      }
      if (ok) grow(next, dim + 1, v + 1);
    }
  };
  std::vector<bool> zero(total, false);
  zero[0] = true;
  grow(zero, 0, 1);
  return best;
}

// Matrix of a -> a^p on the coordinates of a finite extension.
inline Matrix frobenius_matrix(const Algebra& a) {
  const std::size_t d = a.degree();
  Matrix m(a.base(), d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec img = a.pow(a.basis(j), a.base().characteristic());
    for (std::size_t k = 0; k < d; ++k) m(k, j) = img[k];
  }
  return m;
}

// {M : M^* = -M} by solving the linear conditions entry by entry.
inline OperatorSpace skew_hermitian_space(const AlgebraPtr& alg, std::size_t n, const Matrix& sigma) {
  const Field& f = alg->base();
  const std::size_t d = alg->degree(), N = n * n * d;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec r = zero_vec(f, N);
        r[(i * n + j) * d + k] += f.one();
        for (std::size_t l = 0; l < d; ++l) r[(j * n + i) * d + l] += sigma(k, l);
        rows.push_back(std::move(r));
      }
  return OperatorSpace::from_coords(alg, n, n, FSubspace::span(f, N, kernel(Matrix::from_rows(f, rows, N))));
}

}  // namespace oracle

#endif
