#ifndef TRIVSPEC_TESTS_COMMON_HPP
#define TRIVSPEC_TESTS_COMMON_HPP

#include <gtest/gtest.h>

#include <set>

#include "../support/oracles.hpp"

namespace tt {

using namespace trivspec;

inline Field F(std::uint64_t p) { return Field::prime(p); }
inline Field Q() { return Field::rationals(); }

inline AlgebraPtr triv(std::uint64_t p) { return Algebra::trivial(F(p)); }
// F_{p^2} through the default modulus.
inline AlgebraPtr ext2(std::uint64_t p) { return Algebra::default_extension(F(p), 2); }
inline AlgebraPtr hamilton() { return Algebra::quaternion(Q(), Q().from_int(-1), Q().from_int(-1)); }
inline AlgebraPtr gaussian() { return Algebra::quadratic(Q(), Q().zero(), Q().from_int(-1)); }
inline AlgebraPtr hyper() {
  Field f = Field::rational_functions(2);
  return Algebra::hyper_radicial(f, f.parse_scalar("s"));
}

inline DMatrix random_dmatrix(const AlgebraPtr& alg, std::size_t r, std::size_t c, Rng& rng) {
  return DMatrix::from_flat(alg, r, c, rng.vec(alg->base(), r * c * alg->degree()));
}

inline DMatrix random_invertible(const AlgebraPtr& alg, std::size_t n, Rng& rng) {
  while (true) {
    DMatrix m = random_dmatrix(alg, n, n, rng);
    if (rank_D(m) == n) return m;
  }
}

inline Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.scalar(f);
  return m;
}

inline Matrix random_invertible_F(const Field& f, std::size_t n, Rng& rng) {
  while (true) {
    Matrix m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

inline Vec el(const Field& f, std::initializer_list<std::int64_t> xs) {
  Vec v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

inline DMatrix dmat(const AlgebraPtr& alg, std::size_t r, std::size_t c, std::initializer_list<std::int64_t> xs) {
  return DMatrix::from_flat(alg, r, c, el(alg->base(), xs));
}

// Enumerates all elements of a space over a finite field.
inline void for_each_element(const OperatorSpace& s, const std::function<void(const DMatrix&)>& fn) {
  oracle::for_each_coeffs(s.field(), s.dim(), [&](const Vec& c) { fn(s.element(c)); });
}

}  // namespace tt

#endif
