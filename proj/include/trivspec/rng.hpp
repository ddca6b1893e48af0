#ifndef TRIVSPEC_RNG_HPP
#define TRIVSPEC_RNG_HPP

#include <cstdint>
#include <random>

#include "trivspec/field.hpp"

namespace trivspec {

// mt19937_64 with hand-rolled reductions so that streams are identical
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Random scalar: uniform on finite fields, small integers / short
  // polynomials on infinite ones.
  Scalar scalar(const Field& f, std::int64_t box = 5) {
    switch (f.kind()) {
      case FieldKind::Prime: return f.element(below(f.characteristic()));
      case FieldKind::Rational: return f.from_int(between(-box, box));
      case FieldKind::RationalFunction: {
        std::vector<std::uint64_t> c(3);
        for (auto& x : c) x = below(f.characteristic());
        return Scalar(RatFunc(FpPoly(f.characteristic(), c), FpPoly::constant(f.characteristic(), 1)));
      }
    }
    return f.zero();
  }

  Vec vec(const Field& f, std::size_t n, std::int64_t box = 5) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f, box));
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace trivspec

#endif
