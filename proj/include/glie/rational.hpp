#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

namespace glie {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Deterministic source of small random rationals. The draw from the engine is
/// reduced by modulo so the sequence is identical across standard libraries.
class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t seed, int bound = 7) : engine_(seed), bound_(bound) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  /// a/b with |a| <= bound, 1 <= b <= bound.
  Rational rational() {
    Rational q(integer(-bound_, bound_), integer(1, bound_));
    q.canonicalize();
    return q;
  }

  /// Same as rational() but never zero.
  Rational nonzero() {
    for (;;) {
      Rational q = rational();
      if (q != 0) return q;
    }
  }

  bool coin() { return (engine_() & 1U) != 0; }

  std::mt19937_64& engine() { return engine_; }
  int bound() const { return bound_; }

 private:
  std::mt19937_64 engine_;
  int bound_;
};

}  // namespace glie
