#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace nglie {

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator, so equality is structural and printing is canonical.
using Rat = mpq_class;
using Int = mpz_class;

Rat rat_parse(const std::string& s);

/// Canonical rendering: "p/q", with "/q" omitted when q = 1.
std::string rat_str(const Rat& q);

inline Rat rat(long n, long d = 1) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rat& q);

/// Deterministic 64-bit stream (splitmix64). The verification harness derives
/// one independent stream per trial as split(seed, trial index), so reports are
/// reproducible bit for bit regardless of trial order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform-ish integer in [lo, hi], inclusive. Deterministic across
  /// platforms; sampling bias is irrelevant at the bounds used here.
  long range(long lo, long hi);

  /// Nonzero rational with |numerator| and denominator bounded by `bound`.
  Rat rat_nonzero(long bound);

  static Rng split(std::uint64_t seed, std::uint64_t salt);

 private:
  std::uint64_t state_;
};

}  // namespace nglie
