#pragma once

#include <cstdint>
#include <vector>

#include "isog3/int128.hpp"

namespace isog3 {

// Bit table of squarefree flags for 1..limit.  Read-only after construction,
// so a single instance can be shared freely across threads.
class SquarefreeSieve {
 public:
  explicit SquarefreeSieve(u64 limit = default_limit);

  u64 limit() const { return limit_; }

  // Table lookup for n <= limit, trial division up to sqrt(n) above it.
  bool is_squarefree(u64 n) const;

 private:
  static constexpr u64 default_limit = u64{1} << 24;

  bool lookup(u64 n) const { return (bits_[n >> 6] >> (n & 63)) & 1; }

  u64 limit_;
  std::vector<u64> bits_;
};

// Trial-division squarefreeness test, independent of any sieve.
bool is_squarefree_slow(u64 n);

// Moebius function: 0 if n has a squared prime factor, else (-1)^(#primes).
int mobius(u64 n);

// #{1 <= b <= t : no prime l has l^6 | b}, exactly, as
// sum over d <= t^(1/6) of mu(d) * floor(t / d^6).
u64 count_sixth_power_free(u64 t);

// Partial sum of 1/u over squarefree u <= x, by direct summation in
// increasing order of u.
double squarefree_harmonic(double x, const SquarefreeSieve& sieve);

// H_i(x): same sum restricted to gcd(u, 6) = i.  Requires i in {1,2,3,6}.
double squarefree_harmonic_coprime6(double x, int i, const SquarefreeSieve& sieve);

}  // namespace isog3
