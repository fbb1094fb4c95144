#include "isog3/census.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

#include "isog3/arith.hpp"
#include "isog3/parametrization.hpp"

namespace isog3 {

namespace {

constexpr u64 census_budget = 1'000'000'000'000'000'000ULL;

struct Partial {
  u64 n0 = 0;
  u64 n = 0;
  u64 visited = 0;
};

// Scans the u > 0 stratum u = r (mod shards).  All intermediates fit i128:
// at X = 10^18, u <= 1375, v <= 38, |w| <= ~8e5, so |T| <= ~9e14 and
// 3T^2 <= ~2.5e30.
void scan_stratum(u64 x, CountMode mode, const CensusOptions& opts, unsigned r,
                  unsigned shards, const SquarefreeSieve& sieve, Partial& out) {
  const i64 a_lim = a_cutoff(x);
  i64 big_a_max = 0;
  while (4 * i128(big_a_max + 1) * (big_a_max + 1) * (big_a_max + 1) <= i128(x)) ++big_a_max;
  const i128 x16 = i128(16) * x;

  i64 u_start = (r == 0) ? i64(shards) : i64(r);
  for (i64 u = u_start; u <= a_lim; u += i64(shards)) {
    if (!sieve.is_squarefree(u64(u))) continue;
    for (i64 v = 1; u * v * v <= a_lim; ++v) {
      const i64 a = u * v * v;
      const i64 uv3 = a * v;
      auto range = beta_w_range(u, v, x);
      if (!range) break;
      // Anything past |A| = uv|w| > A_max fails the first height condition.
      const i64 w_hi = std::min(range->hi, big_a_max / (u * v) + 1);

      const i128 c1 = 6 * i128(u) * u * v * v * v;        // 6 u^2 v^3
      const i128 c0 = 3 * i128(a) * a * a;                // 3 u^3 v^6
      for (i64 w = -w_hi; w <= w_hi; ++w) {
        if (w == 0 && !opts.include_w_zero) continue;
        ++out.visited;
        const i64 A = u * v * w;
        const i128 A3x4 = 4 * i128(A) * A * A;
        if (abs128(A3x4) > i128(x)) continue;
        const i128 T = i128(u) * w * w - c1 * w - c0;
        if (3 * T * T > x16) continue;
        if (w == 0) {  // A = 0: counts only toward the unconditioned total
          if (!opts.n3_in_n0 || 16 * A3x4 + 3 * T * T != 0) ++out.n0;
          continue;
        }
        if (!opts.n3_in_n0 || 16 * A3x4 + 3 * T * T != 0) ++out.n0;
        if (mode == CountMode::n) {
          if (!conditions_W(Triple{u, v, w})) continue;
          // Lemma check, kept on in release: W1-W7 must force B integral.
          if (T % 12 != 0) throw std::logic_error("W conditions passed but 12 does not divide 12B");
          // 4A^3 + 27B^2 = (64A^3 + 3T^2)/16 with B = T/12
          if (16 * A3x4 + 3 * T * T == 0) continue;
          ++out.n;
        }
      }
    }
  }
}

}  // namespace

CensusResult census_stratified(u64 x, CountMode mode, unsigned shards,
                               const CensusOptions& opts) {
  if (x > census_budget) throw std::invalid_argument("census budget is X <= 1e18");
  if (shards < 1) throw std::invalid_argument("need shards >= 1");
  auto t0 = std::chrono::steady_clock::now();

  SquarefreeSieve sieve(u64(std::max<i64>(a_cutoff(x), 2)));
  std::vector<Partial> parts(shards);
  unsigned workers = std::min(shards, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (unsigned r = t; r < shards; r += workers)
        scan_stratum(x, mode, opts, r, shards, sieve, parts[r]);
    });
  }
  for (auto& th : pool) th.join();

  CensusResult result;
  result.x = x;
  result.mode = mode;
  for (const auto& p : parts) {
    result.n0 += p.n0;
    result.n += p.n;
    result.triples_visited += p.visited;
  }
  // The map (u, v, w) -> (-u, v, -w) preserves every condition, so counting
  // u > 0 gives exactly half.
  result.n0 *= 2;
  result.n *= 2;
  result.elapsed = std::chrono::steady_clock::now() - t0;
  return result;
}

CensusResult census(u64 x, CountMode mode) { return census_stratified(x, mode, 1); }

}  // namespace isog3
