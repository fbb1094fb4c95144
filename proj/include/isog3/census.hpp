#pragma once

#include <chrono>

#include "isog3/int128.hpp"

namespace isog3 {

enum class CountMode { n0, n };

// Hidden toggles for the two conventions the published table does not pin
// down explicitly.  Defaults reproduce the table: w = 0 triples excluded,
// nonzero-discriminant enforced only for the locally-conditioned count.
struct CensusOptions {
  bool include_w_zero = false;
  bool n3_in_n0 = false;
};

struct CensusResult {
  u64 x = 0;
  CountMode mode = CountMode::n0;
  u64 n0 = 0;  // triples passing the exact height conditions
  u64 n = 0;   // subset also passing W1-W7 and nonzero discriminant (mode n)
  u64 triples_visited = 0;
  std::chrono::duration<double> elapsed{0};
};

// Exact count of triples (u, v, w), u squarefree (both signs, via doubling
// of the u > 0 subcount), v > 0, w != 0, with |4A^3| <= X and |27B^2| <= X
// checked in integer arithmetic (3T^2 <= 16X for T = 12B).  Mode n applies
// the local conditions W1-W7 and the nonzero-discriminant condition on top
// and fills both counters in one sweep.  X capped at 10^18.
CensusResult census(u64 x, CountMode mode);

// Same counts, partitioned into shards by u mod shards; strata are scanned
// concurrently with private accumulators and merged in stratum order, so the
// result is identical for every shard count and thread schedule.
CensusResult census_stratified(u64 x, CountMode mode, unsigned shards,
                               const CensusOptions& opts = {});

}  // namespace isog3
