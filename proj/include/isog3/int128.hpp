#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace isog3 {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

std::string to_string(i128 x);
std::string to_string(u128 x);

inline i128 abs128(i128 x) { return x < 0 ? -x : x; }

// Parses a nonnegative integer given either as a plain decimal literal or in
// NeM shorthand ("1e12", "5e6").  N*10^M is computed in integer arithmetic;
// throws std::invalid_argument on malformed input or overflow past 2^127-1.
i128 parse_scaled_integer(const std::string& text);

}  // namespace isog3
