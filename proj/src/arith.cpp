#include "isog3/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace isog3 {

std::string to_string(i128 x) {
  if (x == 0) return "0";
  bool neg = x < 0;
  u128 v = neg ? u128(-(x + 1)) + 1 : u128(x);
  std::string s;
  while (v) {
    s += char('0' + int(v % 10));
    v /= 10;
  }
  if (neg) s += '-';
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(u128 x) {
  if (x == 0) return "0";
  std::string s;
  while (x) {
    s += char('0' + int(x % 10));
    x /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

i128 parse_scaled_integer(const std::string& text) {
  constexpr i128 max = ~(u128{1} << 127) >> 1;  // 2^127 - 1
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  auto epos = text.find_first_of("eE");
  std::string mant = text.substr(0, epos);
  if (mant.empty()) throw std::invalid_argument("missing mantissa: " + text);
  i128 n = 0;
  for (char c : mant) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("bad digit in integer literal: " + text);
    if (n > (max - (c - '0')) / 10)
      throw std::invalid_argument("integer literal overflows: " + text);
    n = n * 10 + (c - '0');
  }
  if (epos != std::string::npos) {
    std::string exps = text.substr(epos + 1);
    if (exps.empty()) throw std::invalid_argument("missing exponent: " + text);
    long m = 0;
    for (char c : exps) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("bad digit in exponent: " + text);
      m = m * 10 + (c - '0');
      if (m > 40) throw std::invalid_argument("exponent overflows: " + text);
    }
    for (long k = 0; k < m; ++k) {
      if (n > max / 10) throw std::invalid_argument("integer literal overflows: " + text);
      n *= 10;
    }
  }
  return n;
}

SquarefreeSieve::SquarefreeSieve(u64 limit) : limit_(limit) {
  bits_.assign(limit_ / 64 + 2, ~u64{0});
  bits_[0] &= ~u64{1};  // n = 0 is not squarefree by convention
  for (u64 p = 2; p * p <= limit_; ++p) {
    // Sieving by every d^2 (not just prime squares) is wasteful but simple;
    // restrict to d with no smaller square divisor to keep it near-linear.
    if (!lookup(p)) continue;
    for (u64 m = p * p; m <= limit_; m += p * p) bits_[m >> 6] &= ~(u64{1} << (m & 63));
  }
}

bool SquarefreeSieve::is_squarefree(u64 n) const {
  if (n == 0) return false;
  if (n <= limit_) return lookup(n);
  return is_squarefree_slow(n);
}

bool is_squarefree_slow(u64 n) {
  if (n == 0) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return false;
    }
  }
  return true;
}

int mobius(u64 n) {
  if (n == 0) throw std::invalid_argument("mobius(0) undefined");
  int k = 0;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      ++k;
    }
  }
  if (n > 1) ++k;
  return (k & 1) ? -1 : 1;
}

u64 count_sixth_power_free(u64 t) {
  i64 total = 0;
  for (u64 d = 1;; ++d) {
    u128 d3 = u128(d) * d * d;
    if (d3 > t) break;  // d^3 > t implies d^6 > t, and keeps d3*d3 < 2^128
    u128 d6 = d3 * d3;
    if (d6 > t) break;
    total += i64(mobius(d)) * i64(t / u64(d6));
  }
  return u64(total);
}

double squarefree_harmonic(double x, const SquarefreeSieve& sieve) {
  if (x < 1) throw std::invalid_argument("squarefree_harmonic requires x >= 1");
  u64 n = u64(x);
  double sum = 0.0;
  for (u64 u = 1; u <= n; ++u)
    if (sieve.is_squarefree(u)) sum += 1.0 / double(u);
  return sum;
}

double squarefree_harmonic_coprime6(double x, int i, const SquarefreeSieve& sieve) {
  if (x < 1) throw std::invalid_argument("squarefree_harmonic_coprime6 requires x >= 1");
  if (i != 1 && i != 2 && i != 3 && i != 6)
    throw std::invalid_argument("gcd class must divide 6");
  u64 n = u64(x);
  double sum = 0.0;
  for (u64 u = 1; u <= n; ++u) {
    u64 g = std::gcd(u, u64{6});
    if (g == u64(i) && sieve.is_squarefree(u)) sum += 1.0 / double(u);
  }
  return sum;
}

}  // namespace isog3
