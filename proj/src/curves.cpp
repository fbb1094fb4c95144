#include "isog3/curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "isog3/arith.hpp"

namespace isog3 {

namespace {

constexpr i64 height_budget_A = 2'000'000'000'000;      // 4|A|^3 <= 3.2e37
constexpr i64 height_budget_B = 2'000'000'000'000'000'000;  // 27B^2 <= 1.08e38
constexpr i64 root_budget = 2'000'000'000;              // 3a^4 <= 4.8e37
constexpr u64 oracle_budget = 10'000'000'000ULL;

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 isqrt_u64(u64 n) {
  u64 r = u64(std::sqrt(double(n)));
  while (r > 0 && u128(r) * r > n) --r;
  while (u128(r + 1) * (r + 1) <= n) ++r;
  return r;
}

i64 icbrt_i64(i64 n) {
  bool neg = n < 0;
  u64 m = neg ? u64(-(n + 1)) + 1 : u64(n);
  u64 r = u64(std::cbrt(double(m)));
  while (r > 0 && i128(r) * r * r > i128(m)) --r;
  while (i128(r + 1) * (r + 1) * (r + 1) <= i128(m)) ++r;
  return neg ? -i64(r) : i64(r);
}

// floor(t^(1/6)) for t >= 0
u64 iroot6(i128 t) {
  u64 r = u64(std::pow(double(u128(t)), 1.0 / 6.0));
  auto pow6 = [](u64 v) {
    u128 v3 = u128(v) * v * v;
    return v3 * v3;
  };
  while (r > 0 && pow6(r) > u128(t)) --r;
  while (pow6(r + 1) <= u128(t)) ++r;
  return r;
}

}  // namespace

Rational make_rational(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

i128 height(const CurveParams& c) {
  if (std::abs(c.A) > height_budget_A || std::abs(c.B) > height_budget_B)
    throw std::overflow_error("curve coefficients exceed 128-bit height budget");
  i128 a3 = i128(c.A) * c.A * c.A;
  i128 b2 = i128(c.B) * c.B;
  return std::max(abs128(4 * a3), 27 * b2);
}

bool valid_curve(const CurveParams& c) {
  i128 disc = 4 * i128(c.A) * c.A * c.A + 27 * i128(c.B) * c.B;
  if (disc == 0) return false;
  if (c.A == 0) {
    // l^4 | 0 for every l, so minimality needs B sixth-power-free.
    u64 b = u64(std::abs(c.B));
    for (u64 l = 2;; ++l) {
      u128 l3 = u128(l) * l * l;
      if (l3 > b) break;
      u128 l6 = l3 * l3;
      if (l6 > b) break;
      if (b % u64(l6) == 0) return false;
    }
    return true;
  }
  u64 a = u64(std::abs(c.A));
  for (u64 l = 2; l * l * l * l <= a; ++l) {
    u64 l4 = l * l * l * l;
    if (a % l4 != 0) continue;
    u128 l6 = u128(l4) * l * l;
    if (c.B != 0 && (u128(std::abs(c.B)) % l6) == 0) return false;
    if (c.B == 0) return false;  // l^6 | 0
  }
  return true;
}

i128 division_poly_eval(const CurveParams& c, i64 a) {
  if (std::abs(c.A) > height_budget_A || std::abs(c.B) > height_budget_B ||
      std::abs(a) > root_budget)
    throw std::overflow_error("division polynomial arguments exceed budget");
  i128 a2 = i128(a) * a;
  return 3 * a2 * a2 + 6 * i128(c.A) * a2 + 12 * i128(c.B) * a - i128(c.A) * c.A;
}

std::vector<i64> integer_roots_of_psi(const CurveParams& c) {
  std::vector<i64> roots;
  if (c.A == 0) {
    roots.push_back(0);
    i128 target = -4 * i128(c.B);
    if (target != 0) {
      i64 r = icbrt_i64(i64(target));  // |4B| <= 8e18 fits i64 under budget
      if (i128(r) * r * r == target) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // Any root a satisfies a | A^2 (from 3a^4 + 6Aa^2 + 12Ba = A^2) and
  // |a| <= (11/8) ht^(1/6) (the alpha < 11/8 bound).
  i128 a2 = i128(c.A) * c.A;
  u64 cutoff = 11 * iroot6(height(c)) / 8 + 2;
  for (i64 d = 1; u64(d) <= cutoff; ++d) {
    if (a2 % d != 0) continue;
    if (division_poly_eval(c, d) == 0) roots.push_back(d);
    if (division_poly_eval(c, -d) == 0) roots.push_back(-d);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RationalCurve velu_image(const IsogenyWitness& w) {
  i64 A = w.curve.A, B = w.curve.B, a = w.a;
  if (a == 0) {
    if (A != 0) throw std::domain_error("a = 0 is a psi root only when A = 0");
    return RationalCurve{make_rational(0, 1), make_rational(-27 * i128(B), 1)};
  }
  // Velu with kernel {O, (a, +-b)}: t = 6a^2 + 2A, w = 4b^2 + at, image
  // (A - 5t, B - 7w); eliminating B via psi(a) = 0 and rescaling by
  // lambda = 2 (x -> 4x, y -> 8y) gives integral-shaped coefficients
  //   (-16(9A + 30a^2), -16(9A^2/a + 114Aa + 253a^3)).
  // The image is not reduced to a minimal model.
  i128 a2 = i128(a) * a;
  i128 imageA = -16 * (9 * i128(A) + 30 * a2);
  i128 num = 9 * i128(A) * A + 114 * i128(A) * a2 + 253 * a2 * a2;
  return RationalCurve{make_rational(imageA, 1), make_rational(-16 * num, a)};
}

namespace {

void oracle_scan_range(u64 x, i64 a_lo, i64 a_hi, OracleCount& out) {
  i64 b_max = i64(isqrt_u64(x / 27));
  for (i64 A = a_lo; A <= a_hi; ++A) {
    if (4 * abs128(i128(A) * A * A) > i128(x)) continue;
    for (i64 B = -b_max; B <= b_max; ++B) {
      CurveParams c{A, B};
      if (!valid_curve(c)) continue;
      auto roots = integer_roots_of_psi(c);
      if (roots.empty()) continue;
      for (i64 r : roots)
        if (division_poly_eval(c, r) != 0)
          throw std::logic_error("psi root failed re-verification");
      out.n3 += 1;
      out.n3_prime += roots.size();
      if (A == 0) {
        out.n3_a0 += 1;
        out.n3_prime_a0 += roots.size();
      }
    }
  }
}

}  // namespace

OracleCount oracle_count(u64 x, unsigned threads) {
  if (x > oracle_budget) throw std::invalid_argument("oracle scan budget is X <= 1e10");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  i64 a_max = 0;
  while (4 * i128(a_max + 1) * (a_max + 1) * (a_max + 1) <= i128(x)) ++a_max;

  // Disjoint contiguous A-ranges; each worker owns a private accumulator.
  u64 span = u64(2 * a_max + 1);
  unsigned workers = unsigned(std::min<u64>(threads, span));
  std::vector<OracleCount> parts(workers);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    i64 lo = -a_max + i64(span * t / workers);
    i64 hi = -a_max + i64(span * (t + 1) / workers) - 1;
    pool.emplace_back(oracle_scan_range, x, lo, hi, std::ref(parts[t]));
  }
  for (auto& th : pool) th.join();

  OracleCount total;
  total.x = x;
  for (const auto& p : parts) {
    total.n3 += p.n3;
    total.n3_prime += p.n3_prime;
    total.n3_a0 += p.n3_a0;
    total.n3_prime_a0 += p.n3_prime_a0;
  }
  return total;
}

u64 count_A0(u64 x) {
  return 2 * count_sixth_power_free(isqrt_u64(x / 27));
}

}  // namespace isog3
