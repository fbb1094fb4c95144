#include "isog3/parametrization.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "isog3/arith.hpp"

namespace isog3 {

namespace {

// Minimality of (A, B) with B allowed to exceed 64 bits (the equivalence
// check feeds it 12B/12 for triples up to the scan bound).
bool minimal_pair(i64 A, i128 B) {
  u128 b = B < 0 ? u128(-(B + 1)) + 1 : u128(B);
  if (A == 0) {
    for (u64 l = 2;; ++l) {
      u128 l3 = u128(l) * l * l;
      if (l3 > b) break;
      u128 l6 = l3 * l3;
      if (l6 > b) break;
      if (b % l6 == 0) return false;
    }
    return true;
  }
  u64 a = u64(std::abs(A));
  for (u64 l = 2; l * l * l * l <= a; ++l) {
    u64 l4 = l * l * l * l;
    if (a % l4 != 0) continue;
    u128 l6 = u128(l4) * l * l;
    if (b == 0 || b % l6 == 0) return false;
  }
  return true;
}

double cbrt2 = std::cbrt(2.0);
double cbrt4 = std::cbrt(4.0);

}  // namespace

i128 twelve_b(const Triple& t) {
  i128 v3 = i128(t.v) * t.v * t.v;
  i128 u2 = i128(t.u) * t.u;
  return i128(t.u) * t.w * t.w - 6 * u2 * v3 * t.w - 3 * u2 * t.u * v3 * v3;
}

Witness triple_to_witness(const Triple& t) {
  i128 A = i128(t.u) * t.v * t.w;
  if (A > std::numeric_limits<i64>::max() || A < std::numeric_limits<i64>::min())
    throw std::overflow_error("triple A = uvw exceeds 64 bits");
  Witness out;
  out.A = i64(A);
  out.a = t.u * t.v * t.v;
  out.B = make_rational(twelve_b(t), 12);
  return out;
}

Triple triple_from_witness(i64 A, i64 a) {
  if (a == 0) throw std::invalid_argument("witness kernel x-coordinate must be nonzero");
  i64 m = std::abs(a);
  i64 v = 1;
  for (i64 d = 2; d * d <= m; ++d) {
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) v *= d;
  }
  i64 u = a / (v * v);
  if (A % (u * v) != 0)
    throw std::invalid_argument("uv does not divide A; not a witness");
  return Triple{u, v, A / (u * v)};
}

bool conditions_B(i64 A, i64 a) {
  if (a == 0) throw std::invalid_argument("conditions_B requires a != 0");
  i128 a_sq = i128(A) * A;
  if (a_sq % a != 0) return false;  // B1: a | A^2
  i128 q = a_sq / a;
  if (q % 3 != 0) return false;  // B1: 3 | A^2/a
  if (((A ^ a) & 1) != 0) return false;  // B2: same parity
  if ((A & 1) == 0 && (q % 4) != 0) return false;  // B3
  return true;
}

bool conditions_W(const Triple& t) {
  i64 u = t.u, v = t.v, w = t.w;
  if (((u & v) & 1) != (w & 1)) return false;          // W1: uv = w (mod 2)
  if ((v & 3) == 0 && (w & 15) == 0) return false;     // W2
  if ((u & 1) == 1 && (v & 3) == 2 && (w & 15) == 8) return false;  // W3
  if ((u & 1) == 0 && (v & 3) == 2 && (w & 15) == 0) return false;  // W4
  if (u % 3 != 0 && w % 3 != 0) return false;          // W5: 3 | uw
  if (v % 3 == 0) {                                    // W6: not 3^4 | uw as well
    i64 need = (u % 3 == 0) ? 27 : 81;
    if (w % need == 0) return false;
  }
  // W7: no prime l > 3 with l | v and l^3 | w.  v is tiny; trial division.
  i64 rest = v;
  for (i64 p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    if (p > 3 && w % (p * p * p) == 0) return false;
  }
  if (rest > 3 && w % (rest * rest * rest) == 0) return false;
  return true;
}

bool conditions_equivalence_check(i64 bound) {
  if (bound < 1 || bound > 1000)
    throw std::invalid_argument("equivalence scan budget is bound <= 1000");
  SquarefreeSieve sieve(u64(bound));
  for (i64 uu = 1; uu <= bound; ++uu) {
    if (!sieve.is_squarefree(u64(uu))) continue;
    for (int us = 0; us < 2; ++us) {
      i64 u = us ? -uu : uu;
      for (i64 v = 1; v <= bound; ++v) {
        i64 a = u * v * v;
        for (i64 ww = 1; ww <= bound; ++ww) {
          for (int ws = 0; ws < 2; ++ws) {
            Triple t{u, v, ws ? -ww : ww};
            i64 A = u * v * t.w;
            i128 T = twelve_b(t);
            bool lhs = conditions_B(A, a) && T % 12 == 0 && minimal_pair(A, T / 12);
            if (lhs != conditions_W(t)) return false;
          }
        }
      }
    }
  }
  return true;
}

double f_env(double beta) {
  if (beta == 0.0) throw std::domain_error("f is singular at beta = 0");
  return 1.0 / (cbrt2 * std::sqrt(std::fabs(beta)));
}

double g_env(double beta) {
  double q = 1.0 + 2.0 * beta - beta * beta / 3.0;
  if (q == 0.0) throw std::domain_error("g is singular where 1 + 2b - b^2/3 = 0");
  return cbrt4 / (std::sqrt(3.0) * std::cbrt(std::fabs(q)));
}

double h_env(double beta) {
  // The singular points of f and g are disjoint, so at a singular point of
  // one piece h equals the other.
  double fv = beta == 0.0 ? std::numeric_limits<double>::infinity() : f_env(beta);
  double q = 1.0 + 2.0 * beta - beta * beta / 3.0;
  double gv = q == 0.0 ? std::numeric_limits<double>::infinity() : g_env(beta);
  return std::min(fv, gv);
}

i64 a_cutoff(u64 x) {
  // largest a with (8a)^6 <= 11^6 X
  const u128 rhs = u128(1771561) * x;  // 11^6 = 1771561
  auto lhs = [](u64 a) {
    u128 a3 = u128(a) * a * a;
    return (a3 * a3) << 18;  // (8a)^6 = 2^18 a^6
  };
  u64 a = u64(1.375 * std::pow(double(x), 1.0 / 6.0)) + 1;
  while (lhs(a) > rhs) --a;
  while (lhs(a + 1) <= rhs) ++a;
  return i64(a);
}

std::optional<WRange> beta_w_range(i64 u, i64 v, u64 x) {
  if (u == 0 || v <= 0) throw std::invalid_argument("need u != 0, v > 0");
  i128 a128 = abs128(i128(u) * v * v);
  if (a128 > a_cutoff(x)) return std::nullopt;
  double a = double(a128);
  double bmax = std::max(std::pow(double(x), 1.0 / 3.0) / (cbrt4 * a * a),
                         3.0 + std::sqrt(12.0 + (4.0 / std::sqrt(3.0)) * std::sqrt(double(x)) / (a * a * a)));
  i64 w_hi = i64(std::ceil(bmax * double(abs128(i128(u) * v * v * v)))) + 1;
  return WRange{-w_hi, w_hi};
}

}  // namespace isog3
