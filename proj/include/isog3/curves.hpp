#pragma once

#include <vector>

#include "isog3/int128.hpp"

namespace isog3 {

// E: y^2 = x^3 + Ax + B with A, B integers.  A curve is counted only when it
// is nonsingular (4A^3 + 27B^2 != 0) and minimal (no prime l with l^4 | A and
// l^6 | B); see valid_curve.
struct CurveParams {
  i64 A = 0;
  i64 B = 0;
};

// A curve together with an integer root a of its 3-division polynomial,
// i.e. the x-coordinate of a kernel point of a rational 3-isogeny.
struct IsogenyWitness {
  CurveParams curve;
  i64 a = 0;
};

// Reduced fraction, den > 0.
struct Rational {
  i128 num = 0;
  i128 den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(i128 num, i128 den);

// Coefficients of the Velu image curve.  Not reduced to a minimal model.
struct RationalCurve {
  Rational A;
  Rational B;
};

struct OracleCount {
  u64 x = 0;
  u64 n3 = 0;           // curves with at least one rational 3-isogeny
  u64 n3_prime = 0;     // (curve, isogeny) pairs
  u64 n3_a0 = 0;        // n3 restricted to A = 0
  u64 n3_prime_a0 = 0;  // n3_prime restricted to A = 0
};

// ht(E) = max(|4A^3|, |27B^2|), exact.  Throws std::overflow_error when the
// inputs would push an intermediate past the 128-bit budget
// (|A| <= 2*10^12, |B| <= 2*10^18).
i128 height(const CurveParams& c);

// Nonsingular and minimal.
bool valid_curve(const CurveParams& c);

// psi_{A,B}(a) = 3a^4 + 6A a^2 + 12B a - A^2, exact.
// Budget: |a| <= 2*10^9 on top of the height budget.
i128 division_poly_eval(const CurveParams& c, i64 a);

// All integer roots of psi_{A,B}, sorted.  For A != 0 the candidates are the
// signed divisors d of A^2 with |d| below the (11/8) ht^(1/6) cutoff; for
// A = 0, psi = 3x(x^3 + 4B) gives 0 plus a possible integer cube root of -4B.
std::vector<i64> integer_roots_of_psi(const CurveParams& c);

// Velu image of the 3-isogeny with kernel x-coordinate w.a:
//   y^2 = x^3 - 16(9A + 30a^2) x - 16(9A^2/a + 114A a + 253a^3)
// as exact rationals (a lambda = 2 rescaling of the raw Velu output; the
// point counts and the modular polynomial Phi_3 certify it, see tests).
// For a = 0 (forcing A = 0) the image of y^2 = x^3 + B is y^2 = x^3 - 27B.
// Throws std::domain_error for a = 0 with A != 0.
RationalCurve velu_image(const IsogenyWitness& w);

// Scans every valid curve of height <= X and counts 3-isogenies by finding
// the integer roots of psi.  X capped at 10^10 (practical scan budget).
// threads = 0 picks hardware concurrency.
OracleCount oracle_count(u64 x, unsigned threads = 0);

// #{E : ht(E) <= X, A = 0} = 2 * #{1 <= b <= sqrt(X/27) : b sixth-power-free}.
u64 count_A0(u64 x);

}  // namespace isog3
