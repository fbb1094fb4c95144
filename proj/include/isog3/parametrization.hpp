#pragma once

#include <optional>

#include "isog3/curves.hpp"
#include "isog3/int128.hpp"

namespace isog3 {

class SquarefreeSieve;

// The substitution a = uv^2 (u squarefree, v > 0), A = uvw linearizes the
// divisibility a | A^2.  Then 12B = uw^2 - 6u^2v^3 w - 3u^3v^6, and B is an
// integer exactly when the local conditions W1-W7 hold.
struct Triple {
  i64 u = 1;  // squarefree, nonzero
  i64 v = 1;  // positive
  i64 w = 1;  // nonzero
};

struct Witness {
  i64 A = 0;
  Rational B;  // integral iff the triple satisfies the local conditions
  i64 a = 0;
};

// Exact (A, B, a) for a triple; 12B is always integral, B itself need not be.
Witness triple_to_witness(const Triple& t);

// Inverse map on genuine witnesses: u is the signed squarefree kernel of a
// (a = uv^2 with v > 0 maximal), w = A/(uv).  Throws std::invalid_argument
// when a = 0 or uv does not divide A.
Triple triple_from_witness(i64 A, i64 a);

// 12B = uw^2 - 6u^2v^3w - 3u^3v^6 as an exact 128-bit integer.
i128 twelve_b(const Triple& t);

// Integrality of (A^2/a - 6Aa - 3a^3)/12 via the three named conditions:
//   B1: a | A^2 and 3 | (A^2/a)
//   B2: A, a have the same parity
//   B3: if A, a both even then 4 | (A^2/a)
bool conditions_B(i64 A, i64 a);

// Local conditions W1-W7 on a triple.  W7 factors v by trial division and
// tests l^3 | w for each prime l > 3 dividing v.
bool conditions_W(const Triple& t);

// Exhaustively verifies, for all triples with |u|, v, |w| <= bound (u
// squarefree, v > 0, w != 0), that
//   conditions_B(A, a) and minimality of (A, B)  <=>  conditions_W(t).
// Returns true iff no counterexample exists.  bound <= 1000.
bool conditions_equivalence_check(i64 bound);

// Envelope functions of the normalized coordinates alpha = a/X^(1/6),
// beta = w/(uv^3).  The height conditions |4A^3| <= X and |27B^2| <= X are
// equivalent to |alpha| <= f(beta) and |alpha| <= g(beta) respectively, so
// |alpha| <= h(beta) = min(f, g).
double f_env(double beta);
double g_env(double beta);
double h_env(double beta);

// Conservative integer interval [-W, W] containing every w for which the
// triple (u, v, w) can satisfy the height conditions at bound X:
//   W = ceil(beta_max * |u| v^3) + 1,
//   beta_max = max(X^(1/3)/(4^(1/3) a^2), 3 + sqrt(12 + (4/sqrt 3) X^(1/2)/a^3)).
// Empty (returns nullopt) when a = |u|v^2 exceeds the (11/8) X^(1/6) cutoff.
struct WRange {
  i64 lo = 0;
  i64 hi = 0;
};
std::optional<WRange> beta_w_range(i64 u, i64 v, u64 x);

// Largest a with a <= (11/8) X^(1/6), computed exactly: (8a)^6 <= 11^6 X.
i64 a_cutoff(u64 x);

}  // namespace isog3
