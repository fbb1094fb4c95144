#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "isog3/curves.hpp"
#include "isog3/parametrization.hpp"

using namespace isog3;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

// #E(F_p) for y^2 = x^3 + Ax + B by direct Legendre summation.
long npoints(long A, long B, long p) {
  auto mod = [p](long v) { return ((v % p) + p) % p; };
  A = mod(A);
  B = mod(B);
  long n = 1;
  for (long x = 0; x < p; ++x) {
    long f = (x * x % p * x + A * x + B) % p;
    if (f == 0) {
      n += 1;
      continue;
    }
    long ls = 1, base = f, e = (p - 1) / 2;
    while (e) {
      if (e & 1) ls = ls * base % p;
      base = base * base % p;
      e >>= 1;
    }
    n += 1 + (ls == 1 ? 1 : -1);
  }
  return n;
}

long npoints(const RationalCurve& c, long p) {
  auto rat_mod = [p](const Rational& r) {
    long num = long(((r.num % p) + p) % p);
    long den = long(((r.den % p) + p) % p);
    REQUIRE(den != 0);
    long inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return num * inv % p;
  };
  return npoints(rat_mod(c.A), rat_mod(c.B), p);
}

cpp_rational j_invariant(const cpp_rational& A, const cpp_rational& B) {
  cpp_rational a3 = 4 * A * A * A;
  return 1728 * a3 / (a3 + 27 * B * B);
}

cpp_rational j_invariant(const CurveParams& c) {
  return j_invariant(cpp_rational(c.A), cpp_rational(c.B));
}

cpp_rational j_invariant(const RationalCurve& c) {
  auto rat = [](const Rational& r) {
    return cpp_rational(cpp_int(to_string(r.num)), cpp_int(to_string(r.den)));
  };
  return j_invariant(rat(c.A), rat(c.B));
}

// Classical modular polynomial Phi_3; vanishes exactly on j-invariants of
// 3-isogenous curves.
cpp_rational phi3(const cpp_rational& x, const cpp_rational& y) {
  auto c = [](const char* s) { return cpp_int(s); };
  return (x * x * x * x) + (y * y * y * y) - (x * x * x) * (y * y * y) +
         c("2232") * (x * x * x * y * y + x * x * y * y * y) -
         c("1069956") * (x * x * x * y + x * y * y * y) +
         c("36864000") * (x * x * x + y * y * y) +
         c("2587918086") * x * x * y * y +
         c("8900222976000") * (x * x * y + x * y * y) +
         c("452984832000000") * (x * x + y * y) -
         c("770845966336000000") * x * y +
         c("1855425871872000000000") * (x + y);
}

}  // namespace

TEST_CASE("height examples and budget") {
  CHECK(height({3, -1}) == 108);
  CHECK(height({0, 1}) == 27);
  CHECK(height({1, 0}) == 4);
  CHECK_THROWS_AS(height({i64(3e12), 1}), std::overflow_error);
}

TEST_CASE("division polynomial examples") {
  CHECK(division_poly_eval({3, -1}, 1) == 0);
  CHECK(division_poly_eval({0, 5}, 0) == 0);
  CHECK(division_poly_eval({1, 1}, 1) == 20);
}

TEST_CASE("integer roots of psi") {
  CHECK(integer_roots_of_psi({3, -1}) == std::vector<i64>{1});
  CHECK(integer_roots_of_psi({0, -2}) == std::vector<i64>{0, 2});
  CHECK(integer_roots_of_psi({0, 3}) == std::vector<i64>{0});
}

TEST_CASE("integer roots agree with a naive scan") {
  std::mt19937_64 rng(20240803);
  SquarefreeSieve sieve(1 << 16);
  int tried = 0;
  while (tried < 10000) {
    i64 A = i64(rng() % 1259) - 629;  // |4A^3| <= 1e9 range
    i64 B = i64(rng() % 12171) - 6085;
    CurveParams c{A, B};
    if (4 * i128(A) * A * A + 27 * i128(B) * B == 0) continue;
    if (!valid_curve(c)) continue;
    ++tried;
    i128 ht = height(c);
    i64 scan_to = 2;
    while (i128(scan_to) * scan_to * scan_to * scan_to * scan_to * scan_to <= ht * 64) ++scan_to;
    std::vector<i64> naive;
    for (i64 a = -scan_to; a <= scan_to; ++a)
      if (division_poly_eval(c, a) == 0) naive.push_back(a);
    CHECK(integer_roots_of_psi(c) == naive);
  }
}

TEST_CASE("velu image of the first witness is 3-isogenous") {
  IsogenyWitness w{{3, -1}, 1};
  RationalCurve img = velu_image(w);
  CHECK(img.A == make_rational(-912, 1));
  CHECK(img.B == make_rational(-10816, 1));
  // same Frobenius traces at primes of good reduction
  for (long p : {5, 7, 11, 13, 17, 19, 23})
    CHECK(npoints(3, -1, p) == npoints(img, p));
  CHECK(phi3(j_invariant(w.curve), j_invariant(img)) == 0);
}

TEST_CASE("velu image for A = 0") {
  RationalCurve img = velu_image({{0, 1}, 0});
  CHECK(img.A == make_rational(0, 1));
  CHECK(img.B == make_rational(-27, 1));
  for (long p : {5, 7, 11, 13})
    CHECK(npoints(0, 1, p) == npoints(0, -27, p));
  CHECK_THROWS_AS(velu_image({{3, -1}, 0}), std::domain_error);
}

TEST_CASE("modular polynomial vanishes for random witnesses") {
  std::mt19937_64 rng(7);
  SquarefreeSieve sieve(1000);
  int found = 0;
  while (found < 10) {
    i64 u = i64(rng() % 61) - 30;
    i64 v = 1 + i64(rng() % 5);
    i64 w = i64(rng() % 101) - 50;
    if (u == 0 || w == 0 || !sieve.is_squarefree(u64(std::abs(u)))) continue;
    Triple t{u, v, w};
    if (!conditions_W(t)) continue;
    Witness wit = triple_to_witness(t);
    REQUIRE(wit.B.den == 1);
    CurveParams c{wit.A, i64(wit.B.num)};
    if (4 * i128(c.A) * c.A * c.A + 27 * i128(c.B) * c.B == 0) continue;
    RationalCurve img = velu_image({c, wit.a});
    CHECK(phi3(j_invariant(c), j_invariant(img)) == 0);
    ++found;
  }
}

TEST_CASE("oracle counts at the spec heights") {
  OracleCount o26 = oracle_count(26);
  CHECK(o26.n3 == 0);
  CHECK(o26.n3_prime == 0);
  CHECK(o26.n3_a0 == 0);

  OracleCount o = oracle_count(1000);
  CHECK(o.n3 == 14);
  CHECK(o.n3_prime == 16);
  CHECK(o.n3_a0 == 12);
  CHECK(o.n3_prime_a0 == 14);

  OracleCount o4 = oracle_count(10000);
  CHECK(o4.n3_prime - o4.n3_prime_a0 == 16);

  CHECK_THROWS_AS(oracle_count(u64(2e10)), std::invalid_argument);
}

TEST_CASE("oracle monotone in X and A0 counts match the sieve") {
  OracleCount prev;
  for (u64 x : {u64(500), u64(2000), u64(30000), u64(100000), u64(1000000)}) {
    OracleCount cur = oracle_count(x);
    CHECK(cur.n3 >= prev.n3);
    CHECK(cur.n3_prime >= prev.n3_prime);
    CHECK(cur.n3_a0 >= prev.n3_a0);
    CHECK(cur.n3_prime_a0 >= prev.n3_prime_a0);
    CHECK(cur.n3 <= cur.n3_prime);
    CHECK(cur.n3_a0 == count_A0(x));
    prev = cur;
  }
}

TEST_CASE("count_A0 examples and asymptotic") {
  CHECK(count_A0(1000) == 12);
  CHECK(count_A0(26) == 0);
  // brute force at 1e8 plus the X^(1/2) leading term within 1%
  u64 t = 0;
  for (u64 b = 1; 27 * b * b <= 100000000ULL; ++b) {
    bool free6 = true;
    for (u64 l = 2; l * l * l * l * l * l <= b; ++l)
      if (b % (l * l * l * l * l * l) == 0) free6 = false;
    t += free6 ? 2 : 0;
  }
  CHECK(count_A0(100000000) == t);
  double lead = 2.0 / (3.0 * std::sqrt(3.0) * 1.0173430619844491);  // zeta(6)
  CHECK(std::fabs(double(count_A0(100000000)) - lead * 1e4) / (lead * 1e4) < 0.01);
}
