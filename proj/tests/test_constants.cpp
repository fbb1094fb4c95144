#include <doctest.h>

#include <cmath>
#include <numbers>

#include "isog3/arith.hpp"
#include "isog3/constants.hpp"
#include "isog3/parametrization.hpp"

using namespace isog3;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("transition points") {
  TransitionPoints tp = find_transition_points();
  CHECK(tp.beta1 == doctest::Approx(32.37198796).epsilon(1e-9));
  CHECK(tp.beta2 == doctest::Approx(1.71119188).epsilon(1e-9));
  CHECK(tp.beta3 == -1.0 / 3.0);
  CHECK(tp.beta4 == -3.0);
  // equation residual at the numeric roots
  for (double b : {tp.beta1, tp.beta2}) {
    double q = 1 + 2 * b - b * b / 3.0;
    CHECK(std::fabs(27 * q * q - 64 * b * b * b) < 1e-9 * std::max(1.0, 64 * b * b * b));
  }
  // f and g really cross there, and at the exact algebraic kinks
  CHECK(f_env(tp.beta1) == doctest::Approx(g_env(tp.beta1)).epsilon(1e-12));
  CHECK(f_env(tp.beta2) == doctest::Approx(g_env(tp.beta2)).epsilon(1e-12));
  CHECK(f_env(-3.0) == doctest::Approx(g_env(-3.0)).epsilon(1e-12));
  CHECK(f_env(-1.0 / 3.0) == doctest::Approx(g_env(-1.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("c0 integral") {
  TransitionPoints tp = find_transition_points();
  QuadResult c0 = integrate_c0(tp);
  CHECK(std::fabs(c0.value - 9.1812458638) < 1e-8);
  // positivity and dominance of the finite middle piece
  QuadResult mid = integrate_adaptive([](double b) { return g_env(b) * g_env(b); },
                                      tp.beta3, tp.beta2, 1e-12);
  CHECK(mid.value > 0.0);
  CHECK(mid.value < c0.value);
  // refinement doubling: tighter tolerance moves the value by < 1e-9
  QuadResult c0_tight = integrate_c0(tp, 1e-13);
  CHECK(std::fabs(c0.value - c0_tight.value) < 1e-9);
}

TEST_CASE("c0 via cutoff plus analytic tail (independent tail treatment)") {
  TransitionPoints tp = find_transition_points();
  const double b0 = 1e6;
  auto g2 = [](double b) { return g_env(b) * g_env(b); };
  auto f2 = [](double b) { return f_env(b) * f_env(b); };
  double direct = integrate_adaptive(g2, -b0, tp.beta4, 1e-11).value +
                  integrate_adaptive(f2, tp.beta4, tp.beta3, 1e-11).value +
                  integrate_adaptive(g2, tp.beta3, tp.beta2, 1e-11).value +
                  integrate_adaptive(f2, tp.beta2, tp.beta1, 1e-11).value +
                  integrate_adaptive(g2, tp.beta1, b0, 1e-11).value;
  // Tails: g^2 = (12^(2/3)/3) b^(-4/3) (1 -+ 6/b + ...)^(-2/3); integrating
  // the expansion, the two b0^(-4/3) terms cancel and
  //   tail(b0) = 12^(2/3) (2 b0^(-1/3) + (44/7) b0^(-7/3)) + O(b0^(-10/3)).
  double tail = std::pow(12.0, 2.0 / 3.0) *
                (2.0 * std::pow(b0, -1.0 / 3.0) + (44.0 / 7.0) * std::pow(b0, -7.0 / 3.0));
  QuadResult transform = integrate_c0(tp);
  CHECK(std::fabs(direct + tail - transform.value) < 1e-6);
}

TEST_CASE("h^2 log h integral") {
  TransitionPoints tp = find_transition_points();
  QuadResult q = integrate_h2_log_h(tp);
  CHECK(std::fabs(q.value + 18.0878968694) < 1e-7);
  // integrand positive at the peak where h > 1
  double hpk = h_env(-1.0 / 3.0);
  CHECK(hpk * hpk * std::log(hpk) > 0.0);
  QuadResult tighter = integrate_h2_log_h(tp, 1e-13);
  CHECK(std::fabs(q.value - tighter.value) < 1e-8);
}

TEST_CASE("assembled constants hit the published values") {
  ConstantsReport r = assemble_constants();
  CHECK(std::fabs(r.c1 - 0.10743725502) < 1e-9);
  CHECK(std::fabs(r.c6 - 1.12042819875) < 1e-7);
  CHECK(std::fabs(r.gamma0 - 1.0438945157) < 1e-8);
  CHECK(std::fabs(r.lead_A0 - 2.0 / (3.0 * std::sqrt(3.0) * r.zeta6)) == 0.0);
  CHECK(r.lead_A0 == doctest::Approx(0.37833862916).epsilon(1e-9));
  // arithmetic identities of the stored values
  CHECK(r.c1 == r.c0 / (8 * pi * pi * r.zeta4));
  CHECK(r.c6 == (r.gamma0 / 2 + 6 * r.euler_gamma / (pi * pi) - 3 / (2 * pi * pi)) * r.c0 +
                    3 / (pi * pi) * r.int_h2_log_h);
  CHECK(r.zeta2 == pi * pi / 6);
  CHECK(r.zeta4 == pi * pi * pi * pi / 90);
  CHECK(r.error_bounds.at("c0") < 1e-9);
}

TEST_CASE("euler gamma and zeta'(2)") {
  double g1 = euler_gamma_series();
  double g2 = euler_gamma_quadrature();
  CHECK(std::fabs(g1 - g2) < 1e-10);
  CHECK(g1 == doctest::Approx(0.5772156649015329).epsilon(1e-12));
  CHECK(zeta_prime_2() == doctest::Approx(-0.9375482543158438).epsilon(1e-11));
}

TEST_CASE("density identity of the local proportions") {
  double z4 = pi * pi * pi * pi / 90;
  CHECK(std::fabs((15.0 / 32.0) * (40.0 / 81.0) * (27.0 / (25.0 * z4)) -
                  1.0 / (4.0 * z4)) < 1e-12);
}

TEST_CASE("residue-class proportions 15/32 and 40/81, exactly") {
  // 2-adic: (u, v, w) mod 16.  Squarefree u is never 0 mod 4; each allowed
  // class mod 16 carries natural density 1/12 (odd: (2/3)/8, 2||u: (1/3)/4).
  long pass2 = 0, norm2 = 0;
  for (i64 u = 0; u < 16; ++u) {
    if (u % 4 == 0) continue;
    for (i64 v = 1; v <= 16; ++v)
      for (i64 w = 0; w < 16; ++w) {
        ++norm2;
        bool w1 = ((u & v & 1) == (w & 1));
        bool w2_viol = (v & 3) == 0 && (w & 15) == 0;
        bool w3_viol = (u & 1) == 1 && (v & 3) == 2 && (w & 15) == 8;
        bool w4_viol = (u & 1) == 0 && (v & 3) == 2 && (w & 15) == 0;
        if (w1 && !w2_viol && !w3_viol && !w4_viol) ++pass2;
      }
  }
  // pass2 / (12 * 16 * 16) must equal 15/32 exactly
  CHECK(pass2 * 32 == 15 * norm2);
  CHECK(norm2 == 12 * 16 * 16);

  // 3-adic: (u, v, w) mod 81.  Squarefree u is never 0 mod 9; all 8 nonzero
  // classes mod 9 have natural density 1/8 (coprime: (3/4)/6, 3||u: (1/4)/2).
  long pass3 = 0, norm3 = 0;
  for (i64 u = 0; u < 81; ++u) {
    if (u % 9 == 0) continue;
    for (i64 v = 1; v <= 81; ++v)
      for (i64 w = 0; w < 81; ++w) {
        ++norm3;
        bool w5 = (u % 3 == 0) || (w % 3 == 0);
        bool w6_viol = false;
        if (v % 3 == 0) w6_viol = (w % ((u % 3 == 0) ? 27 : 81) == 0);
        if (w5 && !w6_viol) ++pass3;
      }
  }
  CHECK(pass3 * 81 == 40 * norm3);
  CHECK(norm3 == 72 * 81 * 81);
}

TEST_CASE("squarefree harmonic asymptotics against gamma0 and gamma1") {
  ConstantsReport r = assemble_constants();
  SquarefreeSieve sieve(1 << 21);
  double x = 1e6;
  double lhs = squarefree_harmonic(x, sieve);
  CHECK(std::fabs(lhs - (std::log(x) / r.zeta2 + r.gamma0)) < 5e-3);
  double h1 = squarefree_harmonic_coprime6(x, 1, sieve);
  CHECK(std::fabs(h1 - (std::log(x) / (2 * r.zeta2) + r.gamma1)) < 5e-3);
}

TEST_CASE("report JSON round trip") {
  ConstantsReport r = assemble_constants();
  std::string text = report_to_json(r);
  ConstantsReport back = report_from_json(text);
  CHECK(report_to_json(back) == text);  // fixed point at 12 significant digits
  CHECK(back.c0 == doctest::Approx(r.c0).epsilon(1e-11));
  CHECK(back.c1 == doctest::Approx(r.c1).epsilon(1e-11));
  CHECK(back.error_bounds.at("c0") == r.error_bounds.at("c0"));
  // keys are exactly the sixteen advertised names
  for (const char* key :
       {"beta1", "beta2", "beta3", "beta4", "c0", "int_h2_log_h", "c1", "c6", "gamma0",
        "gamma1", "lead_A0", "zeta2", "zeta4", "zeta6", "zeta_prime_2", "euler_gamma"})
    CHECK(text.find(std::string("\"") + key + "\"") != std::string::npos);
}
