#pragma once

#include <map>
#include <string>

#include "isog3/quadrature.hpp"

namespace isog3 {

// Kinks of h = min(f, g), descending: beta4 < beta3 < beta2 < beta1.
// beta3 = -1/3 and beta4 = -3 are exact; beta1, beta2 are the positive roots
// of 3b^4 - 100b^3 + 90b^2 + 108b + 27 (the polynomial form of f^3 = g^3).
struct TransitionPoints {
  double beta4 = -3.0;
  double beta3 = -1.0 / 3.0;
  double beta2 = 0.0;
  double beta1 = 0.0;
};

TransitionPoints find_transition_points();

// c0 = int h(beta)^2 dbeta over the real line.  Panels split at the kinks;
// the infinite tails are mapped by beta = +-s^-3, under which the integrand
// becomes 12^(2/3) (1 -+ 6s^3 - 3s^6)^(-2/3), regular at s = 0.
QuadResult integrate_c0(const TransitionPoints& tp, double abs_tol = 1e-12);

// int h^2 log h; the tails pick up an integrable log factor handled by the
// same adaptive scheme.
QuadResult integrate_h2_log_h(const TransitionPoints& tp, double abs_tol = 1e-12);

struct ConstantsReport {
  double beta1 = 0, beta2 = 0, beta3 = 0, beta4 = 0;
  double c0 = 0;
  double int_h2_log_h = 0;
  double c1 = 0;       // c0 / (8 pi^2 zeta(4))
  double c6 = 0;       // (gamma0/2 + 6 gamma/pi^2 - 3/(2 pi^2)) c0 + (3/pi^2) int h^2 log h
  double gamma0 = 0;   // (gamma zeta(2) - 2 zeta'(2)) / zeta(2)^2
  double gamma1 = 0;   // log 432/(24 zeta(2)) + gamma/(2 zeta(2)) - zeta'(2)/zeta(2)^2
  double lead_A0 = 0;  // 2 / (3 sqrt(3) zeta(6))
  double zeta2 = 0, zeta4 = 0, zeta6 = 0;
  double zeta_prime_2 = 0;
  double euler_gamma = 0;
  std::map<std::string, double> error_bounds;
};

ConstantsReport assemble_constants(double quad_tol = 1e-12);

// zeta'(2) = -sum log n / n^2 via Euler-Maclaurin tail correction.
double zeta_prime_2();

// Euler's constant two independent ways: the Euler-Maclaurin expansion of
// H_n - log n, and the integral representation
// gamma = int_0^1 (1 - e^-t)/t dt - int_1^inf e^-t/t dt.
double euler_gamma_series();
double euler_gamma_quadrature();

// JSON with the exact 16 keys, each {"value": <12 significant digits>,
// "err": <absolute error bound>}.
std::string report_to_json(const ConstantsReport& r);
ConstantsReport report_from_json(const std::string& text);

}  // namespace isog3
