#include "isog3/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "isog3/parametrization.hpp"

namespace isog3 {

namespace {

void adapt(const std::function<double(double)>& f, double a, double b, double tol,
           int depth, int max_depth, QuadResult& acc) {
  double k15, g7;
  detail::gk15(f, a, b, k15, g7);
  double err = std::fabs(k15 - g7);
  if (err <= tol || depth >= max_depth) {
    acc.value += k15;
    acc.error += err;
    acc.panels += 1;
    return;
  }
  double mid = 0.5 * (a + b);
  adapt(f, a, mid, 0.5 * tol, depth + 1, max_depth, acc);
  adapt(f, mid, b, 0.5 * tol, depth + 1, max_depth, acc);
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, int max_depth) {
  QuadResult acc;
  adapt(f, a, b, abs_tol, 0, max_depth, acc);
  return acc;
}

TransitionPoints find_transition_points() {
  // 27(1 + 2b - b^2/3)^2 = 64 b^3 for b > 0, expanded with exact integer
  // coefficients to avoid the cancellation of the raw f^3 = g^3 form.
  auto poly = [](long double b) {
    return ((3.0L * b - 100.0L) * b + 90.0L) * b * b + 108.0L * b + 27.0L;
  };
  auto solve = [&](long double lo, long double hi) {
    long double flo = poly(lo), fhi = poly(hi);
    if ((flo < 0) == (fhi < 0))
      throw std::runtime_error("transition-point bracket does not straddle a root");
    for (int i = 0; i < 200; ++i) {
      long double mid = 0.5L * (lo + hi);
      if (mid == lo || mid == hi) break;
      long double fm = poly(mid);
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return 0.5L * (lo + hi);
  };
  TransitionPoints tp;
  tp.beta2 = double(solve(1.0L, 2.0L));
  tp.beta1 = double(solve(30.0L, 35.0L));
  return tp;
}

namespace {

constexpr double pi = std::numbers::pi;

double f_sq(double b) {
  double v = f_env(b);
  return v * v;
}

double g_sq(double b) {
  double v = g_env(b);
  return v * v;
}

// Tail substitution beta = sign * s^-3:
//   int g^2 dbeta over the tail = int_0^smax 12^(2/3) P(s)^(-2/3) ds,
//   P(s) = 1 - sign*6s^3 - 3s^6,  g = 12^(1/3) s^2 / (sqrt(3) P(s)^(1/3)).
double tail_poly(double s, int sign) {
  double s3 = s * s * s;
  return 1.0 - sign * 6.0 * s3 - 3.0 * s3 * s3;
}

const double c12_23 = std::pow(12.0, 2.0 / 3.0);
const double c12_13 = std::cbrt(12.0);

double tail_integrand(double s, int sign) {
  return c12_23 * std::pow(tail_poly(s, sign), -2.0 / 3.0);
}

double tail_integrand_log(double s, int sign) {
  double p = tail_poly(s, sign);
  double g = c12_13 * s * s / (std::sqrt(3.0) * std::cbrt(p));
  return c12_23 * std::pow(p, -2.0 / 3.0) * std::log(g);
}

QuadResult sum_pieces(const std::vector<QuadResult>& parts) {
  QuadResult total;
  for (const auto& p : parts) {
    total.value += p.value;
    total.error += p.error;
    total.panels += p.panels;
  }
  return total;
}

}  // namespace

QuadResult integrate_c0(const TransitionPoints& tp, double abs_tol) {
  double tol = abs_tol / 5;
  std::vector<QuadResult> parts{
      integrate_adaptive([](double s) { return tail_integrand(s, -1); }, 0.0,
                         std::cbrt(1.0 / 3.0), tol),
      integrate_adaptive(f_sq, tp.beta4, tp.beta3, tol),
      integrate_adaptive(g_sq, tp.beta3, tp.beta2, tol),
      integrate_adaptive(f_sq, tp.beta2, tp.beta1, tol),
      integrate_adaptive([](double s) { return tail_integrand(s, +1); }, 0.0,
                         std::cbrt(1.0 / tp.beta1), tol)};
  QuadResult total = sum_pieces(parts);
  if (total.error > 100 * abs_tol)
    throw std::runtime_error("c0 quadrature did not reach the requested tolerance");
  return total;
}

QuadResult integrate_h2_log_h(const TransitionPoints& tp, double abs_tol) {
  double tol = abs_tol / 5;
  auto f2log = [](double b) { return f_sq(b) * std::log(f_env(b)); };
  auto g2log = [](double b) { return g_sq(b) * std::log(g_env(b)); };
  std::vector<QuadResult> parts{
      integrate_adaptive([](double s) { return tail_integrand_log(s, -1); }, 0.0,
                         std::cbrt(1.0 / 3.0), tol),
      integrate_adaptive(f2log, tp.beta4, tp.beta3, tol),
      integrate_adaptive(g2log, tp.beta3, tp.beta2, tol),
      integrate_adaptive(f2log, tp.beta2, tp.beta1, tol),
      integrate_adaptive([](double s) { return tail_integrand_log(s, +1); }, 0.0,
                         std::cbrt(1.0 / tp.beta1), tol)};
  QuadResult total = sum_pieces(parts);
  if (total.error > 100 * abs_tol)
    throw std::runtime_error("h^2 log h quadrature did not reach the requested tolerance");
  return total;
}

double zeta_prime_2() {
  // -sum_{n>=1} log n / n^2; tail from N by Euler-Maclaurin:
  //   sum_{n>=N} f(n) = int_N^inf f + f(N)/2 - B2/2! f'(N) - B4/4! f'''(N) - ...
  // with f(x) = log x / x^2:
  //   int_N^inf f = (log N + 1)/N,  f' = (1 - 2 log x)/x^3,
  //   f''' = (26 - 24 log x)/x^5.
  const long double N = 20000.0L;
  long double head = 0.0L;
  for (long double n = 2.0L; n < N; ++n) head += std::log(n) / (n * n);
  long double logN = std::log(N);
  long double tail = (logN + 1.0L) / N + logN / (2.0L * N * N) -
                     (1.0L / 12.0L) * (1.0L - 2.0L * logN) / (N * N * N) +
                     (1.0L / 720.0L) * (26.0L - 24.0L * logN) / (N * N * N * N * N);
  return double(-(head + tail));
}

double euler_gamma_series() {
  // H_n = log n + gamma + 1/(2n) - 1/(12n^2) + 1/(120n^4) - 1/(252n^6) + ...
  const long double N = 20000.0L;
  long double h = 0.0L;
  for (long double n = 1.0L; n <= N; ++n) h += 1.0L / n;
  long double n2 = N * N;
  return double(h - std::log(N) - 1.0L / (2.0L * N) + 1.0L / (12.0L * n2) -
                1.0L / (120.0L * n2 * n2) + 1.0L / (252.0L * n2 * n2 * n2));
}

double euler_gamma_quadrature() {
  // gamma = int_0^1 (1-e^-t)/t dt - int_1^inf e^-t/t dt; the upper integral
  // is truncated at t = 60 (remainder < e^-60).
  auto left = integrate_adaptive(
      [](double t) { return -std::expm1(-t) / t; }, 0.0, 1.0, 1e-13);
  auto right = integrate_adaptive(
      [](double t) { return std::exp(-t) / t; }, 1.0, 60.0, 1e-13);
  return left.value - right.value;
}

ConstantsReport assemble_constants(double quad_tol) {
  ConstantsReport r;
  TransitionPoints tp = find_transition_points();
  r.beta1 = tp.beta1;
  r.beta2 = tp.beta2;
  r.beta3 = tp.beta3;
  r.beta4 = tp.beta4;

  QuadResult qc0 = integrate_c0(tp, quad_tol);
  QuadResult qlog = integrate_h2_log_h(tp, quad_tol);
  r.c0 = qc0.value;
  r.int_h2_log_h = qlog.value;

  r.zeta2 = pi * pi / 6.0;
  r.zeta4 = pi * pi * pi * pi / 90.0;
  r.zeta6 = std::pow(pi, 6) / 945.0;
  r.zeta_prime_2 = zeta_prime_2();
  r.euler_gamma = euler_gamma_series();

  r.c1 = r.c0 / (8.0 * pi * pi * r.zeta4);
  r.gamma0 = (r.euler_gamma * r.zeta2 - 2.0 * r.zeta_prime_2) / (r.zeta2 * r.zeta2);
  r.gamma1 = std::log(432.0) / (24.0 * r.zeta2) + r.euler_gamma / (2.0 * r.zeta2) -
             r.zeta_prime_2 / (r.zeta2 * r.zeta2);
  r.c6 = (r.gamma0 / 2.0 + 6.0 * r.euler_gamma / (pi * pi) - 3.0 / (2.0 * pi * pi)) * r.c0 +
         3.0 / (pi * pi) * r.int_h2_log_h;
  r.lead_A0 = 2.0 / (3.0 * std::sqrt(3.0) * r.zeta6);

  const double eps = 1e-14;
  r.error_bounds = {
      {"beta1", 1e-12},  // bisection to long double width, residual-checked
      {"beta2", 1e-13},
      {"beta3", 0.0},
      {"beta4", 0.0},
      {"c0", qc0.error},
      {"int_h2_log_h", qlog.error},
      {"c1", qc0.error / (8.0 * pi * pi * r.zeta4) + eps},
      {"c6", 2.2 * qc0.error + 0.31 * qlog.error + 1e-12},
      {"gamma0", 1e-12},
      {"gamma1", 1e-12},
      {"lead_A0", eps},
      {"zeta2", eps},
      {"zeta4", eps},
      {"zeta6", eps},
      {"zeta_prime_2", 1e-13},
      {"euler_gamma", 1e-14},
  };
  return r;
}

namespace {

const std::vector<std::pair<std::string, double ConstantsReport::*>> report_keys = {
    {"beta1", &ConstantsReport::beta1},
    {"beta2", &ConstantsReport::beta2},
    {"beta3", &ConstantsReport::beta3},
    {"beta4", &ConstantsReport::beta4},
    {"c0", &ConstantsReport::c0},
    {"int_h2_log_h", &ConstantsReport::int_h2_log_h},
    {"c1", &ConstantsReport::c1},
    {"c6", &ConstantsReport::c6},
    {"gamma0", &ConstantsReport::gamma0},
    {"gamma1", &ConstantsReport::gamma1},
    {"lead_A0", &ConstantsReport::lead_A0},
    {"zeta2", &ConstantsReport::zeta2},
    {"zeta4", &ConstantsReport::zeta4},
    {"zeta6", &ConstantsReport::zeta6},
    {"zeta_prime_2", &ConstantsReport::zeta_prime_2},
    {"euler_gamma", &ConstantsReport::euler_gamma},
};

std::string twelve_digits(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

}  // namespace

std::string report_to_json(const ConstantsReport& r) {
  nlohmann::ordered_json j;
  for (const auto& [key, member] : report_keys) {
    double err = 0.0;
    if (auto it = r.error_bounds.find(key); it != r.error_bounds.end()) err = it->second;
    j[key] = {{"value", twelve_digits(r.*member)}, {"err", err}};
  }
  return j.dump(2);
}

ConstantsReport report_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  ConstantsReport r;
  for (const auto& [key, member] : report_keys) {
    const auto& entry = j.at(key);
    r.*member = std::stod(entry.at("value").get<std::string>());
    r.error_bounds[key] = entry.at("err").get<double>();
  }
  return r;
}

}  // namespace isog3
