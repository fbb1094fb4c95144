#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

namespace isog3 {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // accumulated |K15 - G7| over accepted panels
  std::uint64_t panels = 0;
};

// Adaptive Gauss7/Kronrod15 bisection.  A panel is accepted when its
// |K15 - G7| estimate drops below its share of abs_tol; otherwise it is
// split, halving the share.  Integrable endpoint singularities (the log
// factors on the tail transforms) descend geometrically and bottom out at
// max_depth with a negligible remainder; panels are summed left to right so
// the result is bit-stable.  The rule never evaluates f at the endpoints.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, int max_depth = 60);

namespace detail {

inline void gk15(const std::function<double(double)>& f, double a, double b,
                 double& k15, double& g7) {
  // Gauss-Kronrod 7-15 nodes and weights on [-1, 1], positive half.
  static constexpr double xk[8] = {
      0.991455371120812639206854697526329,
      0.949107912342758524526189684047851,
      0.864864423359769072789712788640926,
      0.741531185599394439863864773280788,
      0.586087235467691130294144838258730,
      0.405845151377397166906606412076961,
      0.207784955007898467600689403773245,
      0.0};
  static constexpr double wk[8] = {
      0.022935322010529224963732008058970,
      0.063092092629978553290700663189204,
      0.104790010322250183839876322541518,
      0.140653259715525918745189590510238,
      0.169004726639267902826583426598550,
      0.190350578064785409913256402421014,
      0.204432940075298892414161999234649,
      0.209482141084727828012999174891714};
  static constexpr double wg[4] = {
      0.129484966168869693270611432679082,
      0.279705391489276667901467771423780,
      0.381830050505118944950369775488975,
      0.417959183673469387755102040816327};

  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fk = f(mid);
  double sk = wk[7] * fk;
  double sg = wg[3] * fk;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * xk[i];
    const double fsum = f(mid - dx) + f(mid + dx);
    sk += wk[i] * fsum;
    if (i % 2 == 1) sg += wg[i / 2] * fsum;
  }
  k15 = sk * half;
  g7 = sg * half;
}

}  // namespace detail

}  // namespace isog3
