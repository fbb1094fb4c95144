#include "isog3/analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace isog3 {

namespace {

long double ld_of(i128 x) {
  // i128 -> long double in two 64-bit chunks, exact to the 64-bit mantissa.
  bool neg = x < 0;
  u128 v = neg ? u128(-(x + 1)) + 1 : u128(x);
  long double r = (long double)(u64(v >> 64)) * 18446744073709551616.0L + (long double)(u64(v));
  return neg ? -r : r;
}

void basis_at(i128 x, long double& t_log, long double& t_plain) {
  long double xr = ld_of(x);
  long double x13 = std::cbrt(xr);
  t_plain = x13;
  t_log = x13 * std::log(xr);
}

}  // namespace

FitResult fit_counts(const CountSeries& s) {
  const auto& pts = s.points;
  if (pts.size() < 2) throw std::invalid_argument("fit needs at least 2 points");
  long double s11 = 0, s12 = 0, s22 = 0, b1 = 0, b2 = 0;
  for (const auto& p : pts) {
    if (p.x < 1) throw std::invalid_argument("fit needs X >= 1");
    long double t1, t2;
    basis_at(p.x, t1, t2);
    long double w = p.weight;
    s11 += w * t1 * t1;
    s12 += w * t1 * t2;
    s22 += w * t2 * t2;
    b1 += w * t1 * p.count;
    b2 += w * t2 * p.count;
  }
  long double det = s11 * s22 - s12 * s12;
  if (!(std::fabs(det) > 1e-12L * s11 * s22))
    throw std::invalid_argument("rank-deficient fit (identical X values?)");
  FitResult r;
  r.coef_log = double((b1 * s22 - b2 * s12) / det);
  r.coef_plain = double((s11 * b2 - s12 * b1) / det);
  long double ss = 0;
  for (const auto& p : pts) {
    long double t1, t2;
    basis_at(p.x, t1, t2);
    long double res = p.count - r.coef_log * t1 - r.coef_plain * t2;
    ss += p.weight * res * res;
  }
  r.rms_residual = double(std::sqrt(ss / (long double)pts.size()));
  return r;
}

std::vector<double> residual_column(const CountSeries& s, double c1) {
  std::vector<double> out;
  out.reserve(s.points.size());
  for (const auto& p : s.points) {
    long double t1, t2;
    basis_at(p.x, t1, t2);
    out.push_back(double((p.count - (long double)c1 * t1) / t2));
  }
  return out;
}

CountSeries read_count_csv(std::istream& in) {
  CountSeries s;
  std::string line;
  auto trim = [](std::string v) {
    auto b = v.find_first_not_of(" \t\r");
    auto e = v.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : v.substr(b, e - b + 1);
  };
  bool header_seen = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("CSV row missing comma: " + line);
    std::string left = trim(line.substr(0, comma));
    std::string right = trim(line.substr(comma + 1));
    if (!header_seen) {
      if (left != "X" || right != "count")
        throw std::invalid_argument("CSV header must be X,count");
      header_seen = true;
      continue;
    }
    CountPoint p;
    p.x = parse_scaled_integer(left);
    p.count = double(parse_scaled_integer(right));
    if (!s.points.empty() && p.x <= s.points.back().x)
      throw std::invalid_argument("X values must be strictly increasing");
    s.points.push_back(p);
  }
  if (!header_seen) throw std::invalid_argument("missing CSV header X,count");
  return s;
}

}  // namespace isog3
