#pragma once

#include <istream>
#include <vector>

#include "isog3/int128.hpp"

namespace isog3 {

struct CountPoint {
  i128 x = 0;          // height bound (exact; the published table runs to 10^25)
  double count = 0.0;  // counts stay below 2^53, exact in a double
  double weight = 1.0;
};

// X strictly increasing; at least 2 points required for fitting.
struct CountSeries {
  std::vector<CountPoint> points;
};

struct FitResult {
  double coef_log = 0.0;    // coefficient on X^(1/3) log X
  double coef_plain = 0.0;  // coefficient on X^(1/3)
  double rms_residual = 0.0;
};

// Weighted ordinary least squares over the basis {X^(1/3) log X, X^(1/3)}
// via the closed-form 2x2 normal equations in long double.  Natural log
// throughout.  Throws std::invalid_argument on fewer than 2 points or a
// rank-deficient system.
FitResult fit_counts(const CountSeries& s);

// Per-point (count - c1 X^(1/3) log X) / X^(1/3), the published table's
// fourth column.
std::vector<double> residual_column(const CountSeries& s, double c1);

// CSV with header "X,count"; X accepts NeM shorthand.  Throws on malformed
// input or nonincreasing X.
CountSeries read_count_csv(std::istream& in);

}  // namespace isog3
