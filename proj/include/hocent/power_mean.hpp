#pragma once

#include <algorithm>
#include <cmath>

namespace hocent {

/// Power (binomial) mean mu_p(a, b) = ((a^p + b^p)/2)^(1/p) for a, b >= 0,
/// extended by its limits: p -> 0 gives the geometric mean, p -> +inf the
/// maximum, p -> -inf the minimum, and p <= 0 with a zero argument gives 0.
/// |p| below 1e-12 is treated as p = 0.
///
/// The computation factors out the dominant argument (the larger one for
/// p > 0, the smaller for p < 0) so that the remaining pow() calls act on
/// ratios in (0, 1]; this keeps the function overflow-free for extreme p.
inline double power_mean(double a, double b, double p) {
  if (a == b) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  if (std::isinf(p)) return p > 0 ? hi : lo;
  if (std::abs(p) < 1e-12) return std::sqrt(lo) * std::sqrt(hi);
  if (p > 0) {
    const double t = std::pow(lo / hi, p);  // in [0, 1]
    return hi * std::pow(0.5 * (1.0 + t), 1.0 / p);
  }
  if (lo == 0.0) return 0.0;
  const double t = std::pow(hi / lo, p);  // in (0, 1]
  return lo * std::pow(0.5 * (1.0 + t), 1.0 / p);
}

}  // namespace hocent
