#include "lsmetrics/ks.hpp"

#include <algorithm>
#include <cmath>

#include "lsmetrics/errors.hpp"

namespace lsm {

double ks_distance_sorted(std::span<const double> a,
                          std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw DegenerateInputError("KS distance needs two non-empty samples");
  }
  const std::size_t na = a.size(), nb = b.size();
  std::size_t ia = 0, ib = 0;
  double best = 0.0;
  while (ia < na && ib < nb) {
    // v is the smallest unprocessed value; consume it from both sides so
    // F_a and F_b are evaluated at the same breakpoint (<=-semantics).
    double v = std::min(a[ia], b[ib]);
    while (ia < na && a[ia] == v) ++ia;
    while (ib < nb && b[ib] == v) ++ib;
    double gap = std::abs(static_cast<double>(ia) / static_cast<double>(na) -
                          static_cast<double>(ib) / static_cast<double>(nb));
    best = std::max(best, gap);
  }
  // Once one sample is exhausted its ECDF stays at 1 while the other only
  // climbs toward 1, so no later breakpoint can beat the recorded maximum.
  return best;
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return ks_distance_sorted(a, b);
}

}  // namespace lsm
