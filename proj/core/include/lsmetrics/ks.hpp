#pragma once

#include <span>
#include <vector>

namespace lsm {

/// Two-sample Kolmogorov-Smirnov distance sup_x |F_a(x) - F_b(x)| for
/// pre-sorted samples. Exact for step functions: both ECDFs are evaluated
/// at every merged breakpoint with <=-semantics. Unequal sizes supported.
/// Throws DegenerateInputError on an empty sample.
double ks_distance_sorted(std::span<const double> a, std::span<const double> b);

/// Convenience overload that sorts copies of the inputs first.
double ks_distance(std::vector<double> a, std::vector<double> b);

}  // namespace lsm
