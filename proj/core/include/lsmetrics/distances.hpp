#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "lsmetrics/dataset.hpp"

namespace lsm {

enum class DistanceKind { intra_class, between_class };

/// A sorted multiset of pairwise Euclidean distances.
struct DistanceSet {
  std::vector<double> values;  // sorted ascending, all finite and >= 0
  DistanceKind kind = DistanceKind::intra_class;
  // {n, 0} for an ICD set, {n_x, n_y} for a BCD set.
  std::array<std::size_t, 2> source_counts{0, 0};
};

/// Euclidean distance, accumulated as sum of squared differences in f64.
double euclidean(std::span<const double> a, std::span<const double> b);

/// Intra-class distance set: all n(n-1)/2 unordered-pair distances.
/// threads == 0 picks the hardware concurrency. Output is independent of
/// the thread count (fixed output slots plus one final sort).
DistanceSet icd_set(const DataSet& x, unsigned threads = 0);

/// Between-class distance set: all n_x * n_y cross-pair distances.
DistanceSet bcd_set(const DataSet& x, const DataSet& y, unsigned threads = 0);

}  // namespace lsm
