#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lsmetrics/dataset.hpp"

namespace lsm {

/// Exact 1-D Wasserstein distance between two sorted samples of equal
/// size: mean absolute difference of order statistics.
double wasserstein_1d(std::span<const double> a_sorted,
                      std::span<const double> b_sorted);

struct SwdReport {
  double mean = 0.0;
  double stddev = 0.0;  // sample stddev over repeats (0 when repeats == 1)
  std::vector<double> per_repeat;
};

/// Sliced Wasserstein distance: per repeat, average the 1-D Wasserstein
/// distances over n_slices random unit-direction projections. Requires
/// r.n == g.n. Each slice uses a generator derived from
/// (seed, repeat, slice), so results are thread-count independent.
SwdReport sliced_wasserstein(const DataSet& r, const DataSet& g,
                             std::size_t n_slices = 100,
                             std::size_t repeats = 10,
                             std::uint64_t seed = 0, unsigned threads = 0);

}  // namespace lsm
