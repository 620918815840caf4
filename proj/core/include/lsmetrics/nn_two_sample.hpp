#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lsmetrics/dataset.hpp"

namespace lsm {

/// Leave-one-out 1-NN two-sample tally.
struct NnTally {
  std::size_t n_real = 0;
  std::size_t n_gen = 0;
  std::size_t correct_real = 0;  // real points whose NN is real
  std::size_t correct_gen = 0;   // generated points whose NN is generated
  double accuracy = 0.0;
};

/// LOOCV 1-NN accuracy over R (label real) and G (label generated).
/// Requires r.n == g.n >= 2 and matching dims. Ties at the minimum
/// distance are resolved toward the opposite class, so G == R scores
/// exactly 0.
NnTally loo_1nn_accuracy(const DataSet& r, const DataSet& g,
                         unsigned threads = 0);

/// Eq.-style regularization r(x) = -|2x - 1| + 1; peak 1 at x = 0.5.
/// Throws ParameterError outside [0, 1].
double r1nnc(double accuracy);

/// Unequal-size mode: the larger set is partitioned (seeded random,
/// without replacement) into subsets the size of the smaller set;
/// leftover samples are dropped. Reports per-subset accuracies, their
/// mean, and the mean of the per-subset regularized scores.
struct SubsetAverageResult {
  std::vector<double> per_subset_accuracy;
  double mean_accuracy = 0.0;
  double mean_r1nnc = 0.0;
};

SubsetAverageResult loo_1nn_subset_average(const DataSet& r, const DataSet& g,
                                           std::uint64_t seed,
                                           unsigned threads = 0);

}  // namespace lsm
