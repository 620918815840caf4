#include "lsmetrics/nn_two_sample.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lsmetrics/distances.hpp"
#include "lsmetrics/errors.hpp"
#include "lsmetrics/rng.hpp"
#include "parallel.hpp"

namespace lsm {

NnTally loo_1nn_accuracy(const DataSet& r, const DataSet& g,
                         unsigned threads) {
  if (r.dim != g.dim) throw ShapeError("1NN dimension mismatch");
  if (r.n != g.n) {
    throw ConstraintError("1NN LOOCV requires |R| == |G|, got " +
                          std::to_string(r.n) + " and " +
                          std::to_string(g.n));
  }
  if (r.n < 2) throw DegenerateInputError("1NN LOOCV needs n >= 2");

  const std::size_t n = r.n;
  const std::size_t total = 2 * n;
  auto point = [&](std::size_t i) {
    return i < n ? r.row(i) : g.row(i - n);
  };

  // Full symmetric distance matrix, computed once.
  std::vector<double> dist(total * total, 0.0);
  detail::parallel_for(total, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < total; ++j) {
        if (j == i) continue;
        dist[i * total + j] = euclidean(point(i), point(j));
      }
    }
  });

  // Per-point prediction: nearest neighbor's class, with ties at the
  // minimum resolved toward the opposite class (so G == R scores 0).
  std::vector<unsigned char> correct(total, 0);
  detail::parallel_for(total, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double* row = dist.data() + i * total;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < total; ++j) {
        if (j != i && row[j] < best) best = row[j];
      }
      bool self_is_real = i < n;
      bool opposite_at_min = false;
      for (std::size_t j = 0; j < total; ++j) {
        if (j != i && row[j] == best && (j < n) != self_is_real) {
          opposite_at_min = true;
          break;
        }
      }
      correct[i] = opposite_at_min ? 0 : 1;
    }
  });

  NnTally tally;
  tally.n_real = n;
  tally.n_gen = n;
  for (std::size_t i = 0; i < total; ++i) {
    if (!correct[i]) continue;
    if (i < n) {
      ++tally.correct_real;
    } else {
      ++tally.correct_gen;
    }
  }
  tally.accuracy =
      static_cast<double>(tally.correct_real + tally.correct_gen) /
      static_cast<double>(total);
  return tally;
}

double r1nnc(double accuracy) {
  if (!(accuracy >= 0.0 && accuracy <= 1.0)) {
    throw ParameterError("r1nnc input must be in [0, 1]");
  }
  return -std::abs(2.0 * accuracy - 1.0) + 1.0;
}

SubsetAverageResult loo_1nn_subset_average(const DataSet& r, const DataSet& g,
                                           std::uint64_t seed,
                                           unsigned threads) {
  if (r.dim != g.dim) throw ShapeError("1NN dimension mismatch");
  const DataSet& small = r.n <= g.n ? r : g;
  const DataSet& large = r.n <= g.n ? g : r;
  const std::size_t m = small.n;
  if (m < 2) throw DegenerateInputError("1NN LOOCV needs n >= 2");
  const std::size_t n_subsets = large.n / m;
  if (n_subsets == 0) throw ConstraintError("subset averaging needs |large| >= |small|");

  std::vector<std::size_t> order(large.n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng::Prng prng(seed);
  prng.shuffle(order);

  SubsetAverageResult res;
  for (std::size_t s = 0; s < n_subsets; ++s) {
    DataSet subset;
    subset.n = m;
    subset.dim = large.dim;
    subset.values.reserve(m * large.dim);
    for (std::size_t i = 0; i < m; ++i) {
      auto row = large.row(order[s * m + i]);
      subset.values.insert(subset.values.end(), row.begin(), row.end());
    }
    NnTally tally = loo_1nn_accuracy(small, subset, threads);
    res.per_subset_accuracy.push_back(tally.accuracy);
  }
  double acc_sum = 0.0, reg_sum = 0.0;
  for (double a : res.per_subset_accuracy) {
    acc_sum += a;
    reg_sum += r1nnc(a);
  }
  res.mean_accuracy = acc_sum / static_cast<double>(n_subsets);
  res.mean_r1nnc = reg_sum / static_cast<double>(n_subsets);
  return res;
}

}  // namespace lsm
