#include "lsmetrics/distances.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lsmetrics/errors.hpp"
#include "parallel.hpp"

namespace lsm {

double euclidean(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

DistanceSet icd_set(const DataSet& x, unsigned threads) {
  if (x.n < 2) {
    throw DegenerateInputError(
        "ICD set needs at least 2 samples, got " + std::to_string(x.n));
  }
  const std::size_t n = x.n;
  DistanceSet out;
  out.kind = DistanceKind::intra_class;
  out.source_counts = {n, 0};
  out.values.resize(n * (n - 1) / 2);

  // Pair (i, j > i) lands in slot offset(i) + (j - i - 1); the slot layout
  // is fixed, so any scheduling yields the same multiset.
  auto row_offset = [n](std::size_t i) {
    return i * (2 * n - i - 1) / 2;
  };
  detail::parallel_for(n - 1, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto a = x.row(i);
      double* slot = out.values.data() + row_offset(i);
      for (std::size_t j = i + 1; j < n; ++j) {
        slot[j - i - 1] = euclidean(a, x.row(j));
      }
    }
  });
  std::sort(out.values.begin(), out.values.end());
  return out;
}

DistanceSet bcd_set(const DataSet& x, const DataSet& y, unsigned threads) {
  if (x.dim != y.dim) {
    throw ShapeError("BCD dimension mismatch: " + std::to_string(x.dim) +
                     " vs " + std::to_string(y.dim));
  }
  if (x.n < 1 || y.n < 1) {
    throw DegenerateInputError("BCD set needs non-empty inputs");
  }
  DistanceSet out;
  out.kind = DistanceKind::between_class;
  out.source_counts = {x.n, y.n};
  out.values.resize(x.n * y.n);
  detail::parallel_for(x.n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto a = x.row(i);
      double* slot = out.values.data() + i * y.n;
      for (std::size_t j = 0; j < y.n; ++j) {
        slot[j] = euclidean(a, y.row(j));
      }
    }
  });
  std::sort(out.values.begin(), out.values.end());
  return out;
}

}  // namespace lsm
