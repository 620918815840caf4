#include "lsmetrics/sliced_wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lsmetrics/errors.hpp"
#include "lsmetrics/rng.hpp"
#include "parallel.hpp"

namespace lsm {

double wasserstein_1d(std::span<const double> a_sorted,
                      std::span<const double> b_sorted) {
  if (a_sorted.size() != b_sorted.size()) {
    throw ConstraintError("wasserstein_1d requires equal sample sizes");
  }
  if (a_sorted.empty()) {
    throw DegenerateInputError("wasserstein_1d needs non-empty samples");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a_sorted.size(); ++i) {
    sum += std::abs(a_sorted[i] - b_sorted[i]);
  }
  return sum / static_cast<double>(a_sorted.size());
}

namespace {

std::vector<double> project_sorted(const DataSet& ds,
                                   std::span<const double> dir) {
  std::vector<double> out(ds.n);
  for (std::size_t i = 0; i < ds.n; ++i) {
    auto row = ds.row(i);
    double dot = 0.0;
    for (std::size_t j = 0; j < ds.dim; ++j) dot += row[j] * dir[j];
    out[i] = dot;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SwdReport sliced_wasserstein(const DataSet& r, const DataSet& g,
                             std::size_t n_slices, std::size_t repeats,
                             std::uint64_t seed, unsigned threads) {
  if (r.dim != g.dim) throw ShapeError("SWD dimension mismatch");
  if (r.n != g.n) {
    throw ConstraintError("SWD requires |R| == |G|, got " +
                          std::to_string(r.n) + " and " +
                          std::to_string(g.n));
  }
  if (n_slices < 1 || repeats < 1) {
    throw ParameterError("SWD needs n_slices >= 1 and repeats >= 1");
  }

  SwdReport rep;
  rep.per_repeat.resize(repeats);
  std::vector<double> slice_values(n_slices);
  for (std::size_t rep_idx = 0; rep_idx < repeats; ++rep_idx) {
    detail::parallel_for(
        n_slices, threads, [&](std::size_t begin, std::size_t end) {
          for (std::size_t s = begin; s < end; ++s) {
            rng::Prng prng(rng::derive_seed(seed, rep_idx, s));
            std::vector<double> dir = prng.unit_vector(r.dim);
            auto pr = project_sorted(r, dir);
            auto pg = project_sorted(g, dir);
            slice_values[s] = wasserstein_1d(pr, pg);
          }
        });
    double sum = 0.0;
    for (double v : slice_values) sum += v;
    rep.per_repeat[rep_idx] = sum / static_cast<double>(n_slices);
  }

  double mean = 0.0;
  for (double v : rep.per_repeat) mean += v;
  mean /= static_cast<double>(repeats);
  rep.mean = mean;
  if (repeats > 1) {
    double ss = 0.0;
    for (double v : rep.per_repeat) ss += (v - mean) * (v - mean);
    rep.stddev = std::sqrt(ss / static_cast<double>(repeats - 1));
  }
  return rep;
}

}  // namespace lsm
