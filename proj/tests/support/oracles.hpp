#pragma once

// Independent brute-force oracles used to pin expected values. These stay
// deliberately naive (double loops, direct formula transcriptions) and
// must not share code with the library implementations they check.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "lsmetrics/dataset.hpp"

namespace oracle {

inline double dist(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += (a[i] - b[i]) * (a[i] - b[i]);
  }
  return std::sqrt(s);
}

inline std::vector<double> pair_distances(const lsm::DataSet& x) {
  std::vector<double> out;
  for (std::size_t i = 0; i < x.n; ++i) {
    for (std::size_t j = i + 1; j < x.n; ++j) {
      out.push_back(dist(x.row(i), x.row(j)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<double> cross_distances(const lsm::DataSet& x,
                                           const lsm::DataSet& y) {
  std::vector<double> out;
  for (std::size_t i = 0; i < x.n; ++i) {
    for (std::size_t j = 0; j < y.n; ++j) {
      out.push_back(dist(x.row(i), y.row(j)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// KS by evaluating both ECDFs at every sample point of both samples,
/// O(|a| * |b|).
inline double grid_ks(const std::vector<double>& a,
                      const std::vector<double>& b) {
  auto ecdf = [](const std::vector<double>& s, double t) {
    std::size_t c = 0;
    for (double v : s) {
      if (v <= t) ++c;
    }
    return static_cast<double>(c) / static_cast<double>(s.size());
  };
  double best = 0.0;
  for (const auto* sample : {&a, &b}) {
    for (double t : *sample) {
      best = std::max(best, std::abs(ecdf(a, t) - ecdf(b, t)));
    }
  }
  return best;
}

/// LOOCV 1-NN accuracy with the opposite-class tie rule, recomputing every
/// distance per query.
inline double brute_loo_1nn(const lsm::DataSet& r, const lsm::DataSet& g) {
  const std::size_t n = r.n;
  auto point = [&](std::size_t i) { return i < n ? r.row(i) : g.row(i - n); };
  std::size_t correct = 0;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < 2 * n; ++j) {
      if (j != i) best = std::min(best, dist(point(i), point(j)));
    }
    bool opposite = false;
    for (std::size_t j = 0; j < 2 * n; ++j) {
      if (j != i && dist(point(i), point(j)) == best &&
          (j < n) != (i < n)) {
        opposite = true;
      }
    }
    if (!opposite) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(2 * n);
}

inline std::vector<double> column_mean(const lsm::ProbMatrix& p) {
  std::vector<double> m(p.k, 0.0);
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t j = 0; j < p.k; ++j) m[j] += p.row(i)[j];
  }
  for (auto& v : m) v /= static_cast<double>(p.n);
  return m;
}

inline double kl(std::span<const double> p, std::span<const double> q) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) d += p[i] * std::log(p[i] / q[i]);
  }
  return d;
}

inline double inception_score(const lsm::ProbMatrix& pg) {
  auto py = column_mean(pg);
  double s = 0.0;
  for (std::size_t i = 0; i < pg.n; ++i) s += kl(pg.row(i), py);
  return std::exp(s / static_cast<double>(pg.n));
}

inline double mode_score(const lsm::ProbMatrix& pg, const lsm::ProbMatrix& pr) {
  auto py = column_mean(pg);
  auto pyr = column_mean(pr);
  double s = 0.0;
  for (std::size_t i = 0; i < pg.n; ++i) s += kl(pg.row(i), pyr);
  return std::exp(s / static_cast<double>(pg.n) - kl(py, pyr));
}

inline double am_score(const lsm::ProbMatrix& pg, const lsm::ProbMatrix& pr) {
  double h = 0.0;
  for (std::size_t i = 0; i < pg.n; ++i) {
    for (double v : pg.row(i)) {
      if (v > 0.0) h -= v * std::log(v);
    }
  }
  h /= static_cast<double>(pg.n);
  return h + kl(column_mean(pr), column_mean(pg));
}

/// FID closed form for diagonal covariances.
inline double diagonal_frechet(std::span<const double> mu1,
                               std::span<const double> var1,
                               std::span<const double> mu2,
                               std::span<const double> var2) {
  double v = 0.0;
  for (std::size_t i = 0; i < mu1.size(); ++i) {
    double dm = mu1[i] - mu2[i];
    double ds = std::sqrt(var1[i]) - std::sqrt(var2[i]);
    v += dm * dm + ds * ds;
  }
  return v;
}

/// Per-pixel median filter via full sorting of each neighborhood.
inline std::vector<double> median_filter_3x3(const std::vector<double>& img,
                                             std::size_t rows,
                                             std::size_t cols) {
  std::vector<double> out(img.size());
  for (std::size_t y = 0; y < rows; ++y) {
    for (std::size_t x = 0; x < cols; ++x) {
      std::vector<double> nb;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          auto yy = static_cast<std::size_t>(std::clamp<long>(
              static_cast<long>(y) + dy, 0, static_cast<long>(rows) - 1));
          auto xx = static_cast<std::size_t>(std::clamp<long>(
              static_cast<long>(x) + dx, 0, static_cast<long>(cols) - 1));
          nb.push_back(img[yy * cols + xx]);
        }
      }
      std::sort(nb.begin(), nb.end());
      out[y * cols + x] = nb[4];
    }
  }
  return out;
}

}  // namespace oracle
