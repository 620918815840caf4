#include "lsmetrics/classic_scores.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "lsmetrics/errors.hpp"

namespace lsm {
namespace {

void check_probability(std::span<const double> p) {
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) throw ValidationError("negative probability entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ValidationError("probability vector sums to " +
                          std::to_string(sum));
  }
}

}  // namespace

double entropy(std::span<const double> p) {
  check_probability(p);
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw ShapeError("KL divergence length mismatch");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
    d += p[i] * std::log(p[i] / q[i]);
  }
  return d;
}

double inception_score(const ProbMatrix& pg) {
  pg.validate();
  std::vector<double> py = pg.marginal();
  double mean_kl = 0.0;
  for (std::size_t i = 0; i < pg.n; ++i) {
    mean_kl += kl_divergence(pg.row(i), py);
  }
  mean_kl /= static_cast<double>(pg.n);
  return std::exp(mean_kl);
}

double mode_score(const ProbMatrix& pg, const ProbMatrix& pr) {
  pg.validate();
  pr.validate();
  if (pg.k != pr.k) throw ShapeError("mode_score class-count mismatch");
  std::vector<double> py = pg.marginal();
  std::vector<double> pyr = pr.marginal();
  double mean_kl = 0.0;
  for (std::size_t i = 0; i < pg.n; ++i) {
    mean_kl += kl_divergence(pg.row(i), pyr);
  }
  mean_kl /= static_cast<double>(pg.n);
  return std::exp(mean_kl - kl_divergence(py, pyr));
}

double am_score(const ProbMatrix& pg, const ProbMatrix& pr) {
  pg.validate();
  pr.validate();
  if (pg.k != pr.k) throw ShapeError("am_score class-count mismatch");
  double mean_h = 0.0;
  for (std::size_t i = 0; i < pg.n; ++i) {
    mean_h += entropy(pg.row(i));
  }
  mean_h /= static_cast<double>(pg.n);
  return mean_h + kl_divergence(pr.marginal(), pg.marginal());
}

MomentPair estimate_moments(const DataSet& f) {
  if (f.n < 2) {
    throw DegenerateInputError("moment estimation needs n >= 2");
  }
  const std::size_t n = f.n, d = f.dim;
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      x(f.values.data(), static_cast<Eigen::Index>(n),
        static_cast<Eigen::Index>(d));
  Eigen::VectorXd mu = x.colwise().mean();
  Eigen::MatrixXd centered = x.rowwise() - mu.transpose();
  Eigen::MatrixXd cov =
      centered.transpose() * centered / static_cast<double>(n - 1);
  cov = ((cov + cov.transpose()) / 2.0).eval();

  MomentPair mp;
  mp.dim = d;
  mp.mu.assign(mu.data(), mu.data() + d);
  mp.sigma.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      mp.sigma[i * d + j] = cov(static_cast<Eigen::Index>(i),
                                static_cast<Eigen::Index>(j));
    }
  }
  return mp;
}

double frechet_distance(const MomentPair& a, const MomentPair& b) {
  a.validate();
  b.validate();
  if (a.dim != b.dim) throw ShapeError("frechet_distance dimension mismatch");
  const auto d = static_cast<Eigen::Index>(a.dim);

  double mean_term = 0.0;
  for (std::size_t i = 0; i < a.dim; ++i) {
    double diff = a.mu[i] - b.mu[i];
    mean_term += diff * diff;
  }

  // Identical covariances: the trace term vanishes analytically.
  if (a.sigma == b.sigma) return mean_term;

  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      sa(a.sigma.data(), d, d), sb(b.sigma.data(), d, d);
  Eigen::MatrixXd product = sa * sb;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(product, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigen decomposition of covariance product failed");
  }
  Eigen::VectorXcd eig = solver.eigenvalues();

  // The product of two PSD matrices has a real non-negative spectrum;
  // small negative or imaginary parts are numerical noise.
  double max_abs = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    max_abs = std::max(max_abs, std::abs(eig(i)));
  }
  double tol = 1e-8 * max_abs;
  double trace_sqrt = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    double re = eig(i).real();
    double im = eig(i).imag();
    if (re < -tol || std::abs(im) > tol) {
      throw NumericalError(
          "covariance product has an eigenvalue beyond the clamp "
          "tolerance; inputs are not PSD");
    }
    trace_sqrt += std::sqrt(std::max(re, 0.0));
  }
  double value = mean_term + sa.trace() + sb.trace() - 2.0 * trace_sqrt;
  return std::max(value, 0.0);
}

double fid(const DataSet& fr, const DataSet& fg) {
  if (fr.dim != fg.dim) throw ShapeError("FID dimension mismatch");
  return frechet_distance(estimate_moments(fr), estimate_moments(fg));
}

}  // namespace lsm
