#pragma once

#include <span>

#include "lsmetrics/dataset.hpp"

namespace lsm {

/// Shannon entropy -sum p_i ln p_i in nats, with 0 ln 0 = 0.
/// Throws ValidationError unless p is a probability vector.
double entropy(std::span<const double> p);

/// KL divergence sum p_i ln(p_i / q_i). Returns +infinity when some
/// q_i = 0 with p_i > 0. Throws ShapeError on length mismatch.
double kl_divergence(std::span<const double> p, std::span<const double> q);

/// IS(G) = exp(mean_rows KL(p(y|x) || p(y))), p(y) the column mean.
double inception_score(const ProbMatrix& pg);

/// MS(R,G) = exp(mean_rows KL(p(y|x) || p(y_r)) - KL(p(y) || p(y_r))).
double mode_score(const ProbMatrix& pg, const ProbMatrix& pr);

/// AM(R,G) = mean_rows H(p(y|x)) + KL(p(y_r) || p(y)). Smaller is better.
double am_score(const ProbMatrix& pg, const ProbMatrix& pr);

/// Sample mean and covariance (divisor n-1, symmetrized).
MomentPair estimate_moments(const DataSet& f);

/// Frechet distance between Gaussians:
/// ||mu_a - mu_b||^2 + Tr(Sigma_a + Sigma_b - 2 (Sigma_a Sigma_b)^(1/2)).
/// The trace of the square root is the sum of square roots of the
/// eigenvalues of Sigma_a * Sigma_b; eigenvalues within -1e-8 * max|eig|
/// of zero are clamped, anything lower is a NumericalError.
double frechet_distance(const MomentPair& a, const MomentPair& b);

/// FID: frechet_distance of the estimated moments of two feature sets.
double fid(const DataSet& fr, const DataSet& fg);

}  // namespace lsm
