#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lsm {

/// A set of real-valued sample vectors, stored row-major.
/// Immutable by convention once validated; safe to share across threads.
struct DataSet {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<double> values;               // n * dim, row-major
  std::optional<std::vector<int>> labels;   // per-row class ids, if any

  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * dim, dim};
  }

  /// Throws ValidationError if any invariant is broken:
  /// n >= 1, dim >= 1, values.size() == n*dim, all entries finite,
  /// labels (when present) one non-negative id per row.
  void validate() const;

  bool operator==(const DataSet& other) const = default;
};

/// Per-sample class probabilities p(y|x): n rows of k entries, each row
/// summing to 1.
struct ProbMatrix {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<double> rows;  // n * k, row-major

  std::span<const double> row(std::size_t i) const {
    return {rows.data() + i * k, k};
  }

  /// Column mean: the marginal label distribution p(y).
  std::vector<double> marginal() const;

  /// Throws ValidationError unless every entry is in [0,1] and every
  /// row sums to 1 within 1e-9.
  void validate() const;
};

/// Sample mean and covariance of a feature set.
struct MomentPair {
  std::size_t dim = 0;
  std::vector<double> mu;     // dim
  std::vector<double> sigma;  // dim * dim, symmetric

  /// Throws ValidationError if sigma is asymmetric beyond 1e-9 or has a
  /// diagonal entry below -1e-9.
  void validate() const;
};

}  // namespace lsm
