#include "lsmetrics/dataset.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lsmetrics/errors.hpp"

namespace lsm {

void DataSet::validate() const {
  if (n < 1 || dim < 1) {
    throw ValidationError("DataSet requires n >= 1 and dim >= 1, got n=" +
                          std::to_string(n) + " dim=" + std::to_string(dim));
  }
  if (values.size() != n * dim) {
    throw ValidationError("DataSet values size " +
                          std::to_string(values.size()) + " != n*dim = " +
                          std::to_string(n * dim));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw ValidationError("DataSet has a non-finite value at index " +
                            std::to_string(i));
    }
  }
  if (labels) {
    if (labels->size() != n) {
      throw ValidationError("DataSet labels size " +
                            std::to_string(labels->size()) + " != n = " +
                            std::to_string(n));
    }
    for (int id : *labels) {
      if (id < 0) throw ValidationError("DataSet has a negative class label");
    }
  }
}

std::vector<double> ProbMatrix::marginal() const {
  std::vector<double> m(k, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = row(i);
    for (std::size_t j = 0; j < k; ++j) m[j] += r[j];
  }
  for (auto& v : m) v /= static_cast<double>(n);
  return m;
}

void ProbMatrix::validate() const {
  if (n < 1 || k < 1) {
    throw ValidationError("ProbMatrix requires n >= 1 and k >= 1");
  }
  if (rows.size() != n * k) {
    throw ValidationError("ProbMatrix payload size mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto r = row(i);
    double sum = 0.0;
    for (double v : r) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError("ProbMatrix entry outside [0,1] in row " +
                              std::to_string(i));
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw ValidationError("ProbMatrix row " + std::to_string(i) +
                            " sums to " + std::to_string(sum));
    }
  }
}

void MomentPair::validate() const {
  if (mu.size() != dim || sigma.size() != dim * dim) {
    throw ValidationError("MomentPair size mismatch");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (sigma[i * dim + i] < -1e-9) {
      throw ValidationError("MomentPair covariance has a negative diagonal");
    }
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (std::abs(sigma[i * dim + j] - sigma[j * dim + i]) > 1e-9) {
        throw ValidationError("MomentPair covariance is not symmetric");
      }
    }
  }
}

}  // namespace lsm
