#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lsmetrics/dataset.hpp"
#include "lsmetrics/distances.hpp"

namespace lsm {

/// Likeness Score breakdown for a real-vs-generated pair.
struct LsReport {
  double s_r = 0.0;        // KS(ICD_real, BCD)
  double s_g = 0.0;        // KS(ICD_gen, BCD)
  double dsi = 0.0;        // max(s_r, s_g)
  double ls = 0.0;         // 1 - dsi
  std::size_t n_icd_real = 0;
  std::size_t n_icd_gen = 0;
  std::size_t n_bcd = 0;
  // KS between the two ICD sets. Not part of the score (it ignores
  // location); reported as a diagnostic.
  double ks_icd_icd = 0.0;
};

/// Computes LS = 1 - DSI from the three distance multisets of (r, g).
LsReport likeness_score(const DataSet& r, const DataSet& g,
                        unsigned threads = 0);

enum class Aggregation { max, avg };

struct MulticlassResult {
  double overall = 0.0;
  std::vector<int> class_ids;      // distinct labels, ascending
  std::vector<double> per_class;   // s_i for each class id
};

/// One-versus-others multi-class DSI: per class i,
/// s_i = KS(ICD of class i, BCD between class i and all other points).
/// Requires >= 2 distinct labels and >= 2 members per class.
MulticlassResult dsi_multiclass(const DataSet& data, Aggregation agg,
                                unsigned threads = 0);

/// Shared-bin normalized histograms of the three distance sets.
struct HistogramTriple {
  std::vector<double> edges;     // bins + 1, strictly increasing from 0
  std::vector<double> icd_real;  // frequencies, each vector sums to 1
  std::vector<double> icd_gen;
  std::vector<double> bcd;
};

/// Equal-width histograms over [0, max pooled distance], or over
/// [0, zoom * max pooled distance] when zoom is given (0 < zoom <= 1).
/// Frequencies are normalized per set over the in-range values.
HistogramTriple distance_histograms(const DataSet& r, const DataSet& g,
                                    std::size_t bins,
                                    std::optional<double> zoom = std::nullopt,
                                    unsigned threads = 0);

/// Fraction of distances <= threshold. Quantifies near-zero peaks.
double near_zero_mass(const DistanceSet& ds, double threshold);

}  // namespace lsm
