#include "lsmetrics/separability.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "lsmetrics/errors.hpp"
#include "lsmetrics/ks.hpp"

namespace lsm {
namespace {

DataSet take_rows(const DataSet& src, const std::vector<std::size_t>& idx) {
  DataSet out;
  out.n = idx.size();
  out.dim = src.dim;
  out.values.reserve(out.n * out.dim);
  for (std::size_t i : idx) {
    auto r = src.row(i);
    out.values.insert(out.values.end(), r.begin(), r.end());
  }
  return out;
}

std::vector<double> histogram(std::span<const double> sorted_values,
                              double width, std::size_t bins, double hi) {
  std::vector<double> freq(bins, 0.0);
  std::size_t in_range = 0;
  for (double v : sorted_values) {
    if (v > hi) break;  // sorted input, everything after is out of range
    std::size_t b = width > 0.0
                        ? std::min(bins - 1, static_cast<std::size_t>(v / width))
                        : 0;
    freq[b] += 1.0;
    ++in_range;
  }
  if (in_range > 0) {
    for (auto& f : freq) f /= static_cast<double>(in_range);
  }
  return freq;
}

}  // namespace

LsReport likeness_score(const DataSet& r, const DataSet& g, unsigned threads) {
  if (r.dim != g.dim) {
    throw ShapeError("likeness_score dimension mismatch");
  }
  DistanceSet icd_r = icd_set(r, threads);
  DistanceSet icd_g = icd_set(g, threads);
  DistanceSet bcd = bcd_set(r, g, threads);

  LsReport rep;
  rep.s_r = ks_distance_sorted(icd_r.values, bcd.values);
  rep.s_g = ks_distance_sorted(icd_g.values, bcd.values);
  rep.dsi = std::max(rep.s_r, rep.s_g);
  rep.ls = 1.0 - rep.dsi;
  rep.n_icd_real = icd_r.values.size();
  rep.n_icd_gen = icd_g.values.size();
  rep.n_bcd = bcd.values.size();
  rep.ks_icd_icd = ks_distance_sorted(icd_r.values, icd_g.values);
  return rep;
}

MulticlassResult dsi_multiclass(const DataSet& data, Aggregation agg,
                                unsigned threads) {
  if (!data.labels) {
    throw ValidationError("dsi_multiclass needs a labeled dataset");
  }
  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < data.n; ++i) {
    by_class[(*data.labels)[i]].push_back(i);
  }
  if (by_class.size() < 2) {
    throw DegenerateInputError("dsi_multiclass needs >= 2 distinct labels");
  }
  for (const auto& [id, members] : by_class) {
    if (members.size() < 2) {
      throw DegenerateInputError("class " + std::to_string(id) +
                                 " has fewer than 2 members");
    }
  }

  MulticlassResult res;
  for (const auto& [id, members] : by_class) {
    std::vector<std::size_t> others;
    others.reserve(data.n - members.size());
    for (std::size_t i = 0; i < data.n; ++i) {
      if ((*data.labels)[i] != id) others.push_back(i);
    }
    DataSet cls = take_rows(data, members);
    DataSet rest = take_rows(data, others);
    DistanceSet icd = icd_set(cls, threads);
    DistanceSet bcd = bcd_set(cls, rest, threads);
    res.class_ids.push_back(id);
    res.per_class.push_back(ks_distance_sorted(icd.values, bcd.values));
  }

  if (agg == Aggregation::max) {
    res.overall = *std::max_element(res.per_class.begin(),
                                    res.per_class.end());
  } else {
    double sum = 0.0;
    for (double s : res.per_class) sum += s;
    res.overall = sum / static_cast<double>(res.per_class.size());
  }
  return res;
}

HistogramTriple distance_histograms(const DataSet& r, const DataSet& g,
                                    std::size_t bins,
                                    std::optional<double> zoom,
                                    unsigned threads) {
  if (bins == 0) throw ParameterError("histogram bin count must be positive");
  if (zoom && !(*zoom > 0.0 && *zoom <= 1.0)) {
    throw ParameterError("zoom must be in (0, 1]");
  }
  DistanceSet icd_r = icd_set(r, threads);
  DistanceSet icd_g = icd_set(g, threads);
  DistanceSet bcd = bcd_set(r, g, threads);

  double max_dist = std::max({icd_r.values.back(), icd_g.values.back(),
                              bcd.values.back()});
  double hi = zoom ? *zoom * max_dist : max_dist;
  if (hi <= 0.0) hi = 1.0;  // all distances zero: any positive range works
  double width = hi / static_cast<double>(bins);

  HistogramTriple h;
  h.edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b) {
    h.edges[b] = width * static_cast<double>(b);
  }
  h.icd_real = histogram(icd_r.values, width, bins, hi);
  h.icd_gen = histogram(icd_g.values, width, bins, hi);
  h.bcd = histogram(bcd.values, width, bins, hi);
  return h;
}

double near_zero_mass(const DistanceSet& ds, double threshold) {
  if (threshold < 0.0) throw ParameterError("threshold must be >= 0");
  if (ds.values.empty()) return 0.0;
  auto it = std::upper_bound(ds.values.begin(), ds.values.end(), threshold);
  return static_cast<double>(it - ds.values.begin()) /
         static_cast<double>(ds.values.size());
}

}  // namespace lsm
