#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lsmetrics/dataset.hpp"

namespace lsm {

enum class Format { idx, csv, dsetbin };

/// Parses a format name ("idx", "csv", "dsetbin").
Format parse_format(const std::string& name);

/// Loads a dataset.
///  - idx: MNIST image file (big-endian magic 0x00000803); pixels are
///    rescaled from [0,255] to [0,1] and images flattened to rows.
///  - csv: headerless comma-separated doubles, one sample per row.
///  - dsetbin: the native binary format ("DSB1", version 1, little-endian
///    f64 payload). Round-trips bit-exactly through save_dataset.
DataSet load_dataset(const std::filesystem::path& path, Format format);

/// Saves a dataset as csv (17 significant digits) or dsetbin.
void save_dataset(const DataSet& ds, const std::filesystem::path& path,
                  Format format);

/// Loads an MNIST label file (magic 0x00000801).
std::vector<int> load_idx_labels(const std::filesystem::path& path);

/// Loads a single-column CSV of integer labels.
std::vector<int> load_labels_csv(const std::filesystem::path& path);

/// Loads a headerless CSV of per-sample class probabilities. Rows whose
/// sum deviates from 1 by at most 1e-6 are renormalized; larger deviations
/// and negative entries are validation errors.
ProbMatrix load_prob_matrix(const std::filesystem::path& path);

}  // namespace lsm
