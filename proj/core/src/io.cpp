#include "lsmetrics/io.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "lsmetrics/errors.hpp"

namespace lsm {
namespace {

constexpr std::uint32_t kIdxImageMagic = 0x00000803;
constexpr std::uint32_t kIdxLabelMagic = 0x00000801;
constexpr char kDsetbinMagic[4] = {'D', 'S', 'B', '1'};

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  return out;
}

std::uint32_t read_u32_be(std::istream& in) {
  std::array<unsigned char, 4> b{};
  in.read(reinterpret_cast<char*>(b.data()), 4);
  if (!in) throw FormatError("truncated IDX header");
  return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
         (std::uint32_t{b[2]} << 8) | std::uint32_t{b[3]};
}

template <typename T>
T read_le(std::istream& in, const char* what) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw FormatError(std::string("truncated dsetbin ") + what);
  static_assert(std::endian::native == std::endian::little,
                "big-endian hosts would need byte swaps here");
  return v;
}

template <typename T>
void write_le(std::ostream& out, T v) {
  static_assert(std::endian::native == std::endian::little);
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

DataSet load_idx_images(const std::filesystem::path& path) {
  auto in = open_input(path);
  if (read_u32_be(in) != kIdxImageMagic) {
    throw FormatError("bad IDX image magic in " + path.string());
  }
  std::uint32_t count = read_u32_be(in);
  std::uint32_t rows = read_u32_be(in);
  std::uint32_t cols = read_u32_be(in);
  std::size_t dim = static_cast<std::size_t>(rows) * cols;
  DataSet ds;
  ds.n = count;
  ds.dim = dim;
  ds.values.resize(static_cast<std::size_t>(count) * dim);
  std::vector<unsigned char> buf(dim);
  for (std::uint32_t i = 0; i < count; ++i) {
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(dim));
    if (!in) throw FormatError("truncated IDX pixel payload");
    double* row = ds.values.data() + static_cast<std::size_t>(i) * dim;
    for (std::size_t j = 0; j < dim; ++j) row[j] = buf[j] / 255.0;
  }
  ds.validate();
  return ds;
}

DataSet load_csv_dataset(const std::filesystem::path& path) {
  auto in = open_input(path);
  DataSet ds;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t cols = 0;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      std::string cell = line.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      char* end = nullptr;
      double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0') {
        throw FormatError("bad CSV cell '" + cell + "' in " + path.string());
      }
      ds.values.push_back(v);
      ++cols;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (ds.dim == 0) {
      ds.dim = cols;
    } else if (cols != ds.dim) {
      throw FormatError("ragged CSV row in " + path.string());
    }
    ++ds.n;
  }
  ds.validate();
  return ds;
}

DataSet load_dsetbin(const std::filesystem::path& path) {
  auto in = open_input(path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kDsetbinMagic, 4) != 0) {
    throw FormatError("bad dsetbin magic in " + path.string());
  }
  auto version = read_le<std::uint32_t>(in, "version");
  if (version != 1) {
    throw FormatError("unsupported dsetbin version " +
                      std::to_string(version));
  }
  DataSet ds;
  ds.n = read_le<std::uint64_t>(in, "n");
  ds.dim = read_le<std::uint64_t>(in, "dim");
  ds.values.resize(ds.n * ds.dim);
  in.read(reinterpret_cast<char*>(ds.values.data()),
          static_cast<std::streamsize>(ds.values.size() * sizeof(double)));
  if (!in) throw FormatError("truncated dsetbin payload in " + path.string());
  ds.validate();
  return ds;
}

void save_csv_dataset(const DataSet& ds, const std::filesystem::path& path) {
  auto out = open_output(path);
  char buf[40];
  for (std::size_t i = 0; i < ds.n; ++i) {
    auto row = ds.row(i);
    for (std::size_t j = 0; j < ds.dim; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", row[j]);
      if (j) out.put(',');
      out << buf;
    }
    out.put('\n');
  }
  if (!out) throw IoError("write failed: " + path.string());
}

void save_dsetbin(const DataSet& ds, const std::filesystem::path& path) {
  auto out = open_output(path);
  out.write(kDsetbinMagic, 4);
  write_le<std::uint32_t>(out, 1);
  write_le<std::uint64_t>(out, ds.n);
  write_le<std::uint64_t>(out, ds.dim);
  out.write(reinterpret_cast<const char*>(ds.values.data()),
            static_cast<std::streamsize>(ds.values.size() * sizeof(double)));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "idx") return Format::idx;
  if (name == "csv") return Format::csv;
  if (name == "dsetbin") return Format::dsetbin;
  throw ParameterError("unknown format '" + name + "'");
}

DataSet load_dataset(const std::filesystem::path& path, Format format) {
  switch (format) {
    case Format::idx:
      return load_idx_images(path);
    case Format::csv:
      return load_csv_dataset(path);
    case Format::dsetbin:
      return load_dsetbin(path);
  }
  throw ParameterError("unhandled format");
}

void save_dataset(const DataSet& ds, const std::filesystem::path& path,
                  Format format) {
  ds.validate();
  switch (format) {
    case Format::csv:
      save_csv_dataset(ds, path);
      return;
    case Format::dsetbin:
      save_dsetbin(ds, path);
      return;
    case Format::idx:
      throw ParameterError("IDX is read-only");
  }
}

std::vector<int> load_idx_labels(const std::filesystem::path& path) {
  auto in = open_input(path);
  if (read_u32_be(in) != kIdxLabelMagic) {
    throw FormatError("bad IDX label magic in " + path.string());
  }
  std::uint32_t count = read_u32_be(in);
  std::vector<unsigned char> buf(count);
  in.read(reinterpret_cast<char*>(buf.data()), count);
  if (!in) throw FormatError("truncated IDX label payload");
  return {buf.begin(), buf.end()};
}

std::vector<int> load_labels_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<int> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    char* end = nullptr;
    long v = std::strtol(line.c_str(), &end, 10);
    if (end == line.c_str() || *end != '\0') {
      throw FormatError("bad label line '" + line + "' in " + path.string());
    }
    if (v < 0) throw ValidationError("negative label in " + path.string());
    labels.push_back(static_cast<int>(v));
  }
  return labels;
}

ProbMatrix load_prob_matrix(const std::filesystem::path& path) {
  DataSet raw = load_csv_dataset(path);
  ProbMatrix pm;
  pm.n = raw.n;
  pm.k = raw.dim;
  pm.rows = std::move(raw.values);
  for (std::size_t i = 0; i < pm.n; ++i) {
    double* row = pm.rows.data() + i * pm.k;
    double sum = 0.0;
    for (std::size_t j = 0; j < pm.k; ++j) {
      if (row[j] < 0.0) {
        throw ValidationError("negative probability in row " +
                              std::to_string(i));
      }
      sum += row[j];
    }
    if (std::abs(sum - 1.0) > 1e-6) {
      throw ValidationError("row " + std::to_string(i) + " sums to " +
                            std::to_string(sum) + ", outside 1 +/- 1e-6");
    }
    for (std::size_t j = 0; j < pm.k; ++j) row[j] /= sum;
  }
  pm.validate();
  return pm;
}

}  // namespace lsm
