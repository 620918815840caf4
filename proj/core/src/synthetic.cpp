#include "lsmetrics/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lsmetrics/errors.hpp"
#include "lsmetrics/rng.hpp"

namespace lsm {

std::vector<double> median_filter(std::span<const double> img,
                                  std::size_t rows, std::size_t cols,
                                  std::size_t window) {
  if (window < 3 || window % 2 == 0) {
    throw ParameterError("median filter window must be odd and >= 3");
  }
  if (img.size() != rows * cols) {
    throw ShapeError("median filter image size mismatch");
  }
  const auto half = static_cast<std::ptrdiff_t>(window / 2);
  const auto nr = static_cast<std::ptrdiff_t>(rows);
  const auto nc = static_cast<std::ptrdiff_t>(cols);
  std::vector<double> out(img.size());
  std::vector<double> patch;
  patch.reserve(window * window);
  for (std::ptrdiff_t y = 0; y < nr; ++y) {
    for (std::ptrdiff_t x = 0; x < nc; ++x) {
      patch.clear();
      for (std::ptrdiff_t dy = -half; dy <= half; ++dy) {
        std::ptrdiff_t yy = std::clamp<std::ptrdiff_t>(y + dy, 0, nr - 1);
        for (std::ptrdiff_t dx = -half; dx <= half; ++dx) {
          std::ptrdiff_t xx = std::clamp<std::ptrdiff_t>(x + dx, 0, nc - 1);
          patch.push_back(img[static_cast<std::size_t>(yy * nc + xx)]);
        }
      }
      // Odd patch size here; for an even count the lower middle is taken.
      auto mid = patch.begin() + static_cast<std::ptrdiff_t>((patch.size() - 1) / 2);
      std::nth_element(patch.begin(), mid, patch.end());
      out[static_cast<std::size_t>(y * nc + x)] = *mid;
    }
  }
  return out;
}

namespace {

DataSet take_rows(const DataSet& src, std::span<const std::size_t> idx) {
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

DataSet repeat_rows(const DataSet& src, std::size_t times) {
  DataSet out;
  out.n = src.n * times;
  out.dim = src.dim;
  out.values.reserve(out.n * out.dim);
  for (std::size_t i = 0; i < src.n; ++i) {
    auto r = src.row(i);
    for (std::size_t t = 0; t < times; ++t) {
      out.values.insert(out.values.end(), r.begin(), r.end());
    }
  }
  return out;
}

}  // namespace

VirtualSets build_virtual_sets(const DataSet& images,
                               std::span<const int> labels,
                               std::size_t img_rows, std::size_t img_cols,
                               std::uint64_t seed) {
  images.validate();
  if (labels.size() != images.n) {
    throw ShapeError("virtual sets: label count != image count");
  }
  if (images.dim != img_rows * img_cols) {
    throw ShapeError("virtual sets: dim != rows * cols");
  }

  std::vector<std::size_t> idx8, idx7;
  for (std::size_t i = 0; i < images.n; ++i) {
    if (labels[i] == 8) idx8.push_back(i);
    if (labels[i] == 7) idx7.push_back(i);
  }
  if (idx8.size() < 4020) {
    throw ConstraintError("virtual sets need >= 4020 images of label 8, got " +
                          std::to_string(idx8.size()));
  }
  if (idx7.size() < 2000) {
    throw ConstraintError("virtual sets need >= 2000 images of label 7, got " +
                          std::to_string(idx7.size()));
  }

  rng::Prng prng(seed);
  prng.shuffle(idx8);
  prng.shuffle(idx7);

  VirtualSets vs;
  vs.real = take_rows(images, {idx8.data(), 2000});
  vs.opt = take_rows(images, {idx8.data() + 2000, 2000});
  DataSet ld_src = take_rows(images, {idx8.data() + 4000, 20});
  vs.ld = repeat_rows(ld_src, 100);
  vs.lin = take_rows(images, {idx7.data(), 2000});

  vs.lc.n = vs.real.n;
  vs.lc.dim = vs.real.dim;
  vs.lc.values.reserve(vs.lc.n * vs.lc.dim);
  for (std::size_t i = 0; i < vs.real.n; ++i) {
    auto filtered = median_filter(vs.real.row(i), img_rows, img_cols, 3);
    vs.lc.values.insert(vs.lc.values.end(), filtered.begin(), filtered.end());
  }

  std::vector<std::size_t> lc_pick(vs.lc.n);
  std::iota(lc_pick.begin(), lc_pick.end(), std::size_t{0});
  prng.shuffle(lc_pick);
  DataSet lcd_src = take_rows(vs.lc, {lc_pick.data(), 20});
  vs.lcd = repeat_rows(lcd_src, 100);
  return vs;
}

DataSet gaussian_cloud(std::size_t n, std::span<const double> mean,
                       double stddev, std::uint64_t seed) {
  if (n < 1) throw ParameterError("gaussian_cloud needs n >= 1");
  if (!(stddev > 0.0)) throw ParameterError("gaussian_cloud needs stddev > 0");
  DataSet ds;
  ds.n = n;
  ds.dim = mean.size();
  ds.values.resize(n * ds.dim);
  rng::Prng prng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ds.dim; ++j) {
      ds.values[i * ds.dim + j] = mean[j] + stddev * prng.normal();
    }
  }
  return ds;
}

}  // namespace lsm
