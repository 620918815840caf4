#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lsmetrics/dataset.hpp"

namespace lsm {

/// Median filter with replicate (clamp-to-edge) padding. window must be
/// odd and >= 3. For an even count of window values (not reachable with
/// an odd square window) the lower of the two middle values is taken.
std::vector<double> median_filter(std::span<const double> img,
                                  std::size_t rows, std::size_t cols,
                                  std::size_t window = 3);

/// The five virtual-GAN evaluation sets plus their shared real set.
struct VirtualSets {
  DataSet real;  // 2000 class-8 images
  DataSet opt;   // 2000 fresh class-8 images (optimal generator)
  DataSet lc;    // real set, median filtered (lack of creativity)
  DataSet ld;    // 20 fresh class-8 images, each copied 100x (lack of diversity)
  DataSet lcd;   // 20 filtered images, each copied 100x
  DataSet lin;   // 2000 class-7 images (lack of inheritance)
};

/// Builds the virtual-GAN sets from a labeled image corpus. Requires at
/// least 4020 samples of label 8 and 2000 of label 7. The three class-8
/// subsets (real, opt, LD source) are drawn without replacement and are
/// mutually disjoint. All randomness derives from the seed.
VirtualSets build_virtual_sets(const DataSet& images,
                               std::span<const int> labels,
                               std::size_t img_rows, std::size_t img_cols,
                               std::uint64_t seed);

/// n i.i.d. samples from an isotropic normal around mean. Test-fixture
/// generator for the sampling-property suites.
DataSet gaussian_cloud(std::size_t n, std::span<const double> mean,
                       double stddev, std::uint64_t seed);

}  // namespace lsm
