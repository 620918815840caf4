#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "lsmetrics/errors.hpp"
#include "lsmetrics/ks.hpp"
#include "lsmetrics/rng.hpp"
#include "oracles.hpp"

namespace {

std::vector<double> random_sample(std::size_t n, std::uint64_t seed) {
  std::vector<double> v(n);
  lsm::rng::Prng prng(seed);
  for (auto& x : v) x = prng.normal();
  return v;
}

}  // namespace

TEST_SUITE("ks") {

TEST_CASE("identical samples give 0") {
  CHECK(lsm::ks_distance({1, 2, 3}, {1, 2, 3}) == 0.0);
}

TEST_CASE("disjoint supports give 1") {
  CHECK(lsm::ks_distance({0, 0}, {1, 1}) == 1.0);
}

TEST_CASE("interleaved example") {
  // breakpoints 1, 1.5, 2, 2.5: gaps 0.5, 0, 0.5, 0
  CHECK(lsm::ks_distance({1, 2}, {1.5, 2.5}) == 0.5);
}

TEST_CASE("agrees with the grid oracle on random inputs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    lsm::rng::Prng prng(seed);
    std::size_t na = 1 + prng.below(200);
    std::size_t nb = 1 + prng.below(200);
    auto a = random_sample(na, seed * 3 + 1);
    auto b = random_sample(nb, seed * 3 + 2);
    // inject ties between and within the samples
    if (na > 3 && nb > 3) {
      b[0] = a[0];
      a[1] = a[2];
    }
    double expected = oracle::grid_ks(a, b);
    CHECK(std::abs(lsm::ks_distance(a, b) - expected) <= 1e-12);
  }
}

TEST_CASE("metric-like properties on random triples") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto a = random_sample(20 + seed, seed);
    auto b = random_sample(35, 1000 + seed);
    auto c = random_sample(11, 2000 + seed);
    double ab = lsm::ks_distance(a, b);
    double ba = lsm::ks_distance(b, a);
    double ac = lsm::ks_distance(a, c);
    double cb = lsm::ks_distance(c, b);
    CHECK(lsm::ks_distance(a, a) == 0.0);
    CHECK(ab == ba);
    CHECK(ab <= ac + cb + 1e-15);
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
  }
}

TEST_CASE("invariant under a common strictly increasing transform") {
  auto a = random_sample(50, 5);
  auto b = random_sample(80, 6);
  double before = lsm::ks_distance(a, b);
  auto warp = [](std::vector<double> v) {
    for (auto& x : v) x = std::exp(x);
    return v;
  };
  CHECK(lsm::ks_distance(warp(a), warp(b)) == before);
}

TEST_CASE("unequal sizes are supported") {
  auto a = random_sample(7, 1);
  auto b = random_sample(1000, 2);
  double d = lsm::ks_distance(a, b);
  CHECK(d >= 0.0);
  CHECK(d <= 1.0);
}

TEST_CASE("empty sample is an error") {
  CHECK_THROWS_AS(lsm::ks_distance({}, {1.0}), lsm::DegenerateInputError);
}

}  // TEST_SUITE
