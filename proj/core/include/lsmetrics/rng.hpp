#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace lsm::rng {

/// SplitMix64 step; used to mix seeds for derived generators.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent stream seed from (seed, a, b). Used for
/// per-slice generators so parallel evaluation stays reproducible.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b) {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix64(s);
  s ^= a * 0xd6e8feb86659fd93ULL;
  h ^= splitmix64(s);
  s ^= b * 0xa0761d6478bd642fULL;
  h ^= splitmix64(s);
  return h;
}

/// Deterministic pseudo-random source. All distributions are produced by
/// explicit, fully specified algorithms on top of mt19937_64, so output
/// is identical across standard library implementations.
class Prng {
public:
  explicit Prng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform double in [0, 1), 53 random bits.
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (pairwise, spare cached).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  /// Uniform integer in [0, n) without modulo bias.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Random unit vector, uniform on the (dim-1)-sphere.
  std::vector<double> unit_vector(std::size_t dim) {
    std::vector<double> v(dim);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (auto& x : v) {
        x = normal();
        norm2 += x * x;
      }
    } while (norm2 == 0.0);
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    return v;
  }

private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace lsm::rng
