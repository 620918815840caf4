#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "lsmetrics/classic_scores.hpp"
#include "lsmetrics/errors.hpp"
#include "lsmetrics/rng.hpp"
#include "lsmetrics/synthetic.hpp"
#include "oracles.hpp"

namespace {

lsm::ProbMatrix random_probs(std::size_t n, std::size_t k,
                             std::uint64_t seed) {
  lsm::ProbMatrix p;
  p.n = n;
  p.k = k;
  p.rows.resize(n * k);
  lsm::rng::Prng prng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      double v = prng.uniform() + 1e-3;
      p.rows[i * k + j] = v;
      sum += v;
    }
    for (std::size_t j = 0; j < k; ++j) p.rows[i * k + j] /= sum;
  }
  return p;
}

lsm::ProbMatrix uniform_probs(std::size_t n, std::size_t k) {
  lsm::ProbMatrix p;
  p.n = n;
  p.k = k;
  p.rows.assign(n * k, 1.0 / static_cast<double>(k));
  return p;
}

lsm::ProbMatrix balanced_one_hot(std::size_t per_class, std::size_t k) {
  lsm::ProbMatrix p;
  p.n = per_class * k;
  p.k = k;
  p.rows.assign(p.n * k, 0.0);
  for (std::size_t i = 0; i < p.n; ++i) p.rows[i * k + i % k] = 1.0;
  return p;
}

}  // namespace

TEST_SUITE("classic_scores") {

TEST_CASE("entropy anchors") {
  CHECK(lsm::entropy(std::vector<double>{1.0, 0.0, 0.0}) == 0.0);
  CHECK(lsm::entropy(std::vector<double>{0.25, 0.25, 0.25, 0.25}) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(lsm::entropy(std::vector<double>{0.5, 0.5}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(lsm::entropy(std::vector<double>{0.5, 0.6}),
                  lsm::ValidationError);
  CHECK_THROWS_AS(lsm::entropy(std::vector<double>{1.5, -0.5}),
                  lsm::ValidationError);
}

TEST_CASE("kl_divergence anchors") {
  std::vector<double> u{0.25, 0.25, 0.25, 0.25};
  CHECK(lsm::kl_divergence(u, u) == 0.0);
  std::vector<double> onehot{0.0, 1.0, 0.0, 0.0};
  CHECK(lsm::kl_divergence(onehot, u) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-15));
  std::vector<double> p{0.8, 0.2}, q{0.5, 0.5};
  CHECK(lsm::kl_divergence(p, q) ==
        doctest::Approx(0.8 * std::log(1.6) + 0.2 * std::log(0.4))
            .epsilon(1e-15));
  std::vector<double> qz{1.0, 0.0};
  CHECK(lsm::kl_divergence(p, qz) ==
        std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(lsm::kl_divergence(p, u), lsm::ShapeError);
}

TEST_CASE("inception score anchors") {
  // k = 4: 0.25 is dyadic, so the column mean is bit-exact and IS is
  // exactly 1
  CHECK(lsm::inception_score(uniform_probs(30, 4)) == 1.0);
  CHECK(lsm::inception_score(balanced_one_hot(4, 10)) ==
        doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("inception score matches the direct oracle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = random_probs(50, 10, seed);
    CHECK(std::abs(lsm::inception_score(p) - oracle::inception_score(p)) <=
          1e-12);
  }
}

TEST_CASE("1 <= IS <= K on random matrices") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    lsm::rng::Prng prng(seed);
    std::size_t k = 2 + prng.below(9);
    auto p = random_probs(1 + prng.below(40), k, seed + 1000);
    double is = lsm::inception_score(p);
    CHECK(is >= 1.0 - 1e-12);
    CHECK(is <= static_cast<double>(k) + 1e-12);
  }
}

TEST_CASE("mode score anchors and oracle") {
  CHECK(lsm::mode_score(uniform_probs(20, 4), uniform_probs(15, 4)) == 1.0);
  auto oh = balanced_one_hot(3, 10);
  CHECK(lsm::mode_score(oh, oh) == doctest::Approx(10.0).epsilon(1e-12));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto pg = random_probs(40, 8, seed);
    auto pr = random_probs(35, 8, seed + 500);
    CHECK(std::abs(lsm::mode_score(pg, pr) - oracle::mode_score(pg, pr)) <=
          1e-12);
  }
  CHECK_THROWS_AS(lsm::mode_score(random_probs(5, 3, 0),
                                  random_probs(5, 4, 1)),
                  lsm::ShapeError);
}

TEST_CASE("am score anchors and oracle") {
  auto oh = balanced_one_hot(5, 4);
  CHECK(lsm::am_score(oh, oh) == 0.0);
  CHECK(lsm::am_score(uniform_probs(10, 6), uniform_probs(12, 6)) ==
        doctest::Approx(std::log(6.0)).epsilon(1e-15));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto pg = random_probs(40, 8, seed + 2000);
    auto pr = random_probs(30, 8, seed + 2500);
    double am = lsm::am_score(pg, pr);
    CHECK(std::abs(am - oracle::am_score(pg, pr)) <= 1e-12);
    CHECK(am >= 0.0);
  }
  CHECK_THROWS_AS(lsm::am_score(random_probs(5, 3, 0),
                                random_probs(5, 4, 1)),
                  lsm::ShapeError);
}

TEST_CASE("estimate_moments hand cases") {
  lsm::DataSet two{2, 2, {0, 0, 2, 0}, std::nullopt};
  auto m = lsm::estimate_moments(two);
  CHECK(m.mu == std::vector<double>{1.0, 0.0});
  CHECK(m.sigma == std::vector<double>{2.0, 0.0, 0.0, 0.0});

  lsm::DataSet same{4, 3, std::vector<double>(12, 7.0), std::nullopt};
  auto ms = lsm::estimate_moments(same);
  for (double v : ms.sigma) CHECK(v == 0.0);

  lsm::DataSet one{1, 2, {0, 0}, std::nullopt};
  CHECK_THROWS_AS(lsm::estimate_moments(one), lsm::DegenerateInputError);
}

TEST_CASE("estimate_moments recovers a known diagonal Gaussian") {
  std::vector<double> mean{1.0, -2.0, 0.5};
  double sd = 1.5;
  std::size_t n = 20000;
  auto x = lsm::gaussian_cloud(n, mean, sd, 3);
  auto m = lsm::estimate_moments(x);
  double se_mu = sd / std::sqrt(static_cast<double>(n));
  double var = sd * sd;
  double se_var = var * std::sqrt(2.0 / static_cast<double>(n - 1));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(m.mu[i] - mean[i]) < 3.0 * se_mu);
    CHECK(std::abs(m.sigma[i * 3 + i] - var) < 3.0 * se_var);
  }
}

TEST_CASE("frechet anchors") {
  lsm::MomentPair a{2, {0.0, 0.0}, {1.0, 0.2, 0.2, 2.0}};
  CHECK(lsm::frechet_distance(a, a) == 0.0);

  lsm::MomentPair b = a;
  b.mu = {3.0, 4.0};
  CHECK(lsm::frechet_distance(a, b) == 25.0);  // equal sigmas: trace term 0
  CHECK(lsm::frechet_distance(b, a) == 25.0);
}

TEST_CASE("frechet matches the diagonal closed form") {
  lsm::rng::Prng prng(11);
  for (int rep = 0; rep < 20; ++rep) {
    std::size_t d = 2 + prng.below(5);
    std::vector<double> mu1(d), mu2(d), v1(d), v2(d);
    for (std::size_t i = 0; i < d; ++i) {
      mu1[i] = prng.normal();
      mu2[i] = prng.normal();
      v1[i] = 0.1 + prng.uniform();
      v2[i] = 0.1 + prng.uniform();
    }
    lsm::MomentPair a{d, mu1, std::vector<double>(d * d, 0.0)};
    lsm::MomentPair b{d, mu2, std::vector<double>(d * d, 0.0)};
    for (std::size_t i = 0; i < d; ++i) {
      a.sigma[i * d + i] = v1[i];
      b.sigma[i * d + i] = v2[i];
    }
    double expected = oracle::diagonal_frechet(mu1, v1, mu2, v2);
    CHECK(std::abs(lsm::frechet_distance(a, b) - expected) <= 1e-9);
  }
}

TEST_CASE("frechet symmetry on random PSD pairs") {
  lsm::rng::Prng prng(12);
  for (int rep = 0; rep < 10; ++rep) {
    std::size_t d = 3;
    auto psd = [&]() {
      // A^T A + small ridge is symmetric positive definite
      std::vector<double> a(d * d), s(d * d, 0.0);
      for (auto& v : a) v = prng.normal();
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          for (std::size_t k = 0; k < d; ++k) {
            s[i * d + j] += a[k * d + i] * a[k * d + j];
          }
        }
        s[i * d + i] += 0.01;
      }
      return s;
    };
    std::vector<double> mu1(d), mu2(d);
    for (auto& v : mu1) v = prng.normal();
    for (auto& v : mu2) v = prng.normal();
    lsm::MomentPair a{d, mu1, psd()};
    lsm::MomentPair b{d, mu2, psd()};
    double ab = lsm::frechet_distance(a, b);
    double ba = lsm::frechet_distance(b, a);
    CHECK(std::abs(ab - ba) <= 1e-9);
    CHECK(ab >= 0.0);
  }
}

TEST_CASE("frechet rejects a clearly non-PSD product") {
  // symmetric, positive diagonal, but eigenvalues {3, -1}: passes the
  // shallow MomentPair checks, fails the spectral one
  lsm::MomentPair a{2, {0.0, 0.0}, {1.0, 2.0, 2.0, 1.0}};
  lsm::MomentPair b{2, {0.0, 0.0}, {1.0, 0.0, 0.0, 1.0}};
  CHECK_THROWS_AS(lsm::frechet_distance(a, b), lsm::NumericalError);
}

TEST_CASE("fid anchors") {
  std::vector<double> mean{0.0, 0.0, 0.0, 0.0};
  auto fr = lsm::gaussian_cloud(200, mean, 1.0, 21);
  CHECK(lsm::fid(fr, fr) == 0.0);

  // pure mean shift at large n is close to the analytic ||mu||^2
  std::vector<double> mu{1.0, -0.5, 0.25, 2.0};
  auto fg = lsm::gaussian_cloud(5000, mu, 1.0, 22);
  auto fr2 = lsm::gaussian_cloud(5000, mean, 1.0, 23);
  double norm2 = 0.0;
  for (double v : mu) norm2 += v * v;
  CHECK(lsm::fid(fr2, fg) == doctest::Approx(norm2).epsilon(0.10));
}

TEST_CASE("fid dim = 1 matches the scalar formula") {
  std::vector<double> m1{0.5}, m2{-1.0};
  auto a = lsm::gaussian_cloud(300, m1, 1.0, 31);
  auto b = lsm::gaussian_cloud(250, m2, 2.0, 32);
  auto ma = lsm::estimate_moments(a);
  auto mb = lsm::estimate_moments(b);
  double dm = ma.mu[0] - mb.mu[0];
  double ds = std::sqrt(ma.sigma[0]) - std::sqrt(mb.sigma[0]);
  CHECK(lsm::fid(a, b) == doctest::Approx(dm * dm + ds * ds).epsilon(1e-9));
}

TEST_CASE("fid shift property") {
  std::vector<double> mean{0.0, 0.0, 0.0};
  auto fr = lsm::gaussian_cloud(150, mean, 1.0, 41);
  auto fg = lsm::gaussian_cloud(150, mean, 1.3, 42);
  std::vector<double> c{0.7, -0.4, 1.1};
  auto shifted = fg;
  for (std::size_t i = 0; i < fg.n; ++i) {
    for (std::size_t j = 0; j < 3; ++j) shifted.values[i * 3 + j] += c[j];
  }
  auto mr = lsm::estimate_moments(fr);
  auto mg = lsm::estimate_moments(fg);
  double before = 0.0, after = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    double d0 = mr.mu[j] - mg.mu[j];
    double d1 = d0 - c[j];
    before += d0 * d0;
    after += d1 * d1;
  }
  double delta = lsm::fid(fr, shifted) - lsm::fid(fr, fg);
  CHECK(std::abs(delta - (after - before)) <= 1e-6);
}

}  // TEST_SUITE
