#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "latentfs/rng.hpp"

using latentfs::normal_quantile;
using latentfs::SplitMix64;
using latentfs::Xoshiro256pp;

TEST_CASE("splitmix64 matches the reference stream") {
  SplitMix64 sm(0);
  CHECK(sm.next() == 0xe220a8397b1dcdafULL);
}

TEST_CASE("generator is deterministic for a fixed seed") {
  Xoshiro256pp a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
  Xoshiro256pp c(43);
  CHECK(a.next_u64() != c.next_u64());
}

TEST_CASE("uniform doubles stay in range") {
  Xoshiro256pp rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double v = rng.next_open();
    CHECK(v > 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("next_below covers the range") {
  Xoshiro256pp rng(2);
  std::vector<int> seen(5, 0);
  for (int i = 0; i < 5000; ++i) ++seen[rng.next_below(5)];
  for (int count : seen) CHECK(count > 800);
}

TEST_CASE("normal quantile hits known values") {
  CHECK(normal_quantile(0.5) == 0.0);
  CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
  CHECK(normal_quantile(0.025) == doctest::Approx(-1.959963984540054).epsilon(1e-12));
  CHECK(normal_quantile(0.841344746068543) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::isinf(normal_quantile(0.0)));
  CHECK(std::isinf(normal_quantile(1.0)));
}

TEST_CASE("normal quantile inverts the normal CDF") {
  // Phi(x) = erfc(-x / sqrt 2) / 2; sweep both tails and the body.
  const double ps[] = {1e-12, 1e-6, 1e-3, 0.01, 0.1, 0.3, 0.5,
                       0.7,   0.9,  0.99, 1.0 - 1e-3, 1.0 - 1e-6};
  for (double p : ps) {
    const double x = normal_quantile(p);
    const double back = 0.5 * std::erfc(-x / std::sqrt(2.0));
    CHECK(back == doctest::Approx(p).epsilon(1e-9));
  }
}

TEST_CASE("normal deviates have roughly standard moments") {
  Xoshiro256pp rng(3);
  const int n = 20000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.next_normal();
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::fabs(mean) < 0.03);
  CHECK(var == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("shuffle is a permutation and seed-stable") {
  std::vector<int> v(20);
  std::iota(v.begin(), v.end(), 0);
  Xoshiro256pp rng(9);
  latentfs::shuffle(v, rng);

  std::vector<int> w(20);
  std::iota(w.begin(), w.end(), 0);
  Xoshiro256pp rng2(9);
  latentfs::shuffle(w, rng2);
  CHECK(v == w);

  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 20; ++i) CHECK(sorted[i] == i);
}
