#include "latentfs/verify.hpp"

#include <cmath>
#include <string>

#include "latentfs/jsonfmt.hpp"
#include "latentfs/matrix.hpp"
#include "latentfs/oracle.hpp"
#include "latentfs/ranker.hpp"
#include "latentfs/rng.hpp"

namespace latentfs::verify {

namespace {

std::string describe_matrix(const Matrix &a) {
  std::string out = std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " [";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += " ";
      out += fmt_double(a(i, j));
    }
  }
  return out + "]";
}

Matrix random_matrix(std::size_t n, Xoshiro256pp &rng) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.next_double();
  }
  return a;
}

void record(SuiteResult &res, double dev, const std::string &context) {
  res.max_deviation = std::max(res.max_deviation, dev);
  if (dev > res.tolerance && res.first_failure.empty()) {
    res.first_failure = context + " deviation " + fmt_double(dev);
  }
}

}  // namespace

SuiteResult series_suite(int trials, std::uint64_t seed) {
  SuiteResult res{"series", trials, 0.0, 1e-8, false, ""};
  Xoshiro256pp rng(seed);
  constexpr int kTerms = 400;
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t n = 1 + rng.next_below(8);
    const Matrix a = random_matrix(n, rng);
    const double rho = spectral_radius(a).value;
    const double r = choose_r(rho, 0.9);
    const Matrix closed = energy_matrix(a, r);
    const Matrix series = oracle::truncated_energy(a, r, kTerms);
    const double dev = closed.max_abs_diff(series);
    record(res, dev, "trial " + std::to_string(trial) + " r=" + fmt_double(r) +
                         " A=" + describe_matrix(a));
  }
  res.pass = res.first_failure.empty();
  return res;
}

SuiteResult enumeration_suite(int trials, std::uint64_t seed) {
  SuiteResult res{"enumeration", trials, 0.0, 1e-12, false, ""};
  Xoshiro256pp rng(seed);
  constexpr std::size_t kNodes = 4;
  constexpr int kMaxLen = 6;
  for (int trial = 0; trial < trials; ++trial) {
    const Matrix a = random_matrix(kNodes, rng);
    Matrix power = a;
    for (int l = 1; l <= kMaxLen; ++l) {
      if (l > 1) power = power * a;
      for (std::size_t i = 0; i < kNodes; ++i) {
        for (std::size_t j = 0; j < kNodes; ++j) {
          const double walked = oracle::enumerate_paths(a, i, j, l);
          const double dev = std::fabs(walked - power(i, j));
          record(res, dev, "trial " + std::to_string(trial) + " l=" + std::to_string(l) +
                               " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                               " A=" + describe_matrix(a));
        }
      }
    }
  }
  res.pass = res.first_failure.empty();
  return res;
}

SuiteResult markov_suite(int trials, std::uint64_t seed) {
  SuiteResult res{"markov", trials, 0.0, 1e-10, false, ""};
  Xoshiro256pp rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t n = 1 + rng.next_below(6);
    const std::size_t q = 1 + rng.next_below(2);
    const std::size_t size = n + q;

    // Transient rows keep their within-transient mass at or below 0.8, so
    // the spectral radius of the transient block stays safely under 0.9;
    // whatever is left goes to the absorbing states.
    Matrix t(size, size);
    for (std::size_t i = 0; i < q; ++i) t(i, i) = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> wa(n), wr(q);
      double wa_sum = 0.0, wr_sum = 0.0;
      for (auto &w : wa) {
        w = 0.01 + rng.next_double();
        wa_sum += w;
      }
      for (auto &w : wr) {
        w = 0.01 + rng.next_double();
        wr_sum += w;
      }
      const double a_mass = 0.8 * rng.next_double();
      for (std::size_t j = 0; j < n; ++j) t(q + i, q + j) = a_mass * wa[j] / wa_sum;
      for (std::size_t j = 0; j < q; ++j) t(q + i, j) = (1.0 - a_mass) * wr[j] / wr_sum;
    }
    const oracle::AbsorbingChain chain(t, q);

    Matrix bridge = oracle::fundamental_matrix(chain);
    for (std::size_t i = 0; i < n; ++i) bridge(i, i) -= 1.0;
    const Matrix energy = energy_matrix(chain.a_block(), 1.0);
    record(res, bridge.max_abs_diff(energy),
           "trial " + std::to_string(trial) + " fundamental bridge T=" + describe_matrix(t));

    for (int l : {1, 2, 8, 64}) {
      const oracle::AbsorbLimit limit = oracle::absorb_limit(chain, l);
      record(res, limit.lower_left_dev,
             "trial " + std::to_string(trial) + " block identity at l=" +
                 std::to_string(l) + " T=" + describe_matrix(t));
      if (l == 64 && limit.lower_right_max > 1e-4) {
        record(res, limit.lower_right_max,
               "trial " + std::to_string(trial) + " transient mass failed to decay, T=" +
                   describe_matrix(t));
      }
    }
  }
  res.pass = res.first_failure.empty();
  return res;
}

}  // namespace latentfs::verify
