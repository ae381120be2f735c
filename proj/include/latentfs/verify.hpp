#pragma once

#include <cstdint>
#include <string>

namespace latentfs::verify {

// Randomized self-check suites pitting the closed-form linear algebra
// against the reference computations in the oracle namespace. Each suite
// draws its own inputs from a seeded generator, records the worst
// deviation seen, and on failure captures the offending inputs verbatim so
// the case can be replayed.

struct SuiteResult {
  std::string name;
  int trials = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string first_failure;  // empty while pass is true
};

// Discounted walk-energy series against (I - rA)^-1 - I on random dense
// matrices up to 8x8 with r pinned at 0.9 / rho(A). 400 series terms leave
// a remainder orders of magnitude under the tolerance of 1e-8.
SuiteResult series_suite(int trials, std::uint64_t seed);

// Explicit walk enumeration against repeated squaring-free matrix powers
// on random 4x4 matrices for every endpoint pair and length up to 6,
// tolerance 1e-12.
SuiteResult enumeration_suite(int trials, std::uint64_t seed);

// Random absorbing chains: fundamental matrix minus identity against the
// energy matrix at r = 1, and the block identity for T^l at l in
// {1, 2, 8, 64}, tolerance 1e-10.
SuiteResult markov_suite(int trials, std::uint64_t seed);

}  // namespace latentfs::verify
