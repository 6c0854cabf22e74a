#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace maclane {

struct VerifyOptions {
  std::uint64_t p = 2;
  std::uint64_t seed = 1;
  int trials = 100;
  int max_degree = 10;
  long coeff_bound = 1000;
};

struct PropertyTally {
  std::string name;
  long passed = 0;
  long failed = 0;
};

// Randomized property suite over chains of depth <= 2: value multiplicativity, polygon sums,
// homogeneous multiplicativity, key polynomial round trips, chain JSON round trips and
// factorization bookkeeping. Deterministic for a fixed seed.
std::vector<PropertyTally> run_verify(const VerifyOptions& opts);

}  // namespace maclane
