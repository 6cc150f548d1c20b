#ifndef PARWREATH_VERIFY_HPP_
#define PARWREATH_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "parwreath/structures.hpp"

namespace parwreath {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerifyOptions {
  uint64_t closure_limit = 2'000'000;
  uint64_t budget = 1'000'000'000;
  uint32_t threads = 1;
  uint32_t max_k = 6;
};

// rank T(X,P) = 4, rank Sigma = rank Gamma = 3, via the unit-group
// decomposition. CLI token: --theorem main.
std::vector<CheckResult> verify_rank_theorem(uint32_t block_size,
                                             uint32_t block_count,
                                             const VerifyOptions& = {});

// <x, y> exhausts the partition-preserving permutations:
// order (n!)^m m!. CLI token: --theorem wreath.
std::vector<CheckResult> verify_two_generated(uint32_t block_size,
                                              uint32_t block_count,
                                              const VerifyOptions& = {});

// The generating equalities over the unit group G = Sym(X,P):
// <G u {alpha}> = Sigma, <G u {beta}> = Gamma, <G u {alpha, beta}> = T(X,P).
// CLI token: --theorem lemma2.
std::vector<CheckResult> verify_generating_equalities(uint32_t block_size,
                                                      uint32_t block_count,
                                                      const VerifyOptions& = {});

// No single element extends Sym(X,P) to all of T(X,P).
// CLI token: --theorem kernel.
std::vector<CheckResult> verify_kernel_check(uint32_t block_size,
                                             uint32_t block_count,
                                             const VerifyOptions& = {});

}  // namespace parwreath

#endif  // PARWREATH_VERIFY_HPP_
