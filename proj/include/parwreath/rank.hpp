#ifndef PARWREATH_RANK_HPP_
#define PARWREATH_RANK_HPP_

#include <cstdint>
#include <string>

#include "parwreath/enumeration.hpp"
#include "parwreath/structures.hpp"

namespace parwreath {

enum class RankMethod { exhaustive, units_decomposition };
enum class RankQuantity { rank, relative_rank, group_rank };

const char* to_string(RankMethod method);
const char* to_string(RankQuantity quantity);

struct RankCertificate {
  // Human-readable description of the exhausted candidate space.
  std::string search_space;
  // Candidate sets of size < value, all tested (or symmetry-skipped) and
  // failed; cumulative over the sizes below the reported value.
  uint64_t rejected_count = 0;
};

struct RankReport {
  RankQuantity quantity = RankQuantity::rank;
  RankMethod method = RankMethod::exhaustive;
  bool found = false;
  uint32_t value = 0;
  GeneratorSet witness;
  RankCertificate certificate;
  double elapsed_ms = 0.0;
};

struct RankOptions {
  uint32_t max_k = 6;
  // Candidate-count cap, cumulative over the whole search; running out
  // of budget without an answer is a budget_exceeded error, never a
  // silent approximation.
  uint64_t budget = 1'000'000'000;
  uint32_t threads = 1;
  // Skip candidate sets whose invertible part fails to generate the unit
  // group (sound: a generating set must contain one).
  bool unit_prefilter = false;
  // For group-rank searches, test only candidates that are
  // lexicographically minimal in their conjugation orbit.
  bool conjugation_reduction = true;
};

// Smallest k <= max_k such that some k-subset of the elements of s
// generates s; candidates are enumerated by image size descending and
// the reported witness is the lexicographically least successful one,
// for any thread count.
RankReport rank_exhaustive(const ClosureResult& s, const RankOptions& = {});

// Smallest k such that some k-subset V of the elements of s satisfies
// <V u fixed> = s; every element of fixed must lie in s.
RankReport relative_rank(const ClosureResult& s, const GeneratorSet& fixed,
                         const RankOptions& = {});

// rank s = rank(s : G) + rank G for the unit group G: runs a group-rank
// search on G and a relative-rank search of s over G, then combines.
RankReport rank_via_units(const ClosureResult& s, const RankOptions& = {});

// True iff the invertible elements of a generating set u generate the
// unit group of s. Requires <u> = s.
bool verify_units_generation(const ClosureResult& s, const GeneratorSet& u);

// True iff no single element extends the partition-preserving
// permutations to the whole structure: for every candidate c in the
// structure, <Sym(X,P) u {c}> is a proper submonoid. The sweep is
// exhaustive over all elements of the structure.
bool verify_kernel_obstruction(uint32_t block_size, uint32_t block_count,
                               StructureKind kind = StructureKind::txp,
                               const ClosureOptions& = {});

}  // namespace parwreath

#endif  // PARWREATH_RANK_HPP_
