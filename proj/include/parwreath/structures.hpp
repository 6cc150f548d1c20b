#ifndef PARWREATH_STRUCTURES_HPP_
#define PARWREATH_STRUCTURES_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parwreath/transform.hpp"

namespace parwreath {

// The four monoids attached to a uniform partition P of X = Y x Z:
//   txp   - all transformations mapping each block into some block
//   sigma - block equivalence preserved in both directions
//   gamma - partition-preserving and injective on each block
//   sxp   - partition-preserving permutations (the unit group of txp)
enum class StructureKind { txp, sigma, gamma, sxp };

const char* to_string(StructureKind kind);
std::optional<StructureKind> structure_from_string(std::string_view text);

struct GeneratorSet {
  uint32_t degree = 0;
  std::vector<Transformation> elements;
  std::vector<std::string> labels;

  void add(Transformation element, std::string label);
  size_t size() const { return elements.size(); }
};

bool membership(const Transformation& f, const UniformPartition& partition,
                StructureKind kind);

// |S|^m * |R| for the matching wreath decomposition:
//   txp (n^n)^m m^m, sigma (n^n)^m m!, gamma (n!)^m m^m, sxp (n!)^m m!.
mpz_class order_formula(uint32_t block_size, uint32_t block_count,
                        StructureKind kind);

// The explicit generating sets, flattened to degree n*m:
//   sxp   {x, y}
//   txp   {x, y, alpha, beta}
//   sigma {x, y, alpha}
//   gamma {x, y, beta}
// where y = ((0..n-1 cycle), id, ..., id)(0 1), x has the (0 1)-swap in
// slot 1 and top cycle (0 1 ... m-1) when n or m is odd and
// (1 2 ... m-1) otherwise, alpha collapses 0 and 1 inside block 0, and
// beta collapses blocks 0 and 1 from the top.
// Requires a non-trivial partition (n, m >= 2); trivial partitions raise
// unsupported_case naming the degenerate structure.
GeneratorSet standard_generators(uint32_t block_size, uint32_t block_count,
                                 StructureKind kind);

// {(0 1), (0 1 ... k-1)} for k >= 3; one transposition for k = 2; empty
// for k = 1.
GeneratorSet symmetric_group_generators(uint32_t degree);

// Symmetric group generators plus the map collapsing 0 onto 1.
GeneratorSet full_transformation_generators(uint32_t degree);

}  // namespace parwreath

#endif  // PARWREATH_STRUCTURES_HPP_
