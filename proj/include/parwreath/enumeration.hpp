#ifndef PARWREATH_ENUMERATION_HPP_
#define PARWREATH_ENUMERATION_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "parwreath/structures.hpp"
#include "parwreath/transform.hpp"

namespace parwreath {

struct ClosureOptions {
  // Element cap. Hitting it aborts the enumeration with partial() set;
  // this is an ordinary result, not an error.
  uint64_t limit = 2'000'000;
  uint32_t threads = 1;
  // Record one witnessing word per element (BFS order, shortest or tied).
  bool keep_words = false;
};

// The element set of a generated monoid <U>: deduplicated, in a stable
// enumeration order (identity first, then generators, then products in
// BFS order). Immutable once built and safe to share between threads.
class ClosureResult {
 public:
  uint32_t degree() const { return degree_; }
  uint64_t order() const { return count_; }
  bool partial() const { return partial_; }
  uint32_t generator_count() const { return generator_count_; }

  std::span<const uint8_t> element_view(uint64_t index) const {
    return {pool_.data() + index * degree_, degree_};
  }
  Transformation element(uint64_t index) const;

  std::optional<uint64_t> index_of(std::span<const uint8_t> images) const;
  std::optional<uint64_t> index_of(const Transformation& f) const;

  // True iff f was enumerated; degree mismatch is an error.
  bool contains(const Transformation& f) const;

  bool has_words() const { return !parents_.empty() || count_ <= 1; }
  // Generator indices (into the generating set handed to closure())
  // composing left to right to element(index); empty for the identity.
  std::vector<uint32_t> word(uint64_t index) const;

 private:
  friend ClosureResult closure(const GeneratorSet&, const ClosureOptions&);

  uint32_t degree_ = 0;
  uint32_t generator_count_ = 0;
  uint64_t count_ = 0;
  bool partial_ = false;
  bool keep_words_ = false;
  std::vector<uint8_t> pool_;
  std::vector<uint32_t> slots_;
  uint64_t slot_mask_ = 0;
  std::vector<std::pair<uint32_t, uint32_t>> parents_;
};

// Breadth-first right-multiplication closure. The element set and its
// enumeration order depend only on the generator list, not on the thread
// count.
ClosureResult closure(const GeneratorSet& generators,
                      const ClosureOptions& options = {});

// True iff <U> has exactly target_order elements. Enumerates at most
// target_order elements, so an oversized closure exits early.
bool is_generating(const GeneratorSet& generators, uint64_t target_order,
                   ClosureOptions options = {});

// Permutations of the result; for a closed set of transformations these
// are exactly the invertible elements.
GeneratorSet units(const ClosureResult& c);

// All elements, labelled e0, e1, ...
GeneratorSet elements_of(const ClosureResult& c);

bool same_element_set(const ClosureResult& a, const ClosureResult& b);

}  // namespace parwreath

#endif  // PARWREATH_ENUMERATION_HPP_
