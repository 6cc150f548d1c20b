#ifndef PARWREATH_SRC_BOUNDED_CLOSURE_HPP_
#define PARWREATH_SRC_BOUNDED_CLOSURE_HPP_

#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "parwreath/error.hpp"

namespace parwreath::detail {

// Allocation-free right-multiplication closure for the subset searches:
// the generated monoid is known to live inside a fixed ambient set, so
// pool and table are sized once and reused across calls (epoch-tagged
// slots make the reset O(1)).
class BoundedClosure {
 public:
  BoundedClosure(uint32_t degree, uint64_t bound)
      : degree_(degree), bound_(bound), identity_(degree) {
    uint64_t capacity = 16;
    while (capacity < (bound + 2) * 2) {
      capacity <<= 1;
    }
    slots_.assign(capacity, 0);
    mask_ = capacity - 1;
    pool_.resize((bound + 1) * degree);
    for (uint32_t p = 0; p < degree; ++p) {
      identity_[p] = static_cast<uint8_t>(p);
    }
  }

  // Order of <gens> (identity included), stopping as soon as the count
  // reaches stop_at. Sound only when the caller knows the generated
  // monoid has at most stop_at elements.
  uint64_t run(std::span<const uint8_t* const> gens, uint64_t stop_at) {
    if (++epoch_ == 0) {
      std::fill(slots_.begin(), slots_.end(), 0);
      epoch_ = 1;
    }
    count_ = 0;
    insert(identity_.data());
    for (const uint8_t* g : gens) {
      if (count_ >= stop_at) {
        return count_;
      }
      insert(g);
    }
    std::vector<uint8_t> product(degree_);
    for (uint64_t at = 0; at < count_; ++at) {
      if (count_ >= stop_at) {
        return count_;
      }
      for (const uint8_t* g : gens) {
        const uint8_t* src = pool_.data() + at * degree_;
        for (uint32_t p = 0; p < degree_; ++p) {
          product[p] = g[src[p]];
        }
        insert(product.data());
        if (count_ >= stop_at) {
          return count_;
        }
      }
    }
    return count_;
  }

 private:
  void insert(const uint8_t* bytes) {
    uint64_t s = std::hash<std::string_view>{}(std::string_view(
                     reinterpret_cast<const char*>(bytes), degree_)) &
                 mask_;
    while (true) {
      const uint64_t slot = slots_[s];
      if ((slot >> 32) != epoch_) {
        if (count_ > bound_) {
          fail(ErrorCode::invalid_argument,
               "bounded closure exceeded its ambient bound");
        }
        std::memcpy(pool_.data() + count_ * degree_, bytes, degree_);
        slots_[s] = (static_cast<uint64_t>(epoch_) << 32) | count_;
        ++count_;
        return;
      }
      if (std::memcmp(pool_.data() + (slot & 0xFFFFFFFFull) * degree_, bytes,
                      degree_) == 0) {
        return;
      }
      s = (s + 1) & mask_;
    }
  }

  uint32_t degree_;
  uint64_t bound_;
  std::vector<uint8_t> identity_;
  std::vector<uint8_t> pool_;
  std::vector<uint64_t> slots_;
  uint64_t mask_ = 0;
  uint64_t count_ = 0;
  uint32_t epoch_ = 0;
};

}  // namespace parwreath::detail

#endif  // PARWREATH_SRC_BOUNDED_CLOSURE_HPP_
