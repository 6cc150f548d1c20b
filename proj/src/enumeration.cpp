#include "parwreath/enumeration.hpp"

#include <algorithm>
#include <bitset>
#include <cstring>
#include <functional>
#include <string_view>

#include "parallel.hpp"

namespace parwreath {

namespace {

constexpr uint32_t kEmptySlot = 0xFFFFFFFFu;
constexpr uint64_t kMaxElements = 0xFFFFFFF0ull;

uint64_t hash_bytes(const uint8_t* data, uint32_t width) {
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(data), width));
}

struct BuildTable {
  uint32_t width;
  std::vector<uint8_t>& pool;
  std::vector<uint32_t> slots;
  uint64_t mask;
  uint64_t count = 0;

  BuildTable(uint32_t width, std::vector<uint8_t>& pool, uint64_t expected)
      : width(width), pool(pool) {
    uint64_t capacity = 64;
    while (capacity < expected * 2) {
      capacity <<= 1;
    }
    slots.assign(capacity, kEmptySlot);
    mask = capacity - 1;
  }

  const uint8_t* element(uint64_t index) const {
    return pool.data() + index * width;
  }

  void grow() {
    const uint64_t capacity = (mask + 1) << 1;
    slots.assign(capacity, kEmptySlot);
    mask = capacity - 1;
    for (uint64_t i = 0; i < count; ++i) {
      uint64_t s = hash_bytes(element(i), width) & mask;
      while (slots[s] != kEmptySlot) {
        s = (s + 1) & mask;
      }
      slots[s] = static_cast<uint32_t>(i);
    }
  }

  // Read-only probe, safe while no insert is in flight.
  bool find(const uint8_t* bytes, uint64_t hash) const {
    uint64_t s = hash & mask;
    while (true) {
      const uint32_t idx = slots[s];
      if (idx == kEmptySlot) {
        return false;
      }
      if (std::memcmp(element(idx), bytes, width) == 0) {
        return true;
      }
      s = (s + 1) & mask;
    }
  }

  // Returns the element index and whether it was newly inserted.
  std::pair<uint64_t, bool> insert(const uint8_t* bytes, uint64_t hash) {
    uint64_t s = hash & mask;
    while (true) {
      const uint32_t idx = slots[s];
      if (idx == kEmptySlot) {
        pool.insert(pool.end(), bytes, bytes + width);
        slots[s] = static_cast<uint32_t>(count);
        const uint64_t new_index = count++;
        if (count * 2 > mask + 1) {
          grow();
        }
        return {new_index, true};
      }
      if (std::memcmp(element(idx), bytes, width) == 0) {
        return {idx, false};
      }
      s = (s + 1) & mask;
    }
  }
};

}  // namespace

Transformation ClosureResult::element(uint64_t index) const {
  const auto view = element_view(index);
  return Transformation(std::vector<uint8_t>(view.begin(), view.end()));
}

std::optional<uint64_t> ClosureResult::index_of(
    std::span<const uint8_t> images) const {
  if (images.size() != degree_ || count_ == 0) {
    return std::nullopt;
  }
  uint64_t s = hash_bytes(images.data(), degree_) & slot_mask_;
  while (true) {
    const uint32_t idx = slots_[s];
    if (idx == kEmptySlot) {
      return std::nullopt;
    }
    if (std::memcmp(pool_.data() + static_cast<uint64_t>(idx) * degree_,
                    images.data(), degree_) == 0) {
      return idx;
    }
    s = (s + 1) & slot_mask_;
  }
}

std::optional<uint64_t> ClosureResult::index_of(const Transformation& f) const {
  return index_of(f.images());
}

bool ClosureResult::contains(const Transformation& f) const {
  if (f.degree() != degree_) {
    fail(ErrorCode::invalid_argument,
         "degree mismatch: element has degree " + std::to_string(f.degree()) +
             ", closure has degree " + std::to_string(degree_));
  }
  return index_of(f.images()).has_value();
}

std::vector<uint32_t> ClosureResult::word(uint64_t index) const {
  if (!keep_words_) {
    fail(ErrorCode::invalid_argument,
         "closure was enumerated without word logging");
  }
  std::vector<uint32_t> result;
  uint64_t at = index;
  while (parents_[at].first != kEmptySlot) {
    result.push_back(parents_[at].second);
    at = parents_[at].first;
  }
  std::reverse(result.begin(), result.end());
  return result;
}

ClosureResult closure(const GeneratorSet& generators,
                      const ClosureOptions& options) {
  if (generators.degree < 1 || generators.degree > max_degree) {
    fail(ErrorCode::invalid_argument, "generator set needs a valid degree");
  }
  for (const Transformation& g : generators.elements) {
    if (g.degree() != generators.degree) {
      fail(ErrorCode::invalid_argument, "generators must share one degree");
    }
  }
  if (options.limit < 1 || options.limit > kMaxElements) {
    fail(ErrorCode::invalid_argument, "limit out of range");
  }
  const uint32_t width = generators.degree;
  const uint32_t gen_count = static_cast<uint32_t>(generators.size());
  const uint32_t threads = std::max(1u, options.threads);

  ClosureResult result;
  result.degree_ = width;
  result.generator_count_ = gen_count;
  result.keep_words_ = options.keep_words;

  BuildTable table(width, result.pool_, 1024);
  const auto note_parent = [&](uint32_t parent, uint32_t gen) {
    if (options.keep_words) {
      result.parents_.emplace_back(parent, gen);
    }
  };

  bool partial = false;
  const Transformation id = identity(width);
  table.insert(id.data(), hash_bytes(id.data(), width));
  note_parent(kEmptySlot, kEmptySlot);
  for (uint32_t gi = 0; gi < gen_count && !partial; ++gi) {
    const uint8_t* bytes = generators.elements[gi].data();
    const uint64_t hash = hash_bytes(bytes, width);
    if (table.count == options.limit) {
      partial = !table.find(bytes, hash);
    } else if (table.insert(bytes, hash).second) {
      note_parent(0, gi);
    }
  }

  // Raw image tables of the generators, contiguous for the hot loop.
  std::vector<uint8_t> gen_bytes(static_cast<size_t>(gen_count) * width);
  for (uint32_t gi = 0; gi < gen_count; ++gi) {
    std::memcpy(gen_bytes.data() + static_cast<size_t>(gi) * width,
                generators.elements[gi].data(), width);
  }

  // Queue-order expansion in chunks: products and hashes are computed in
  // parallel against a read-only snapshot of the table, then inserted
  // serially in (element, generator) order. The enumeration order is
  // therefore independent of the thread count.
  std::vector<uint8_t> products;
  std::vector<uint64_t> hashes;
  std::vector<uint8_t> present;

  uint64_t processed = 0;
  while (processed < table.count && !partial && gen_count > 0) {
    const uint64_t batch_cap =
        std::max<uint64_t>(gen_count, (1u << 22));
    const uint64_t chunk_elems = std::min(
        table.count - processed, std::max<uint64_t>(1, batch_cap / gen_count));
    const uint64_t batch = chunk_elems * gen_count;
    products.resize(batch * width);
    hashes.resize(batch);
    present.resize(batch);

    detail::parallel_for(0, batch, threads, [&](uint64_t lo, uint64_t hi) {
      for (uint64_t c = lo; c < hi; ++c) {
        const uint64_t src_index = processed + c / gen_count;
        const uint32_t gi = static_cast<uint32_t>(c % gen_count);
        const uint8_t* src = table.element(src_index);
        const uint8_t* gen = gen_bytes.data() + static_cast<size_t>(gi) * width;
        uint8_t* out = products.data() + c * width;
        for (uint32_t p = 0; p < width; ++p) {
          out[p] = gen[src[p]];
        }
        hashes[c] = hash_bytes(out, width);
        present[c] = table.find(out, hashes[c]) ? 1 : 0;
      }
    });

    for (uint64_t c = 0; c < batch; ++c) {
      if (present[c]) {
        continue;
      }
      const uint8_t* bytes = products.data() + c * width;
      if (table.count == options.limit) {
        // Inserting would exceed the cap; check it is actually new.
        if (!table.find(bytes, hashes[c])) {
          partial = true;
          break;
        }
        continue;
      }
      if (table.insert(bytes, hashes[c]).second) {
        note_parent(static_cast<uint32_t>(processed + c / gen_count),
                    static_cast<uint32_t>(c % gen_count));
      }
    }
    processed += chunk_elems;
  }

  result.count_ = table.count;
  result.partial_ = partial;
  result.slots_ = std::move(table.slots);
  result.slot_mask_ = table.mask;
  return result;
}

bool is_generating(const GeneratorSet& generators, uint64_t target_order,
                   ClosureOptions options) {
  if (target_order < 1) {
    fail(ErrorCode::invalid_argument, "target order must be at least 1");
  }
  options.limit = target_order;
  options.keep_words = false;
  const ClosureResult c = closure(generators, options);
  return !c.partial() && c.order() == target_order;
}

GeneratorSet units(const ClosureResult& c) {
  GeneratorSet result;
  result.degree = c.degree();
  for (uint64_t i = 0; i < c.order(); ++i) {
    const auto view = c.element_view(i);
    std::bitset<max_degree> seen;
    bool perm = true;
    for (uint8_t p : view) {
      if (seen[p]) {
        perm = false;
        break;
      }
      seen[p] = true;
    }
    if (perm) {
      result.add(Transformation(std::vector<uint8_t>(view.begin(), view.end())),
                 "u" + std::to_string(i));
    }
  }
  return result;
}

GeneratorSet elements_of(const ClosureResult& c) {
  GeneratorSet result;
  result.degree = c.degree();
  for (uint64_t i = 0; i < c.order(); ++i) {
    result.add(c.element(i), "e" + std::to_string(i));
  }
  return result;
}

bool same_element_set(const ClosureResult& a, const ClosureResult& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) {
    return false;
  }
  for (uint64_t i = 0; i < a.order(); ++i) {
    if (!b.index_of(a.element_view(i))) {
      return false;
    }
  }
  return true;
}

}  // namespace parwreath
