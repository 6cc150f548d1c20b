#ifndef PARWREATH_TESTS_HELPERS_HPP_
#define PARWREATH_TESTS_HELPERS_HPP_

#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <vector>

#include "parwreath/transform.hpp"
#include "parwreath/wreath.hpp"

namespace testutil {

using parwreath::Transformation;
using parwreath::WreathElement;

// All k^k image tables of degree k, in odometer order.
template <typename Fn>
void for_all_maps(uint32_t k, Fn&& fn) {
  std::vector<uint8_t> images(k, 0);
  while (true) {
    fn(Transformation(images));
    uint32_t i = 0;
    while (i < k && ++images[i] == k) {
      images[i] = 0;
      ++i;
    }
    if (i == k) {
      break;
    }
  }
}

// Reference closure: plain breadth-first search on std::set, independent
// of the engine's hashed implementation.
inline std::set<std::vector<uint8_t>> naive_closure(
    uint32_t degree, const std::vector<Transformation>& generators) {
  std::set<std::vector<uint8_t>> seen;
  std::deque<Transformation> queue;
  const Transformation id = parwreath::identity(degree);
  seen.insert(
      std::vector<uint8_t>(id.images().begin(), id.images().end()));
  queue.push_back(id);
  while (!queue.empty()) {
    const Transformation current = queue.front();
    queue.pop_front();
    for (const Transformation& g : generators) {
      const Transformation next = parwreath::compose(current, g);
      std::vector<uint8_t> key(next.images().begin(), next.images().end());
      if (seen.insert(std::move(key)).second) {
        queue.push_back(next);
      }
    }
  }
  return seen;
}

inline Transformation random_map(std::mt19937& rng, uint32_t degree) {
  std::uniform_int_distribution<uint32_t> dist(0, degree - 1);
  std::vector<uint8_t> images(degree);
  for (uint32_t p = 0; p < degree; ++p) {
    images[p] = static_cast<uint8_t>(dist(rng));
  }
  return Transformation(std::move(images));
}

inline Transformation random_permutation(std::mt19937& rng, uint32_t degree) {
  std::vector<uint8_t> images(degree);
  for (uint32_t p = 0; p < degree; ++p) {
    images[p] = static_cast<uint8_t>(p);
  }
  std::shuffle(images.begin(), images.end(), rng);
  return Transformation(std::move(images));
}

inline WreathElement random_wreath(std::mt19937& rng, uint32_t n, uint32_t m) {
  std::vector<Transformation> bottoms;
  bottoms.reserve(m);
  for (uint32_t z = 0; z < m; ++z) {
    bottoms.push_back(random_map(rng, n));
  }
  return WreathElement(std::move(bottoms), random_map(rng, m));
}

}  // namespace testutil

#endif  // PARWREATH_TESTS_HELPERS_HPP_
