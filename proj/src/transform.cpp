#include "parwreath/transform.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <string>
#include <string_view>

namespace parwreath {

namespace {

void check_degree(size_t degree) {
  if (degree < 1 || degree > max_degree) {
    fail(ErrorCode::invalid_argument,
         "degree must be in [1, " + std::to_string(max_degree) + "], got " +
             std::to_string(degree));
  }
}

void check_equal_degree(const Transformation& f, const Transformation& g) {
  if (f.degree() != g.degree()) {
    fail(ErrorCode::invalid_argument,
         "degree mismatch: " + std::to_string(f.degree()) + " vs " +
             std::to_string(g.degree()));
  }
}

}  // namespace

Transformation::Transformation(std::vector<uint8_t> images)
    : images_(std::move(images)) {
  check_degree(images_.size());
  for (uint8_t p : images_) {
    if (p >= images_.size()) {
      fail(ErrorCode::invalid_argument,
           "image " + std::to_string(p) + " out of range for degree " +
               std::to_string(images_.size()));
    }
  }
}

size_t TransformationHash::operator()(const Transformation& f) const {
  return std::hash<std::string_view>{}(std::string_view(
      reinterpret_cast<const char*>(f.data()), f.degree()));
}

Transformation identity(uint32_t degree) {
  check_degree(degree);
  std::vector<uint8_t> images(degree);
  for (uint32_t p = 0; p < degree; ++p) {
    images[p] = static_cast<uint8_t>(p);
  }
  return Transformation(std::move(images));
}

Transformation compose(const Transformation& f, const Transformation& g) {
  check_equal_degree(f, g);
  std::vector<uint8_t> images(f.degree());
  for (uint32_t p = 0; p < f.degree(); ++p) {
    images[p] = g[f[p]];
  }
  return Transformation(std::move(images));
}

bool is_permutation(const Transformation& f) {
  std::bitset<max_degree> seen;
  for (uint32_t p = 0; p < f.degree(); ++p) {
    if (seen[f[p]]) {
      return false;
    }
    seen[f[p]] = true;
  }
  return true;
}

Transformation inverse(const Transformation& f) {
  if (!is_permutation(f)) {
    fail(ErrorCode::not_invertible, "transformation is not a permutation");
  }
  std::vector<uint8_t> images(f.degree());
  for (uint32_t p = 0; p < f.degree(); ++p) {
    images[f[p]] = static_cast<uint8_t>(p);
  }
  return Transformation(std::move(images));
}

Transformation cycle(uint32_t degree, std::span<const uint32_t> points) {
  check_degree(degree);
  std::bitset<max_degree> seen;
  for (uint32_t p : points) {
    if (p >= degree) {
      fail(ErrorCode::invalid_argument,
           "cycle point " + std::to_string(p) + " out of range for degree " +
               std::to_string(degree));
    }
    if (seen[p]) {
      fail(ErrorCode::invalid_argument,
           "cycle point " + std::to_string(p) + " repeated");
    }
    seen[p] = true;
  }
  std::vector<uint8_t> images(degree);
  for (uint32_t p = 0; p < degree; ++p) {
    images[p] = static_cast<uint8_t>(p);
  }
  for (size_t i = 0; i < points.size(); ++i) {
    images[points[i]] = static_cast<uint8_t>(points[(i + 1) % points.size()]);
  }
  return Transformation(std::move(images));
}

Transformation cycle(uint32_t degree, std::initializer_list<uint32_t> points) {
  return cycle(degree, std::span<const uint32_t>(points.begin(), points.size()));
}

uint32_t image_size(const Transformation& f) {
  std::bitset<max_degree> seen;
  uint32_t count = 0;
  for (uint32_t p = 0; p < f.degree(); ++p) {
    if (!seen[f[p]]) {
      seen[f[p]] = true;
      ++count;
    }
  }
  return count;
}

Kernel::Kernel(std::vector<uint8_t> class_of) : class_of_(std::move(class_of)) {
  check_degree(class_of_.size());
  // Renumber class ids in first-occurrence order.
  std::vector<int> renamed(max_degree, -1);
  int next = 0;
  for (uint8_t& c : class_of_) {
    if (renamed[c] < 0) {
      renamed[c] = next++;
    }
    c = static_cast<uint8_t>(renamed[c]);
  }
  class_count_ = static_cast<uint32_t>(next);
}

bool Kernel::refines(const Kernel& coarser) const {
  if (degree() != coarser.degree()) {
    fail(ErrorCode::invalid_argument, "kernel degree mismatch");
  }
  std::vector<int> image_class(class_count_, -1);
  for (uint32_t p = 0; p < degree(); ++p) {
    int& assigned = image_class[class_of_[p]];
    if (assigned < 0) {
      assigned = coarser.class_of(p);
    } else if (assigned != coarser.class_of(p)) {
      return false;
    }
  }
  return true;
}

Kernel kernel(const Transformation& f) {
  // Points with equal image share a class; Kernel canonicalizes the ids.
  return Kernel(std::vector<uint8_t>(f.images().begin(), f.images().end()));
}

UniformPartition::UniformPartition(uint32_t block_size, uint32_t block_count)
    : block_size_(block_size), block_count_(block_count) {
  if (block_size < 1 || block_count < 1) {
    fail(ErrorCode::invalid_argument,
         "block size and block count must be at least 1");
  }
  check_degree(static_cast<size_t>(block_size) * block_count);
}

uint32_t UniformPartition::index_of(uint32_t y, uint32_t z) const {
  if (y >= block_size_ || z >= block_count_) {
    fail(ErrorCode::invalid_argument,
         "coordinates (" + std::to_string(y) + ", " + std::to_string(z) +
             ") out of range for " + std::to_string(block_size_) + "x" +
             std::to_string(block_count_));
  }
  return y + block_size_ * z;
}

std::pair<uint32_t, uint32_t> UniformPartition::coords_of(
    uint32_t point) const {
  if (point >= degree()) {
    fail(ErrorCode::invalid_argument, "point out of range");
  }
  return {point % block_size_, point / block_size_};
}

Kernel UniformPartition::as_kernel() const {
  std::vector<uint8_t> class_of(degree());
  for (uint32_t p = 0; p < degree(); ++p) {
    class_of[p] = static_cast<uint8_t>(block_of(p));
  }
  return Kernel(std::move(class_of));
}

}  // namespace parwreath
