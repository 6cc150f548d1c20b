#ifndef PARWREATH_TRANSFORM_HPP_
#define PARWREATH_TRANSFORM_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "parwreath/error.hpp"

namespace parwreath {

// Points are 0-based. A transformation of degree k is a total map on
// {0..k-1} stored as an image table, one byte per point; this caps the
// degree at 256, which already exceeds anything the closure engine can
// hold in memory.
inline constexpr uint32_t max_degree = 256;

class Transformation {
 public:
  // Validates: 1 <= degree <= max_degree, every image in [0, degree).
  explicit Transformation(std::vector<uint8_t> images);

  uint32_t degree() const { return static_cast<uint32_t>(images_.size()); }

  // Image of a point under the right action.
  uint8_t operator[](uint32_t point) const { return images_[point]; }

  std::span<const uint8_t> images() const { return images_; }
  const uint8_t* data() const { return images_.data(); }

  friend bool operator==(const Transformation&, const Transformation&) =
      default;

 private:
  std::vector<uint8_t> images_;
};

struct TransformationHash {
  size_t operator()(const Transformation& f) const;
};

Transformation identity(uint32_t degree);

// Right action: p (f then g), i.e. result[p] = g[f[p]].
Transformation compose(const Transformation& f, const Transformation& g);

bool is_permutation(const Transformation& f);

// Two-sided inverse; requires is_permutation(f).
Transformation inverse(const Transformation& f);

// Permutation mapping points[i] -> points[i+1 mod len], fixing the rest.
// An empty point list yields the identity.
Transformation cycle(uint32_t degree, std::span<const uint32_t> points);
Transformation cycle(uint32_t degree, std::initializer_list<uint32_t> points);

uint32_t image_size(const Transformation& f);

// Partition of the domain into fibres of a transformation, stored as a
// class-id table canonicalized in first-occurrence order.
class Kernel {
 public:
  explicit Kernel(std::vector<uint8_t> class_of);

  uint32_t degree() const { return static_cast<uint32_t>(class_of_.size()); }
  uint32_t class_count() const { return class_count_; }
  uint8_t class_of(uint32_t point) const { return class_of_[point]; }
  bool same_class(uint32_t p, uint32_t q) const {
    return class_of_[p] == class_of_[q];
  }

  // True iff this kernel, read as a relation, is contained in `coarser`
  // (every class of this kernel sits inside one class of `coarser`).
  bool refines(const Kernel& coarser) const;

  friend bool operator==(const Kernel&, const Kernel&) = default;

 private:
  std::vector<uint8_t> class_of_;
  uint32_t class_count_ = 0;
};

Kernel kernel(const Transformation& f);

// m blocks of size n on n*m points in the canonical layout
// P_z = {n*z, ..., n*z + n - 1}; the pair (y, z) corresponds to y + n*z.
class UniformPartition {
 public:
  UniformPartition(uint32_t block_size, uint32_t block_count);

  uint32_t block_size() const { return block_size_; }    // n
  uint32_t block_count() const { return block_count_; }  // m
  uint32_t degree() const { return block_size_ * block_count_; }
  bool non_trivial() const { return block_size_ >= 2 && block_count_ >= 2; }

  uint32_t index_of(uint32_t y, uint32_t z) const;
  std::pair<uint32_t, uint32_t> coords_of(uint32_t point) const;
  uint32_t block_of(uint32_t point) const { return point / block_size_; }

  Kernel as_kernel() const;

  friend bool operator==(const UniformPartition&, const UniformPartition&) =
      default;

 private:
  uint32_t block_size_;
  uint32_t block_count_;
};

}  // namespace parwreath

#endif  // PARWREATH_TRANSFORM_HPP_
