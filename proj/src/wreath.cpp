#include "parwreath/wreath.hpp"

#include <string>

namespace parwreath {

namespace {

void check_shape(const WreathElement& a, const WreathElement& b) {
  if (a.bottom_degree() != b.bottom_degree() ||
      a.top_degree() != b.top_degree()) {
    fail(ErrorCode::invalid_argument,
         "wreath shape mismatch: (" + std::to_string(a.bottom_degree()) +
             ", " + std::to_string(a.top_degree()) + ") vs (" +
             std::to_string(b.bottom_degree()) + ", " +
             std::to_string(b.top_degree()) + ")");
  }
}

}  // namespace

WreathElement::WreathElement(std::vector<Transformation> bottoms,
                             Transformation top)
    : bottoms_(std::move(bottoms)), top_(std::move(top)) {
  if (bottoms_.size() != top_.degree()) {
    fail(ErrorCode::invalid_argument,
         "expected " + std::to_string(top_.degree()) +
             " bottom components, got " + std::to_string(bottoms_.size()));
  }
  bottom_degree_ = bottoms_.front().degree();
  for (const Transformation& s : bottoms_) {
    if (s.degree() != bottom_degree_) {
      fail(ErrorCode::invalid_argument,
           "bottom components must share one degree");
    }
  }
}

WreathElement WreathElement::identity(uint32_t bottom_degree,
                                      uint32_t top_degree) {
  return WreathElement(
      std::vector<Transformation>(top_degree,
                                  parwreath::identity(bottom_degree)),
      parwreath::identity(top_degree));
}

std::pair<uint32_t, uint32_t> WreathElement::act(uint32_t y,
                                                 uint32_t z) const {
  if (y >= bottom_degree_ || z >= top_degree()) {
    fail(ErrorCode::invalid_argument,
         "coordinates (" + std::to_string(y) + ", " + std::to_string(z) +
             ") out of range");
  }
  return {bottoms_[z][y], top_[z]};
}

std::vector<Transformation> theta(const Transformation& top,
                                  std::span<const Transformation> bottoms) {
  if (top.degree() != bottoms.size()) {
    fail(ErrorCode::invalid_argument,
         "theta: top degree " + std::to_string(top.degree()) +
             " does not match tuple length " + std::to_string(bottoms.size()));
  }
  std::vector<Transformation> result;
  result.reserve(bottoms.size());
  for (uint32_t i = 0; i < top.degree(); ++i) {
    result.push_back(bottoms[top[i]]);
  }
  return result;
}

WreathElement multiply(const WreathElement& a, const WreathElement& b) {
  check_shape(a, b);
  std::vector<Transformation> bottoms;
  bottoms.reserve(a.top_degree());
  for (uint32_t i = 0; i < a.top_degree(); ++i) {
    bottoms.push_back(compose(a.bottom(i), b.bottom(a.top()[i])));
  }
  return WreathElement(std::move(bottoms), compose(a.top(), b.top()));
}

WreathElement conjugate_by_top(const Transformation& r,
                               const WreathElement& s) {
  if (!is_permutation(r)) {
    fail(ErrorCode::not_invertible, "conjugation requires an invertible top");
  }
  if (r.degree() != s.top_degree() ||
      s.top() != identity(s.top_degree())) {
    fail(ErrorCode::invalid_argument,
         "conjugate_by_top expects an identity-top element of matching shape");
  }
  return WreathElement(theta(r, s.bottoms()), s.top());
}

WreathElement embed_bottom(uint32_t bottom_degree, uint32_t top_degree,
                           uint32_t slot, const Transformation& s) {
  if (slot >= top_degree || s.degree() != bottom_degree) {
    fail(ErrorCode::invalid_argument, "embed_bottom: bad slot or degree");
  }
  std::vector<Transformation> bottoms(top_degree, identity(bottom_degree));
  bottoms[slot] = s;
  return WreathElement(std::move(bottoms), identity(top_degree));
}

WreathElement embed_top(uint32_t bottom_degree, const Transformation& r) {
  return WreathElement(
      std::vector<Transformation>(r.degree(), identity(bottom_degree)), r);
}

Transformation flatten(const WreathElement& w) {
  const uint32_t n = w.bottom_degree();
  const uint32_t m = w.top_degree();
  std::vector<uint8_t> images(static_cast<size_t>(n) * m);
  for (uint32_t z = 0; z < m; ++z) {
    const Transformation& s = w.bottom(z);
    const uint32_t target_block = w.top()[z];
    for (uint32_t y = 0; y < n; ++y) {
      images[y + n * z] = static_cast<uint8_t>(s[y] + n * target_block);
    }
  }
  return Transformation(std::move(images));
}

WreathElement unflatten(const Transformation& f,
                        const UniformPartition& partition) {
  if (f.degree() != partition.degree()) {
    fail(ErrorCode::invalid_argument,
         "degree does not match the partition layout");
  }
  const uint32_t n = partition.block_size();
  const uint32_t m = partition.block_count();
  std::vector<uint8_t> top(m);
  std::vector<Transformation> bottoms;
  bottoms.reserve(m);
  for (uint32_t z = 0; z < m; ++z) {
    const uint32_t target_block = partition.block_of(f[n * z]);
    std::vector<uint8_t> images(n);
    for (uint32_t y = 0; y < n; ++y) {
      const uint32_t image = f[y + n * z];
      if (partition.block_of(image) != target_block) {
        fail(ErrorCode::not_partition_preserving,
             "block " + std::to_string(z) + " maps across two blocks");
      }
      images[y] = static_cast<uint8_t>(image - n * target_block);
    }
    bottoms.emplace_back(std::move(images));
    top[z] = static_cast<uint8_t>(target_block);
  }
  return WreathElement(std::move(bottoms), Transformation(std::move(top)));
}

}  // namespace parwreath
