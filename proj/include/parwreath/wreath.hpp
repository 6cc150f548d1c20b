#ifndef PARWREATH_WREATH_HPP_
#define PARWREATH_WREATH_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "parwreath/transform.hpp"

namespace parwreath {

// An element (s_0,...,s_{m-1})r of the wreath product of the maps on
// {0..n-1} by the maps on {0..m-1}: m bottom transformations of degree n
// and one top transformation of degree m. Stored in semidirect-product
// form; the flat transformation view is reached via flatten().
class WreathElement {
 public:
  WreathElement(std::vector<Transformation> bottoms, Transformation top);

  static WreathElement identity(uint32_t bottom_degree, uint32_t top_degree);

  uint32_t bottom_degree() const { return bottom_degree_; }          // n
  uint32_t top_degree() const { return top_.degree(); }              // m
  const Transformation& bottom(uint32_t slot) const { return bottoms_[slot]; }
  std::span<const Transformation> bottoms() const { return bottoms_; }
  const Transformation& top() const { return top_; }

  // (y, z) -> (y s_z, z r).
  std::pair<uint32_t, uint32_t> act(uint32_t y, uint32_t z) const;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;

 private:
  std::vector<Transformation> bottoms_;
  Transformation top_;
  uint32_t bottom_degree_;
};

// Tuple rearrangement induced by a top transformation:
// result[i] = bottoms[i r]. Defined for arbitrary (also non-invertible) r.
std::vector<Transformation> theta(const Transformation& top,
                                  std::span<const Transformation> bottoms);

// (s1 r1)(s2 r2) = (s1 . theta(r1)(s2)) (r1 r2).
WreathElement multiply(const WreathElement& a, const WreathElement& b);

// r s r^{-1} for invertible r and s with identity top; equals
// multiply(multiply(embed_top(r), s), embed_top(inverse(r))).
WreathElement conjugate_by_top(const Transformation& r, const WreathElement& s);

// Embedding of a bottom map into the given slot, all other components
// identity, identity top.
WreathElement embed_bottom(uint32_t bottom_degree, uint32_t top_degree,
                           uint32_t slot, const Transformation& s);

// Embedding of a top map with all bottom components identity.
WreathElement embed_top(uint32_t bottom_degree, const Transformation& r);

// The transformation of degree n*m acting on the canonical layout:
// images[y + n*z] = y' + n*z' where (y', z') = act(y, z).
Transformation flatten(const WreathElement& w);

// Inverse of flatten on partition-preserving transformations; fails with
// not_partition_preserving if some block maps across two blocks.
WreathElement unflatten(const Transformation& f,
                        const UniformPartition& partition);

}  // namespace parwreath

#endif  // PARWREATH_WREATH_HPP_
