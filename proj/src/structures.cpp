#include "parwreath/structures.hpp"

#include <algorithm>
#include <bitset>

#include "parwreath/wreath.hpp"

namespace parwreath {

const char* to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::txp:
      return "txp";
    case StructureKind::sigma:
      return "sigma";
    case StructureKind::gamma:
      return "gamma";
    case StructureKind::sxp:
      return "sxp";
  }
  return "?";
}

std::optional<StructureKind> structure_from_string(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "txp") return StructureKind::txp;
  if (lower == "sigma") return StructureKind::sigma;
  if (lower == "gamma") return StructureKind::gamma;
  if (lower == "sxp") return StructureKind::sxp;
  return std::nullopt;
}

void GeneratorSet::add(Transformation element, std::string label) {
  if (degree == 0 && elements.empty()) {
    degree = element.degree();
  }
  if (element.degree() != degree) {
    fail(ErrorCode::invalid_argument,
         "generator degree " + std::to_string(element.degree()) +
             " does not match set degree " + std::to_string(degree));
  }
  for (const std::string& existing : labels) {
    if (existing == label) {
      fail(ErrorCode::invalid_argument, "duplicate label '" + label + "'");
    }
  }
  elements.push_back(std::move(element));
  labels.push_back(std::move(label));
}

bool membership(const Transformation& f, const UniformPartition& partition,
                StructureKind kind) {
  if (f.degree() != partition.degree()) {
    fail(ErrorCode::invalid_argument,
         "degree does not match the partition layout");
  }
  const uint32_t n = partition.block_size();
  const uint32_t m = partition.block_count();

  // Preserving: every block maps into a single block. Collect the induced
  // block map along the way.
  std::vector<uint8_t> block_image(m);
  for (uint32_t z = 0; z < m; ++z) {
    const uint32_t target = partition.block_of(f[n * z]);
    for (uint32_t y = 1; y < n; ++y) {
      if (partition.block_of(f[y + n * z]) != target) {
        return false;
      }
    }
    block_image[z] = static_cast<uint8_t>(target);
  }

  switch (kind) {
    case StructureKind::txp:
      return true;
    case StructureKind::sigma: {
      std::bitset<max_degree> seen;
      for (uint32_t z = 0; z < m; ++z) {
        if (seen[block_image[z]]) {
          return false;
        }
        seen[block_image[z]] = true;
      }
      return true;
    }
    case StructureKind::gamma: {
      for (uint32_t z = 0; z < m; ++z) {
        std::bitset<max_degree> seen;
        for (uint32_t y = 0; y < n; ++y) {
          const uint8_t image = f[y + n * z];
          if (seen[image]) {
            return false;
          }
          seen[image] = true;
        }
      }
      return true;
    }
    case StructureKind::sxp:
      return is_permutation(f);
  }
  return false;
}

mpz_class order_formula(uint32_t block_size, uint32_t block_count,
                        StructureKind kind) {
  if (block_size < 1 || block_count < 1) {
    fail(ErrorCode::invalid_argument,
         "block size and block count must be at least 1");
  }
  const auto power = [](uint32_t base, uint32_t exp) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), base, exp);
    return result;
  };
  const auto factorial = [](uint32_t k) {
    mpz_class result;
    mpz_fac_ui(result.get_mpz_t(), k);
    return result;
  };

  const bool bottom_full =
      kind == StructureKind::txp || kind == StructureKind::sigma;
  const bool top_full =
      kind == StructureKind::txp || kind == StructureKind::gamma;

  mpz_class bottom = bottom_full ? power(block_size, block_size)
                                 : factorial(block_size);
  mpz_class bottom_part;
  mpz_pow_ui(bottom_part.get_mpz_t(), bottom.get_mpz_t(), block_count);
  mpz_class top = top_full ? power(block_count, block_count)
                           : factorial(block_count);
  return bottom_part * top;
}

namespace {

const char* degenerate_identity(uint32_t block_size, StructureKind kind) {
  // Identities for trivial partitions: with singleton blocks (n = 1) the
  // partition is the identity relation, with one block (m = 1) it is the
  // universal relation.
  const bool singletons = block_size < 2;
  switch (kind) {
    case StructureKind::txp:
      return "T(X,P) = T_X (rank 3 for |X| >= 3)";
    case StructureKind::sigma:
      return singletons ? "Sigma(X,P) = Sym X (rank 2 for |X| >= 3)"
                        : "Sigma(X,P) = T_X (rank 3 for |X| >= 3)";
    case StructureKind::gamma:
      return singletons ? "Gamma(X,P) = T_X (rank 3 for |X| >= 3)"
                        : "Gamma(X,P) = Sym X (rank 2 for |X| >= 3)";
    case StructureKind::sxp:
      return "Sym(X,P) = Sym X (rank 2 for |X| >= 3)";
  }
  return "";
}

}  // namespace

GeneratorSet standard_generators(uint32_t block_size, uint32_t block_count,
                                 StructureKind kind) {
  const uint32_t n = block_size;
  const uint32_t m = block_count;
  if (n < 2 || m < 2) {
    fail(ErrorCode::unsupported_case,
         "trivial partition (" + std::to_string(n) + " x " +
             std::to_string(m) + "): " + degenerate_identity(n, kind));
  }
  UniformPartition partition(n, m);

  // x: swap in bottom slot 1; top is the full m-cycle when n or m is odd
  // and the (m-1)-cycle fixing 0 otherwise.
  std::vector<Transformation> x_bottoms(m, identity(n));
  x_bottoms[1] = cycle(n, {0, 1});
  std::vector<uint32_t> top_points;
  for (uint32_t i = (n % 2 == 0 && m % 2 == 0) ? 1 : 0; i < m; ++i) {
    top_points.push_back(i);
  }
  const WreathElement x(std::move(x_bottoms), cycle(m, top_points));

  // y: full n-cycle in bottom slot 0, transposition on top.
  std::vector<Transformation> y_bottoms(m, identity(n));
  std::vector<uint32_t> bottom_points(n);
  for (uint32_t i = 0; i < n; ++i) {
    bottom_points[i] = i;
  }
  y_bottoms[0] = cycle(n, bottom_points);
  const WreathElement y(std::move(y_bottoms), cycle(m, {0, 1}));

  // alpha collapses 0 onto 1 inside block 0; beta does the same on top.
  std::vector<uint8_t> collapse(n);
  for (uint32_t i = 0; i < n; ++i) {
    collapse[i] = static_cast<uint8_t>(i);
  }
  collapse[0] = 1;
  const WreathElement alpha =
      embed_bottom(n, m, 0, Transformation(std::move(collapse)));
  std::vector<uint8_t> top_collapse(m);
  for (uint32_t i = 0; i < m; ++i) {
    top_collapse[i] = static_cast<uint8_t>(i);
  }
  top_collapse[0] = 1;
  const WreathElement beta =
      embed_top(n, Transformation(std::move(top_collapse)));

  GeneratorSet result;
  result.degree = partition.degree();
  result.add(flatten(x), "x");
  result.add(flatten(y), "y");
  if (kind == StructureKind::txp || kind == StructureKind::sigma) {
    result.add(flatten(alpha), "alpha");
  }
  if (kind == StructureKind::txp || kind == StructureKind::gamma) {
    result.add(flatten(beta), "beta");
  }
  return result;
}

GeneratorSet symmetric_group_generators(uint32_t degree) {
  GeneratorSet result;
  result.degree = degree;
  if (degree < 1 || degree > max_degree) {
    fail(ErrorCode::invalid_argument, "bad degree");
  }
  if (degree >= 2) {
    result.add(cycle(degree, {0, 1}), "t");
  }
  if (degree >= 3) {
    std::vector<uint32_t> points(degree);
    for (uint32_t i = 0; i < degree; ++i) {
      points[i] = i;
    }
    result.add(cycle(degree, points), "c");
  }
  return result;
}

GeneratorSet full_transformation_generators(uint32_t degree) {
  GeneratorSet result = symmetric_group_generators(degree);
  if (degree >= 2) {
    std::vector<uint8_t> collapse(degree);
    for (uint32_t i = 0; i < degree; ++i) {
      collapse[i] = static_cast<uint8_t>(i);
    }
    collapse[0] = 1;
    result.add(Transformation(std::move(collapse)), "a");
  }
  return result;
}

}  // namespace parwreath
