#include <map>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "parwreath/enumeration.hpp"
#include "parwreath/structures.hpp"
#include "parwreath/wreath.hpp"

using namespace parwreath;

namespace {

constexpr StructureKind kKinds[] = {StructureKind::txp, StructureKind::sigma,
                                    StructureKind::gamma, StructureKind::sxp};

uint64_t filter_count(uint32_t n, uint32_t m, StructureKind kind) {
  const UniformPartition p(n, m);
  uint64_t count = 0;
  testutil::for_all_maps(p.degree(), [&](const Transformation& f) {
    if (membership(f, p, kind)) {
      ++count;
    }
  });
  return count;
}

// The wreath side of each structure: all (s_0..s_{m-1}) r with bottoms
// and top drawn from the full or symmetric monoid as the kind dictates.
std::set<std::vector<uint8_t>> wreath_side(uint32_t n, uint32_t m,
                                           StructureKind kind) {
  const bool bottom_full =
      kind == StructureKind::txp || kind == StructureKind::sigma;
  const bool top_full =
      kind == StructureKind::txp || kind == StructureKind::gamma;
  std::vector<Transformation> bottom_choices;
  testutil::for_all_maps(n, [&](const Transformation& f) {
    if (bottom_full || is_permutation(f)) {
      bottom_choices.push_back(f);
    }
  });
  std::vector<Transformation> top_choices;
  testutil::for_all_maps(m, [&](const Transformation& f) {
    if (top_full || is_permutation(f)) {
      top_choices.push_back(f);
    }
  });

  std::set<std::vector<uint8_t>> result;
  std::vector<size_t> pick(m, 0);
  while (true) {
    std::vector<Transformation> bottoms;
    bottoms.reserve(m);
    for (size_t z = 0; z < m; ++z) {
      bottoms.push_back(bottom_choices[pick[z]]);
    }
    for (const Transformation& top : top_choices) {
      const Transformation flat = flatten(WreathElement(bottoms, top));
      result.insert(
          std::vector<uint8_t>(flat.images().begin(), flat.images().end()));
    }
    size_t i = 0;
    while (i < m && ++pick[i] == bottom_choices.size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == m) {
      break;
    }
  }
  return result;
}

}  // namespace

TEST_CASE("structures: membership classifies the worked examples") {
  const UniformPartition p(2, 2);
  const Transformation alpha({1, 1, 2, 3});
  CHECK(membership(alpha, p, StructureKind::txp));
  CHECK(membership(alpha, p, StructureKind::sigma));
  CHECK_FALSE(membership(alpha, p, StructureKind::gamma));
  CHECK_FALSE(membership(alpha, p, StructureKind::sxp));

  for (StructureKind kind : kKinds) {
    CHECK(membership(identity(4), p, kind));
  }

  const Transformation beta({2, 3, 2, 3});
  CHECK(membership(beta, p, StructureKind::txp));
  CHECK_FALSE(membership(beta, p, StructureKind::sigma));
  CHECK(membership(beta, p, StructureKind::gamma));
  CHECK_FALSE(membership(beta, p, StructureKind::sxp));

  CHECK_THROWS_AS(membership(identity(5), p, StructureKind::txp), Error);
}

TEST_CASE("structures: membership implications") {
  const UniformPartition p(2, 2);
  testutil::for_all_maps(4, [&](const Transformation& f) {
    if (membership(f, p, StructureKind::sxp)) {
      CHECK(membership(f, p, StructureKind::sigma));
      CHECK(membership(f, p, StructureKind::gamma));
    }
    if (membership(f, p, StructureKind::sigma) ||
        membership(f, p, StructureKind::gamma)) {
      CHECK(membership(f, p, StructureKind::txp));
    }
  });
}

TEST_CASE("structures: order formula against the filter oracle") {
  const std::map<StructureKind, uint64_t> expected22 = {
      {StructureKind::txp, 64},
      {StructureKind::sigma, 32},
      {StructureKind::gamma, 16},
      {StructureKind::sxp, 8},
  };
  for (const auto& [kind, value] : expected22) {
    CHECK(order_formula(2, 2, kind) == value);
    CHECK(filter_count(2, 2, kind) == value);
  }

  for (StructureKind kind : kKinds) {
    CHECK(order_formula(1, 1, kind) == 1);
  }
  CHECK(order_formula(3, 2, StructureKind::sxp) == 72);

  // Every (n, m) with degree <= 4, all kinds.
  for (uint32_t n = 1; n <= 4; ++n) {
    for (uint32_t m = 1; n * m <= 4; ++m) {
      for (StructureKind kind : kKinds) {
        const mpz_class formula = order_formula(n, m, kind);
        CHECK(mpz_cmp_ui(formula.get_mpz_t(), filter_count(n, m, kind)) == 0);
      }
    }
  }
}

TEST_CASE("structures: explicit generators at (2,2)") {
  const GeneratorSet sxp = standard_generators(2, 2, StructureKind::sxp);
  REQUIRE(sxp.size() == 2);
  CHECK(sxp.labels[0] == "x");
  CHECK(sxp.labels[1] == "y");
  CHECK(sxp.elements[0] == Transformation({0, 1, 3, 2}));
  CHECK(sxp.elements[1] == Transformation({3, 2, 0, 1}));

  const GeneratorSet txp = standard_generators(2, 2, StructureKind::txp);
  REQUIRE(txp.size() == 4);
  CHECK(txp.labels == std::vector<std::string>{"x", "y", "alpha", "beta"});
  CHECK(txp.elements[2] == Transformation({1, 1, 2, 3}));
  CHECK(txp.elements[3] == Transformation({2, 3, 2, 3}));

  CHECK(standard_generators(2, 2, StructureKind::sigma).size() == 3);
  CHECK(standard_generators(2, 2, StructureKind::gamma).size() == 3);

  // Every generator lies in its structure.
  const UniformPartition p(2, 2);
  for (StructureKind kind : kKinds) {
    for (const Transformation& g :
         standard_generators(2, 2, kind).elements) {
      CHECK(membership(g, p, kind));
    }
  }
}

TEST_CASE("structures: the (3,2) permutation pair generates 72 elements") {
  const GeneratorSet gens = standard_generators(3, 2, StructureKind::sxp);
  REQUIRE(gens.size() == 2);
  const auto elements = testutil::naive_closure(6, gens.elements);
  CHECK(elements.size() == 72);
}

TEST_CASE("structures: trivial partitions are refused with the identity") {
  try {
    standard_generators(1, 4, StructureKind::txp);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported_case);
    CHECK(std::string(e.what()).find("T_X") != std::string::npos);
  }
  try {
    standard_generators(4, 1, StructureKind::sxp);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported_case);
    CHECK(std::string(e.what()).find("Sym X") != std::string::npos);
  }
  CHECK_THROWS_AS(standard_generators(1, 1, StructureKind::gamma), Error);
}

TEST_CASE("structures: symmetric and full generators") {
  const GeneratorSet sym3 = symmetric_group_generators(3);
  CHECK(testutil::naive_closure(3, sym3.elements).size() == 6);

  const GeneratorSet full3 = full_transformation_generators(3);
  REQUIRE(full3.size() == 3);
  CHECK(full3.elements[2] == Transformation({1, 1, 2}));
  CHECK(testutil::naive_closure(3, full3.elements).size() == 27);

  CHECK(symmetric_group_generators(1).size() == 0);
  CHECK(testutil::naive_closure(1, symmetric_group_generators(1).elements)
            .size() == 1);
  CHECK(symmetric_group_generators(2).size() == 1);
  CHECK(testutil::naive_closure(2, full_transformation_generators(2).elements)
            .size() == 4);
}

TEST_CASE("structures: filter and wreath sides coincide on small cases") {
  for (const auto& [n, m] : std::vector<std::pair<uint32_t, uint32_t>>{
           {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    const UniformPartition p(n, m);
    for (StructureKind kind : kKinds) {
      const auto wreath_elements = wreath_side(n, m, kind);
      std::set<std::vector<uint8_t>> filtered;
      testutil::for_all_maps(p.degree(), [&](const Transformation& f) {
        if (membership(f, p, kind)) {
          filtered.insert(
              std::vector<uint8_t>(f.images().begin(), f.images().end()));
        }
      });
      CHECK(wreath_elements == filtered);
    }
  }
}

TEST_CASE("structures: generator sets reach the formula order") {
  // All kinds and shapes with order up to 10^6.
  for (uint32_t n = 2; n <= 9; ++n) {
    for (uint32_t m = 2; m <= 9; ++m) {
      if (n * m > max_degree) {
        continue;
      }
      for (StructureKind kind : kKinds) {
        const mpz_class expected = order_formula(n, m, kind);
        if (mpz_cmp_ui(expected.get_mpz_t(), 1'000'000) > 0) {
          continue;
        }
        const uint64_t target = mpz_get_ui(expected.get_mpz_t());
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(to_string(kind));
        CHECK(is_generating(standard_generators(n, m, kind), target,
                            ClosureOptions{.limit = target, .threads = 2}));
      }
    }
  }
}

TEST_CASE("structures: generator set label bookkeeping") {
  GeneratorSet set;
  set.add(identity(3), "a");
  CHECK(set.degree == 3);
  CHECK_THROWS_AS(set.add(identity(3), "a"), Error);
  CHECK_THROWS_AS(set.add(identity(4), "b"), Error);
  CHECK(structure_from_string("SXP") == StructureKind::sxp);
  CHECK_FALSE(structure_from_string("nope").has_value());
}
