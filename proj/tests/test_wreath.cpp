#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "parwreath/wreath.hpp"

using namespace parwreath;

namespace {

WreathElement all_identity(uint32_t n, uint32_t m) {
  return WreathElement::identity(n, m);
}

}  // namespace

TEST_CASE("wreath: action on coordinates") {
  // (id, id) with top collapsing both blocks onto block 1.
  const WreathElement w({identity(2), identity(2)}, Transformation({1, 1}));
  CHECK(w.act(0, 0) == std::pair{0u, 1u});

  const WreathElement e = all_identity(3, 2);
  for (uint32_t y = 0; y < 3; ++y) {
    for (uint32_t z = 0; z < 2; ++z) {
      CHECK(e.act(y, z) == std::pair{y, z});
    }
  }

  const WreathElement swap_first({cycle(2, {0, 1}), identity(2)},
                                 identity(2));
  CHECK(swap_first.act(1, 0) == std::pair{0u, 0u});
  CHECK_THROWS_AS(swap_first.act(2, 0), Error);
  CHECK_THROWS_AS(swap_first.act(0, 2), Error);
}

TEST_CASE("wreath: theta rearranges components") {
  const Transformation a({1, 1});
  const Transformation b({0, 0});
  const std::vector<Transformation> tuple = {a, b};

  const auto swapped = theta(Transformation({1, 0}), tuple);
  CHECK(swapped[0] == b);
  CHECK(swapped[1] == a);

  const auto same = theta(identity(2), tuple);
  CHECK(same[0] == a);
  CHECK(same[1] == b);

  // Non-invertible top duplicates a component.
  const auto doubled = theta(Transformation({0, 0}), tuple);
  CHECK(doubled[0] == a);
  CHECK(doubled[1] == a);

  CHECK_THROWS_AS(theta(identity(3), tuple), Error);
}

TEST_CASE("wreath: product law") {
  // y = ((0..n-1), id, ..., id)(0 1) squares to the cycle in the first
  // two slots with identity top.
  for (uint32_t n = 2; n <= 4; ++n) {
    for (uint32_t m = 2; m <= 4; ++m) {
      std::vector<uint32_t> points(n);
      for (uint32_t i = 0; i < n; ++i) {
        points[i] = i;
      }
      std::vector<Transformation> bottoms(m, identity(n));
      bottoms[0] = cycle(n, points);
      const WreathElement y(bottoms, cycle(m, {0, 1}));
      const WreathElement y2 = multiply(y, y);
      CHECK(y2.top() == identity(m));
      CHECK(y2.bottom(0) == cycle(n, points));
      CHECK(y2.bottom(1) == cycle(n, points));
      for (uint32_t z = 2; z < m; ++z) {
        CHECK(y2.bottom(z) == identity(n));
      }
    }
  }

  // x = (id, (0 1), id)(0 1 2) cubes to ((0 1), (0 1), (0 1)) id.
  for (uint32_t n = 2; n <= 3; ++n) {
    const WreathElement x({identity(n), cycle(n, {0, 1}), identity(n)},
                          cycle(3, {0, 1, 2}));
    const WreathElement x3 = multiply(multiply(x, x), x);
    CHECK(x3.top() == identity(3));
    for (uint32_t z = 0; z < 3; ++z) {
      CHECK(x3.bottom(z) == cycle(n, {0, 1}));
    }
  }

  const WreathElement e = all_identity(2, 2);
  const WreathElement w({Transformation({1, 1}), identity(2)},
                        Transformation({1, 0}));
  CHECK(multiply(w, e) == w);
  CHECK(multiply(e, w) == w);
  CHECK_THROWS_AS(multiply(w, all_identity(2, 3)), Error);
}

TEST_CASE("wreath: conjugation by an invertible top") {
  const Transformation a({1, 1});
  const WreathElement s({a, identity(2)}, identity(2));
  const WreathElement conjugated = conjugate_by_top(cycle(2, {0, 1}), s);
  CHECK(conjugated.bottom(0) == identity(2));
  CHECK(conjugated.bottom(1) == a);
  CHECK(conjugated.top() == identity(2));

  CHECK(conjugate_by_top(identity(2), s) == s);
  CHECK_THROWS_AS(conjugate_by_top(Transformation({0, 0}), s), Error);
  const WreathElement bad_top({a, identity(2)}, Transformation({1, 0}));
  CHECK_THROWS_AS(conjugate_by_top(identity(2), bad_top), Error);

  // r s r^{-1} agrees with the product form: r_bar s = (conjugated) r_bar,
  // exhaustively at n = m = 2.
  testutil::for_all_maps(2, [&](const Transformation& b0) {
    testutil::for_all_maps(2, [&](const Transformation& b1) {
      const WreathElement tuple({b0, b1}, identity(2));
      for (const auto& r : {identity(2), cycle(2, {0, 1})}) {
        const WreathElement r_bar = embed_top(2, r);
        CHECK(multiply(r_bar, tuple) ==
              multiply(conjugate_by_top(r, tuple), r_bar));
      }
    });
  });

  // Conjugating the slot-0 embedding moves it to the slot the top map
  // sends 0 to, checked for every permutation on three slots.
  const Transformation witness({2, 0, 1});
  std::vector<uint32_t> points3 = {0, 1, 2};
  std::vector<Transformation> tops = {
      identity(3),           cycle(3, {0, 1}),    cycle(3, {0, 2}),
      cycle(3, {1, 2}),      cycle(3, {0, 1, 2}), cycle(3, {0, 2, 1}),
  };
  for (const Transformation& r : tops) {
    const WreathElement embedded = embed_bottom(3, 3, 0, witness);
    const WreathElement moved = conjugate_by_top(inverse(r), embedded);
    const uint32_t target = r[0];
    for (uint32_t z = 0; z < 3; ++z) {
      CHECK(moved.bottom(z) == (z == target ? witness : identity(3)));
    }
  }
}

TEST_CASE("wreath: flatten examples") {
  const WreathElement alpha({Transformation({1, 1}), identity(2)},
                            identity(2));
  CHECK(flatten(alpha) == Transformation({1, 1, 2, 3}));

  const WreathElement beta({identity(2), identity(2)}, Transformation({1, 1}));
  CHECK(flatten(beta) == Transformation({2, 3, 2, 3}));

  CHECK(flatten(all_identity(3, 2)) == identity(6));
}

TEST_CASE("wreath: unflatten examples") {
  const UniformPartition p22(2, 2);
  const WreathElement w = unflatten(Transformation({2, 3, 2, 3}), p22);
  CHECK(w.bottom(0) == identity(2));
  CHECK(w.bottom(1) == identity(2));
  CHECK(w.top() == Transformation({1, 1}));

  CHECK(unflatten(identity(6), UniformPartition(3, 2)) == all_identity(3, 2));

  const WreathElement a = unflatten(Transformation({1, 1, 2, 3}), p22);
  CHECK(a.bottom(0) == Transformation({1, 1}));
  CHECK(a.bottom(1) == identity(2));
  CHECK(a.top() == identity(2));

  try {
    unflatten(Transformation({1, 0, 2, 0}), p22);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_partition_preserving);
  }
  CHECK_THROWS_AS(unflatten(identity(4), UniformPartition(2, 3)), Error);
}

TEST_CASE("wreath: flatten is a homomorphism") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10000; ++trial) {
    const uint32_t n = 1 + rng() % 4;
    const uint32_t m = 1 + rng() % 4;
    const WreathElement w1 = testutil::random_wreath(rng, n, m);
    const WreathElement w2 = testutil::random_wreath(rng, n, m);
    CHECK(flatten(multiply(w1, w2)) == compose(flatten(w1), flatten(w2)));
  }
}

TEST_CASE("wreath: flatten is injective at n = m = 2") {
  std::set<std::vector<uint8_t>> images;
  size_t total = 0;
  testutil::for_all_maps(2, [&](const Transformation& b0) {
    testutil::for_all_maps(2, [&](const Transformation& b1) {
      testutil::for_all_maps(2, [&](const Transformation& top) {
        const Transformation flat = flatten(WreathElement({b0, b1}, top));
        images.insert(
            std::vector<uint8_t>(flat.images().begin(), flat.images().end()));
        ++total;
      });
    });
  });
  CHECK(total == 64);
  CHECK(images.size() == 64);
}

TEST_CASE("wreath: round trips") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const uint32_t n = 1 + rng() % 4;
    const uint32_t m = 1 + rng() % 4;
    const WreathElement w = testutil::random_wreath(rng, n, m);
    const UniformPartition p(n, m);
    CHECK(unflatten(flatten(w), p) == w);
  }
  // flatten(unflatten(f)) = f for partition-preserving f; exhaustive at
  // degree 4.
  const UniformPartition p(2, 2);
  testutil::for_all_maps(4, [&](const Transformation& f) {
    bool preserving = true;
    for (uint32_t z = 0; z < 2 && preserving; ++z) {
      preserving = p.block_of(f[2 * z]) == p.block_of(f[2 * z + 1]);
    }
    if (preserving) {
      CHECK(flatten(unflatten(f, p)) == f);
    }
  });
}

TEST_CASE("wreath: act agrees with flatten") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 2000; ++trial) {
    const uint32_t n = 1 + rng() % 4;
    const uint32_t m = 1 + rng() % 4;
    const WreathElement w = testutil::random_wreath(rng, n, m);
    const Transformation flat = flatten(w);
    for (uint32_t y = 0; y < n; ++y) {
      for (uint32_t z = 0; z < m; ++z) {
        const auto [yy, zz] = w.act(y, z);
        CHECK(flat[y + n * z] == yy + n * zz);
      }
    }
  }
}

TEST_CASE("wreath: embeddings") {
  const WreathElement s1 = embed_bottom(2, 3, 1, Transformation({1, 1}));
  CHECK(s1.bottom(0) == identity(2));
  CHECK(s1.bottom(1) == Transformation({1, 1}));
  CHECK(s1.top() == identity(3));
  CHECK_THROWS_AS(embed_bottom(2, 3, 3, identity(2)), Error);
  CHECK_THROWS_AS(embed_bottom(2, 3, 0, identity(3)), Error);

  const WreathElement r = embed_top(2, Transformation({1, 1, 0}));
  CHECK(r.top() == Transformation({1, 1, 0}));
  CHECK(r.bottom(2) == identity(2));
}
