#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "brute.hpp"
#include "ltet/eisenstein.hpp"
#include "ltet/numtheory.hpp"

namespace ltet {
namespace {

using Pairs = std::vector<EisensteinPair>;

Pairs sorted(Pairs v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Zeta, Examples) {
  EXPECT_EQ(zeta(8, 3), 49);
  EXPECT_EQ(zeta(1, 0), 1);
  EXPECT_EQ(zeta(2, 1), 3);
  EXPECT_EQ(zeta(-5, 7), 25 + 35 + 49);
  EXPECT_THROW(zeta(Int{1} << 40, Int{1} << 40), Error);
}

TEST(Omega, Examples) {
  EXPECT_EQ(omega(1), sorted({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}));
  EXPECT_EQ(omega(2), sorted({{2, 0}, {2, 2}, {0, 2}, {-2, 0}, {-2, -2}, {0, -2}}));
  const auto seven = omega(7);
  EXPECT_EQ(seven.size(), 18u);
  for (EisensteinPair p : {EisensteinPair{8, 3}, {7, 0}, {7, 7}, {0, 7}, {-7, 0}, {-7, -7}, {0, -7}}) {
    EXPECT_TRUE(std::binary_search(seven.begin(), seven.end(), p));
  }
  EXPECT_THROW(omega(0), Error);
}

TEST(Omega, CardinalityAndCongruences) {
  for (Int k = 1; k <= 100; ++k) {
    const auto pairs = omega(k);
    EXPECT_EQ(static_cast<Int>(pairs.size()), count_representations(k * k)) << k;
    for (const auto& p : pairs) {
      const Int s = ((p.m + p.n) % 3 + 3) % 3;
      const Int km = k % 3;
      EXPECT_TRUE(km == s || km == (3 - s) % 3) << k << " " << p.m << "," << p.n;
      if (k % 3 == 0) {
        EXPECT_EQ(p.m % 3, 0);
        EXPECT_EQ(p.n % 3, 0);
      }
    }
  }
}

TEST(Omega, ClosedUnderOrbit) {
  for (Int k : {1, 3, 7, 13, 21, 49, 91}) {
    const auto pairs = omega(k);
    for (const auto& p : pairs) {
      for (const auto& q : tau_orbit(p)) {
        EXPECT_TRUE(std::binary_search(pairs.begin(), pairs.end(), q));
      }
    }
  }
}

TEST(TauOrbit, Examples) {
  EXPECT_EQ(tau_orbit({8, 3}), sorted({{8, 3}, {5, 8}, {-3, 5}, {-8, -3}, {-5, -8}, {3, -5},
                                       {3, 8}, {-5, 3}, {-8, -5}, {-3, -8}, {5, -3}, {8, 5}}));
  EXPECT_EQ(tau_orbit({1, 0}), sorted({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}));
  EXPECT_EQ(tau_orbit({0, 0}), (Pairs{{0, 0}}));
}

TEST(TauOrbit, PreservesZetaAndDividesTwelve) {
  for (Int m = -12; m <= 12; ++m)
    for (Int n = -12; n <= 12; ++n) {
      const auto orbit = tau_orbit({m, n});
      EXPECT_EQ(12 % orbit.size(), 0u);
      for (const auto& q : orbit) EXPECT_EQ(zeta(q), zeta(m, n));
    }
}

TEST(TauOrbit, PrintedSecondMapDoesNotPreserveZeta) {
  // (m,n) -> (m, n-m) as printed sends (8,3) to (8,-5).
  EXPECT_EQ(zeta(8, -5), 129);
  EXPECT_NE(zeta(8, -5), zeta(8, 3));
}

TEST(PrimitiveTriples, Examples) {
  const auto t = primitive_triples(7);
  auto find = [&](Int m, Int n, Int k) {
    return std::find(t.begin(), t.end(), EisensteinTriple{m, n, k}) != t.end();
  };
  EXPECT_TRUE(find(8, 5, 7));
  EXPECT_TRUE(find(3, 8, 7));
  EXPECT_TRUE(find(8, 3, 7));
  EXPECT_TRUE(find(1, 1, 1));
  for (const auto& x : t) {
    EXPECT_TRUE(x.primitive);
    EXPECT_EQ(zeta(x.m, x.n), x.k * x.k);
    ASSERT_TRUE(x.source.has_value());
  }
  const auto it = std::find(t.begin(), t.end(), EisensteinTriple{8, 5, 7});
  EXPECT_EQ(*it->source, (Generator{1, 1, 3}));
}

TEST(PrimitiveTriples, SortedAndUnique) {
  const auto t = primitive_triples(120);
  EXPECT_TRUE(std::is_sorted(t.begin(), t.end(), [](const auto& x, const auto& y) {
    return std::tie(x.k, x.m, x.n) < std::tie(y.k, y.m, y.n);
  }));
  EXPECT_EQ(std::adjacent_find(t.begin(), t.end()), t.end());
}

TEST(PrimitiveTriples, CompleteAgainstBruteForce) {
  std::set<std::tuple<Int, Int, Int>> got;
  for (const auto& x : primitive_triples(150)) got.insert({x.m, x.n, x.k});
  EXPECT_EQ(got, brute::primitive_triples(150));
}

}  // namespace
}  // namespace ltet
