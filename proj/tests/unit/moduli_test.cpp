#include <gtest/gtest.h>

#include <set>

#include "dq/moduli.hpp"
#include "oracles/matching_oracle.hpp"

namespace dq {
namespace {

TEST(Strata, ThreePointsHaveTwoBoundaryComponents) {
  auto s = enumerate_strata(3, 1);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(to_string(s[0]), "((1 2) 3)");
  EXPECT_EQ(to_string(s[1]), "(1 (2 3))");
}

TEST(Strata, SmallCases) {
  EXPECT_EQ(enumerate_strata(2, 0).size(), 1u);
  EXPECT_EQ(to_string(enumerate_strata(2, 0)[0]), "(1 2)");
  EXPECT_EQ(enumerate_strata(4, 2).size(), 5u);
  EXPECT_EQ(enumerate_strata(4, 0).size(), 1u);
}

TEST(Strata, CodimensionIsInternalVerticesMinusOne) {
  for (int n = 2; n <= 6; ++n)
    for (int c = 0; c <= n - 2; ++c)
      for (const auto& s : enumerate_strata(n, c)) {
        EXPECT_EQ(s.codimension(), c);
        EXPECT_EQ(s.leaves(), n);
      }
}

TEST(Strata, TopCodimensionCountsAreCatalan) {
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(static_cast<long>(enumerate_strata(n, n - 2).size()), catalan(n - 1));
}

TEST(Strata, CountsMatchPolygonDissections) {
  for (int n = 2; n <= 7; ++n)
    for (int c = 0; c <= n - 2; ++c)
      EXPECT_EQ(static_cast<long>(enumerate_strata(n, c).size()), oracle::kirkman_cayley(n + 1, c))
          << n << " " << c;
}

TEST(Strata, NoDuplicatesAndSorted) {
  for (int n = 2; n <= 6; ++n)
    for (int c = 0; c <= n - 2; ++c) {
      auto s = enumerate_strata(n, c);
      std::set<std::string> seen;
      for (const auto& t : s) EXPECT_TRUE(seen.insert(to_string(t)).second);
      EXPECT_TRUE(std::is_sorted(s.begin(), s.end(), [](const Stratum& a, const Stratum& b) {
        return to_string(a) < to_string(b);
      }));
    }
}

TEST(Strata, ClosedUnderEdgeContraction) {
  for (int n = 3; n <= 6; ++n)
    for (int c = 1; c <= n - 2; ++c) {
      std::set<std::string> lower;
      for (const auto& t : enumerate_strata(n, c - 1)) lower.insert(to_string(t));
      for (const auto& t : enumerate_strata(n, c)) {
        auto cs = contractions(t);
        EXPECT_EQ(static_cast<int>(cs.size()), c);
        for (const auto& u : cs) EXPECT_TRUE(lower.count(to_string(u))) << to_string(u);
      }
    }
}

TEST(Strata, EulerCharacteristicOfPolytope) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(euler_characteristic(n), 1);
}

TEST(Strata, ArgumentErrors) {
  EXPECT_THROW(enumerate_strata(1, 0), InputError);
  EXPECT_THROW(enumerate_strata(3, 2), InputError);
  EXPECT_THROW(enumerate_strata(3, -1), InputError);
  EXPECT_THROW(dim(1), InputError);
  EXPECT_THROW(facet_compositions(2), InputError);
}

TEST(Dim, OpenSimplex) {
  EXPECT_EQ(dim(2), 0);
  EXPECT_EQ(dim(3), 1);
  EXPECT_EQ(dim(5), 3);
}

TEST(Facets, ThreePointsAreTheTwoCompositionsOfM2) {
  auto f = facet_compositions(3);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(composition_label(f[0]), "m2∘₁m2");
  EXPECT_EQ(composition_label(f[1]), "m2∘₂m2");
  EXPECT_EQ(to_string(f[0].stratum), "((1 2) 3)");
  EXPECT_EQ(to_string(f[1].stratum), "(1 (2 3))");
}

TEST(Facets, FourPoints) {
  auto f = facet_compositions(4);
  EXPECT_EQ(f.size(), 5u);
  for (const auto& x : f) {
    bool allowed = (x.outer == 2 && x.inner == 3) || (x.outer == 3 && x.inner == 2);
    EXPECT_TRUE(allowed);
  }
}

TEST(Facets, CountFormulaAndCoverage) {
  for (int n = 3; n <= 7; ++n) {
    auto f = facet_compositions(n);
    int expected = 0;
    for (int k = 2; k <= n - 1; ++k) expected += n - k + 1;
    EXPECT_EQ(static_cast<int>(f.size()), expected);
    std::set<std::string> strata, facets;
    for (const auto& s : enumerate_strata(n, 1)) strata.insert(to_string(s));
    for (const auto& x : f) {
      EXPECT_EQ(x.outer + x.inner, n + 1);
      facets.insert(to_string(x.stratum));
    }
    EXPECT_EQ(strata, facets);
  }
}

}  // namespace
}  // namespace dq
