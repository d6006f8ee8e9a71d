#include <gtest/gtest.h>

#include <set>

#include "wreathmac/errors.hpp"
#include "wreathmac/partition.hpp"

using namespace wreathmac;

namespace {

// rim hooks straight from the diagram: a connected skew shape with no 2x2 block
bool is_rim_hook(const Partition& lam, const Partition& nu) {
  std::set<std::pair<int, int>> cells;
  for (int a = 0; a < lam.length(); ++a)
    for (int b = nu[a]; b < lam[a]; ++b) cells.insert({a, b});
  if (cells.empty()) return false;
  for (auto [a, b] : cells)
    if (cells.count({a + 1, b}) && cells.count({a, b + 1}) && cells.count({a + 1, b + 1})) return false;
  std::set<std::pair<int, int>> seen{*cells.begin()};
  std::vector<std::pair<int, int>> stack{*cells.begin()};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    for (auto n : {std::pair{a + 1, b}, {a - 1, b}, {a, b + 1}, {a, b - 1}})
      if (cells.count(n) && seen.insert(n).second) stack.push_back(n);
  }
  return seen.size() == cells.size();
}

bool contained(const Partition& nu, const Partition& lam) {
  for (int k = 0; k < nu.length(); ++k)
    if (nu[k] > lam[k]) return false;
  return true;
}

Partition core_by_stripping(const Partition& lam, int r) {
  if (lam.size() < r) return lam;
  for (const auto& nu : partitions_of(lam.size() - r))
    if (contained(nu, lam) && is_rim_hook(lam, nu)) return core_by_stripping(nu, r);
  return lam;
}

}  // namespace

TEST(Partitions, ParsePrint) {
  EXPECT_EQ(Partition::parse("3,1,1").str(), "3,1,1");
  EXPECT_TRUE(Partition::parse("").empty());
  EXPECT_EQ(MultiPartition::parse("2;;1").r(), 3);
  EXPECT_EQ(MultiPartition::parse("2;;1").str(), "2;;1");
  EXPECT_THROW(Partition::parse("1,2"), ParseError);
  try {
    Partition::parse("3,a");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Partitions, CoreExamples) {
  for (int r = 1; r <= 4; ++r) EXPECT_TRUE(r_core(Partition{}, r).empty());
  EXPECT_TRUE(r_core(Partition{2}, 2).empty());
  EXPECT_EQ(r_core(Partition{2, 1}, 2), (Partition{2, 1}));
  EXPECT_EQ(r_quotient(Partition{}, 3), MultiPartition(3));
}

TEST(Partitions, CoreMatchesRimHookStripping) {
  for (int n = 0; n <= 9; ++n)
    for (const auto& lam : partitions_of(n))
      for (int r = 1; r <= 4; ++r) EXPECT_EQ(r_core(lam, r), core_by_stripping(lam, r)) << lam.str() << " r=" << r;
}

TEST(Partitions, BijectionAndSizeIdentity) {
  for (int n = 0; n <= 12; ++n)
    for (const auto& lam : partitions_of(n))
      for (int r = 1; r <= 4; ++r) {
        Partition core = r_core(lam, r);
        MultiPartition quot = r_quotient(lam, r);
        EXPECT_EQ(lam.size(), core.size() + r * quot.size());
        EXPECT_EQ(from_core_and_quotient(core, quot, r), lam);
        EXPECT_EQ(reversed_quotient(lam, r).reversed(), quot);
      }
}

TEST(Partitions, ReversedQuotient) {
  for (const auto& lam : partitions_of(6)) EXPECT_EQ(reversed_quotient(lam, 1), r_quotient(lam, 1));
  // r = 3 sample with distinct components
  Partition lam = from_core_and_quotient(Partition{}, MultiPartition::parse("2;1;"), 3);
  EXPECT_EQ(r_quotient(lam, 3).str(), "2;1;");
  EXPECT_EQ(reversed_quotient(lam, 3).str(), ";1;2");
}

TEST(Partitions, FromCoreRejectsNonCore) {
  EXPECT_THROW(from_core_and_quotient(Partition{2}, MultiPartition(2), 2), DomainError);
}

TEST(Partitions, FiberCountsMatchMultipartitions) {
  for (int r = 2; r <= 3; ++r)
    for (const Partition& core : {Partition{}, Partition{1}, Partition{2, 1}})
      for (int n = 0; n <= 3; ++n) {
        if (!is_r_core(core, r)) continue;
        EXPECT_EQ(fiber(core, r, n).size(), multipartitions_of(n, r).size());
      }
}

TEST(Partitions, KappaConstantOnFibersAndInjectiveOnCores) {
  for (int r = 1; r <= 4; ++r) {
    std::set<std::vector<long>> seen;
    for (int n = 0; n <= 12; ++n)
      for (const auto& lam : partitions_of(n)) {
        EXPECT_EQ(kappa_cl(lam, r), kappa_cl(r_core(lam, r), r));
        if (is_r_core(lam, r)) EXPECT_TRUE(seen.insert(kappa_cl(lam, r).coeffs).second) << lam.str();
      }
  }
  EXPECT_EQ(kappa_cl(Partition{}, 3).coeffs, (std::vector<long>{0, 0}));
}

TEST(Partitions, DominanceIsPartialOrder) {
  EXPECT_TRUE(dominance_leq(Partition{1, 1}, Partition{2}));
  EXPECT_FALSE(dominance_leq(Partition{2}, Partition{1, 1}));
  for (int n = 0; n <= 8; ++n) {
    auto ps = partitions_of(n);
    for (const auto& a : ps) {
      EXPECT_TRUE(dominance_leq(a, a));
      for (const auto& b : ps) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) EXPECT_EQ(a, b);
        for (const auto& c : ps)
          if (dominance_leq(a, b) && dominance_leq(b, c)) EXPECT_TRUE(dominance_leq(a, c));
      }
    }
  }
}

TEST(Partitions, WreathComparable) {
  EXPECT_TRUE(wreath_comparable(Partition{2, 1}, Partition{2, 1}, 2));
  EXPECT_FALSE(wreath_comparable(Partition{3}, Partition{2, 1}, 2));
  EXPECT_TRUE(wreath_comparable(Partition{2}, Partition{1, 1}, 2));
}

TEST(Partitions, Compatibility) {
  RootElem zero{{0}};
  EXPECT_TRUE(is_compatible(DimVector{3, 3}, zero, 2));
  EXPECT_EQ(minimal_compatible(zero, 2, 3), (DimVector{3, 3}));
  RootElem g = kappa_cl(Partition{1}, 2);
  for (int n = 0; n < 4; ++n) EXPECT_TRUE(is_compatible(DimVector{n, n + 2}, g, 2));
  EXPECT_FALSE(is_compatible(DimVector{2, 0}, g, 2));
  for (int r = 2; r <= 4; ++r)
    for (int n = 0; n <= 8; ++n)
      for (const auto& lam : partitions_of(n)) {
        if (!is_r_core(lam, r)) continue;
        RootElem gam = kappa_cl(lam, r);
        DimVector a = minimal_compatible(gam, r, 1), b = minimal_compatible(gam, r, 2);
        EXPECT_TRUE(is_compatible(a, gam, r));
        EXPECT_EQ(a.min(), 1);
        for (int i = 0; i < r; ++i) EXPECT_EQ(b[i], a[i] + 1);
        std::vector<int> shifted = a.entries();
        for (int& v : shifted) v += 5;
        EXPECT_TRUE(is_compatible(DimVector(shifted), gam, r));
      }
}
