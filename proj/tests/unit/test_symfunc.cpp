#include <gtest/gtest.h>

#include <random>

#include "wreathmac/symfunc.hpp"

using namespace wreathmac;

namespace {

MultiPartition K(const char* s, int r) { return MultiPartition::parse(s, r); }

TensorSymFunc random_func(std::mt19937& rng, int r, int degree, Basis b) {
  TensorSymFunc f(r, b);
  std::uniform_int_distribution<int> c(-3, 3);
  auto keys = multipartitions_of(degree, r);
  for (const auto& k : keys)
    if (rng() % 2) f.add_term(k, QTScalar(c(rng)) + QTScalar::q().pow(rng() % 3) * QTScalar(c(rng)));
  return f;
}

}  // namespace

TEST(SymFunc, DegreeOne) {
  auto s = TensorSymFunc::unit(2, Basis::Schur, K("1;", 2));
  EXPECT_EQ(convert_basis(s, Basis::Power), TensorSymFunc::unit(2, Basis::Power, K("1;", 2)));
  EXPECT_EQ(convert_basis(s, Basis::Monomial), TensorSymFunc::unit(2, Basis::Monomial, K("1;", 2)));
}

TEST(SymFunc, SchurTwoInPowerSums) {
  auto p = convert_basis(TensorSymFunc::unit(1, Basis::Schur, K("2", 1)), Basis::Power);
  EXPECT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(p.coeff(K("2", 1)), QTScalar(BigRat(1, 2)));
  EXPECT_EQ(p.coeff(K("1,1", 1)), QTScalar(BigRat(1, 2)));
}

TEST(SymFunc, CharactersAndKostka) {
  EXPECT_EQ(character(Partition{2, 1}, Partition{1, 1, 1}), 2);
  EXPECT_EQ(character(Partition{2, 1}, Partition{3}), -1);
  EXPECT_EQ(character(Partition{2, 2}, Partition{2, 2}), 2);
  EXPECT_EQ(kostka(Partition{3, 1}, Partition{2, 1, 1}), 2);
  EXPECT_EQ(kostka(Partition{2, 2}, Partition{1, 1, 1, 1}), 2);
  EXPECT_EQ(z_factor(Partition{2, 1, 1}), 4);
  // column orthogonality
  for (const auto& a : partitions_of(5))
    for (const auto& b : partitions_of(5)) {
      BigInt s = 0;
      for (const auto& l : partitions_of(5)) s += BigInt(static_cast<long>(character(l, a) * character(l, b)));
      EXPECT_EQ(s, a == b ? z_factor(a) : BigInt(0));
    }
}

TEST(SymFunc, RoundTripConversions) {
  std::mt19937 rng(5);
  for (int d = 0; d <= 4; ++d)
    for (int r = 1; r <= 3; ++r) {
      auto f = random_func(rng, r, d, Basis::Schur);
      for (Basis b : {Basis::Power, Basis::Monomial})
        EXPECT_EQ(convert_basis(convert_basis(f, b), Basis::Schur).terms(), f.terms());
    }
}

TEST(SymFunc, TwistBasics) {
  std::mt19937 rng(9);
  auto f = random_func(rng, 2, 3, Basis::Schur);
  EXPECT_EQ(plethystic_twist(f, QTScalar(0)), f);
  // r = 1: p_d -> (1 - a^d) p_d
  auto p = TensorSymFunc::unit(1, Basis::Power, K("2,1", 1));
  auto tw = plethystic_twist(p, QTScalar::q());
  EXPECT_EQ(tw.terms().size(), 1u);
  EXPECT_EQ(tw.coeff(K("2,1", 1)), (QTScalar(1) - QTScalar::q().pow(2)) * (QTScalar(1) - QTScalar::q()));
  auto inv = plethystic_twist_inverse(p, QTScalar::q());
  EXPECT_EQ(inv.coeff(K("2,1", 1)), QTScalar(1) / tw.coeff(K("2,1", 1)));
}

TEST(SymFunc, TwistInverseAndHomomorphism) {
  std::mt19937 rng(13);
  QTScalar a = QTScalar::t().inverse();
  for (int r = 1; r <= 3; ++r)
    for (int d = 1; d <= 3; ++d) {
      auto f = random_func(rng, r, d, Basis::Schur);
      EXPECT_EQ(plethystic_twist_inverse(plethystic_twist(f, a), a), f);
      EXPECT_EQ(plethystic_twist(plethystic_twist_inverse(f, QTScalar::q()), QTScalar::q()), f);
    }
  auto f = random_func(rng, 2, 2, Basis::Schur), g = random_func(rng, 2, 2, Basis::Schur);
  EXPECT_EQ(plethystic_twist(f * g, QTScalar::q()), plethystic_twist(f, QTScalar::q()) * plethystic_twist(g, QTScalar::q()));
}

TEST(SymFunc, TwistMatchesCirculantOnGenerators) {
  // p_1 at vertex 1 with r = 2: p_1[X1] - a p_1[X0]
  auto p = TensorSymFunc::unit(2, Basis::Power, K(";1", 2));
  auto tw = plethystic_twist(p, QTScalar::q());
  EXPECT_EQ(tw.coeff(K(";1", 2)), QTScalar(1));
  EXPECT_EQ(tw.coeff(K("1;", 2)), -QTScalar::q());
}

TEST(SymFunc, HallPairing) {
  auto keys = multipartitions_of(3, 2);
  for (const auto& a : keys)
    for (const auto& b : keys)
      EXPECT_EQ(hall_pairing(TensorSymFunc::unit(2, Basis::Schur, a), TensorSymFunc::unit(2, Basis::Schur, b)),
                QTScalar(a == b ? 1 : 0));
  for (const auto& a : keys) {
    BigInt z = z_factor(a[0]) * z_factor(a[1]);
    auto p = TensorSymFunc::unit(2, Basis::Power, a);
    EXPECT_EQ(hall_pairing(p, p), QTScalar(z));
  }
  std::mt19937 rng(1);
  auto f = random_func(rng, 2, 3, Basis::Monomial), g = random_func(rng, 2, 3, Basis::Power);
  EXPECT_EQ(hall_pairing(f, g), hall_pairing(g, f));
}

TEST(SymFunc, Project) {
  DimVector N{2, 3};
  XPoly e = project(TensorSymFunc::unit(2, Basis::Schur, K(";1", 2)), N);
  EXPECT_EQ(e, XPoly::parse("x_1_1 + x_1_2 + x_1_3", N));
  EXPECT_TRUE(project(TensorSymFunc::unit(2, Basis::Schur, K("1,1,1;", 2)), N).is_zero());
  XPoly e2 = project(TensorSymFunc::unit(2, Basis::Schur, K("1,1;", 2)), N);
  auto c = expand_in_basis(e2, 2);
  const auto& keys = monomial_basis_keys(N, 2);
  for (std::size_t k = 0; k < keys.size(); ++k) EXPECT_EQ(c[k], QTScalar(keys[k] == K("1,1;", 2) ? 1 : 0));
  std::mt19937 rng(2);
  auto f = random_func(rng, 2, 2, Basis::Schur), g = random_func(rng, 2, 1, Basis::Power);
  EXPECT_EQ(project(f * g, N), project(f, N) * project(g, N));
}
