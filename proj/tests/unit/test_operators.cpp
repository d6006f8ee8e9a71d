#include <gtest/gtest.h>

#include "wreathmac/apply.hpp"
#include "wreathmac/errors.hpp"
#include "wreathmac/operators.hpp"

using namespace wreathmac;

namespace {

QTScalar S(const char* s) { return QTScalar::parse(s); }

Selection worked_selection() {
  Selection s;
  s.J = {0, 1};
  s.k = {0, 0, -1};
  return s;
}

}  // namespace

TEST(Operators, SelectionCounts) {
  for (int n = 1; n <= 4; ++n) {
    auto sels = enumerate_selections(DimVector{n}, 0);
    ASSERT_EQ(sels.size(), static_cast<std::size_t>(n));
    for (const auto& s : sels) EXPECT_EQ(s.J, std::vector<int>{0});
  }
  EXPECT_EQ(enumerate_selections(DimVector{3, 3}, 1).size(), 12u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(enumerate_selections(DimVector{2, 2, 2}, i).size(), 18u);
  // sum over J containing i-1 of prod N_j
  DimVector N{1, 2, 3};
  EXPECT_EQ(enumerate_selections(N, 0).size(), 3u + 3 * 1 + 3 * 2 + 6u);
}

TEST(Operators, WorkedPropagation) {
  PropagatedX X = propagate_X(worked_selection(), 3);
  EXPECT_EQ(X[0], (XSource{0, 0, 0}));
  EXPECT_EQ(X[1], (XSource{1, 0, 0}));
  EXPECT_EQ(X[2], (XSource{0, 0, 1}));
  EXPECT_EQ(propagated_str(X), "X0 = x_0_1, X1 = x_1_1, X2 = q*x_0_1");
  for (const auto& s : full_selections(DimVector{2, 1, 2})) {
    PropagatedX Y = propagate_X(s, 3);
    for (int j = 0; j < 3; ++j) EXPECT_EQ(Y[j], (XSource{j, s.k[j], 0}));
  }
  Selection one;
  one.J = {0};
  one.k = {2};
  EXPECT_EQ(propagate_X(one, 1)[0], (XSource{0, 2, 0}));
}

TEST(Operators, WorkedShift) {
  DimVector N{2, 2, 2};
  auto subs = shift_substitutions(worked_selection(), N);
  EXPECT_EQ(substitutions_str(subs, N), "x_0_1 -> q*x_1_1, x_1_1 -> q^2*x_0_1");
  EXPECT_EQ(shifted_arguments_str(subs, N), "f(q*x_1_1, x_0_2 | q^2*x_0_1, x_1_2 | x_2_1, x_2_2)");
  XPoly f = XPoly::parse("x_0_1^2*x_1_1 + 3*x_2_2", N);
  EXPECT_EQ(shift_T(subs, f), XPoly::parse("q^4*x_1_1^2*x_0_1 + 3*x_2_2", N));
  EXPECT_EQ(shift_T(subs, XPoly::constant(N, S("q+t"))), XPoly::constant(N, S("q+t")));
}

TEST(Operators, ClassicShift) {
  DimVector N{3};
  Selection s;
  s.J = {0};
  s.k = {1};
  EXPECT_EQ(substitutions_str(shift_substitutions(s, N), N), "x_0_2 -> q*x_0_2");
}

TEST(Operators, WorkedCoefficientFactors) {
  ACoefficient A = coefficient_A(worked_selection(), 1, DimVector{2, 2, 2});
  std::vector<std::string> expected = {
      "X1/X0",
      "X2/(X2 - t*X0)",
      "X0/(X0 - t*X1)",
      "X1/(X1 - t*X2)",
      "X2/(X2 - q^-1*X1)",
      "(t*X2 - x_1_1)/(X2 - x_2_1)",
      "(t*X2 - x_1_2)/(X2 - x_2_2)",
      "(t*X0 - x_2_1)/X0",
      "(t*X0 - x_2_2)/(X0 - x_0_2)",
      "(t*X1 - x_0_1)/X1",
      "(t*X1 - x_0_2)/(X1 - x_1_2)",
  };
  ASSERT_EQ(A.factors.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(A.factors[k].str(), expected[k]);
  EXPECT_EQ(A.sign, 1);
}

TEST(Operators, RankOneCoefficient) {
  for (int n = 1; n <= 4; ++n) {
    DimVector N{n};
    for (const auto& s : enumerate_selections(N, 0)) {
      Factored a = factor(coefficient_A(s, 0, N).literal, n);
      XRational expect;
      expect.sign = -1;
      int k = s.k[0];
      for (int l = 0; l < n; ++l) {
        if (l == k) continue;
        expect.num.push_back({{1, 0, 1, k}, {-1, 0, 0, l}});
        expect.den.push_back({{1, 0, 0, k}, {-1, 0, 0, l}});
      }
      EXPECT_EQ(a, factor(expect, n)) << a.str(N);
    }
  }
  Factored one = factor(coefficient_A(enumerate_selections(DimVector{1}, 0)[0], 0, DimVector{1}).literal, 1);
  EXPECT_EQ(one.str(DimVector{1}), "-1");
}

TEST(Operators, FullSupportCoefficientMatches) {
  for (const DimVector& N : {DimVector{2, 2}, DimVector{1, 3}, DimVector{2, 1, 2}, DimVector{1, 1, 1}})
    for (int i = 0; i < N.r(); ++i)
      for (const auto& s : full_selections(N)) {
        Factored general = factor(coefficient_A(s, i, N).literal, N.total());
        Factored special = factor(coefficient_A_full_support(s, i, N).literal, N.total());
        EXPECT_EQ(general, special) << s.str();
      }
}

TEST(Operators, Eigenvalues) {
  EXPECT_EQ(eigenvalue(Partition{}, 0, DimVector{2, 2}, 2), S("1+t^2"));
  EXPECT_EQ(eigenvalue(Partition{}, 1, DimVector{2, 2}, 2), S("t+t^3"));
  EXPECT_EQ(eigenvalue(Partition{2}, 0, DimVector{1, 1}, 2), S("1"));
  EXPECT_EQ(eigenvalue(Partition{2}, 1, DimVector{1, 1}, 2), S("q^2*t"));
  Partition lam{3, 1};
  DimVector N{2, 3, 1};
  QTScalar classic;
  for (int k = 1; k <= 6; ++k) classic += QTScalar::monomial(1, lam[k - 1], 6 - k);
  EXPECT_EQ(eigen_character(lam, N).specialize_chi_one(), classic);
  EXPECT_THROW(eigenvalue(Partition{1, 1, 1}, 0, DimVector{1, 1}, 2), DomainError);
}

TEST(Apply, RankOneSmall) {
  DimVector N1{1};
  for (int d = 0; d <= 3; ++d) {
    XPoly p(N1);
    XMonomial m{d};
    p.add_term(m, 1);
    XPoly expect(N1);
    expect.add_term(m, QTScalar::monomial(1, d, 0));
    EXPECT_EQ(apply_M(0, N1, p), expect);
  }
  DimVector N2{2};
  XPoly e1 = XPoly::parse("x_0_1 + x_0_2", N2);
  EXPECT_EQ(apply_M(0, N2, e1), e1.scaled(S("q*t+1")));
  EXPECT_EQ(apply_classic_M(2, e1), e1.scaled(S("q*t+1")));
  for (int n = 1; n <= 4; ++n) {
    QTScalar bracket;
    for (int k = 0; k < n; ++k) bracket += QTScalar::monomial(1, 0, k);
    EXPECT_EQ(apply_classic_M(n, XPoly::constant(DimVector{n}, 1)), XPoly::constant(DimVector{n}, bracket));
  }
}

TEST(Apply, RejectsAsymmetricInput) {
  DimVector N{2, 1};
  try {
    apply_M(0, N, XPoly::parse("x_0_1", N));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("x_0_1"), std::string::npos) << e.what();
  }
}

TEST(Apply, ConstantIsEigenfunctionOnCores) {
  // the degree 0 fiber of a core consists of the core itself
  for (int r = 2; r <= 3; ++r)
    for (const Partition& core : {Partition{}, Partition{1}, Partition{2}, Partition{1, 1}}) {
      if (!is_r_core(core, r)) continue;
      DimVector N = minimal_compatible(kappa_cl(core, r), r, 1);
      if (N.total() > 8) continue;
      for (int i = 0; i < r; ++i) {
        XPoly one = XPoly::constant(N, 1);
        EXPECT_EQ(apply_M(i, N, one), one.scaled(eigenvalue(core, i, N, r))) << core.str() << " r=" << r << " i=" << i;
      }
    }
}

TEST(Apply, ShojiAtRankOneIsClassic) {
  for (int n = 1; n <= 3; ++n) {
    DimVector N{n};
    XPoly p = monomial_symmetric(N, MultiPartition::parse("2", 1)) + monomial_symmetric(N, MultiPartition::parse("1", 1));
    if (n > 1) p += monomial_symmetric(N, MultiPartition::parse("1,1", 1));
    EXPECT_EQ(apply_shoji_S(N, p), apply_classic_M(n, p));
  }
}
