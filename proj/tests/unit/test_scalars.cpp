#include <gtest/gtest.h>

#include <random>

#include "wreathmac/errors.hpp"
#include "wreathmac/qtscalar.hpp"

using namespace wreathmac;

namespace {

QTScalar S(const char* s) { return QTScalar::parse(s); }

QTScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2), n(1, 3);
  auto poly = [&] {
    Poly2 p;
    int k = n(rng);
    for (int j = 0; j < k; ++j) p += Poly2::monomial(BigInt(c(rng)), e(rng), e(rng));
    return p;
  };
  Poly2 den = poly();
  while (den.is_zero()) den = poly();
  return QTScalar(poly(), den);
}

}  // namespace

TEST(Scalars, BasicArithmetic) {
  EXPECT_TRUE(qt_add(QTScalar::q(), -QTScalar::q()).is_zero());
  EXPECT_TRUE(qt_mul(S("1/(1-t)"), S("1-t")).is_one());
  EXPECT_EQ(qt_div(S("1-q^2*t^2"), S("1-q*t")), S("1+q*t"));
  EXPECT_EQ(qt_div(S("1-q^2*t^2"), S("1-q*t")).str(), "q*t + 1");
}

TEST(Scalars, DivisionByZeroThrows) {
  EXPECT_THROW(qt_div(QTScalar(1), QTScalar(0)), DomainError);
  EXPECT_THROW(S("1/(q-q)"), ParseError);
}

TEST(Scalars, InvertQ) {
  EXPECT_EQ(qt_invert_q(QTScalar::q()), S("1/q"));
  EXPECT_EQ(qt_invert_q(S("1+q*t")), S("(q+t)/q"));
  EXPECT_EQ(qt_invert_q(S("1+q*t")).str(), "(q + t)/(q)");
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    QTScalar a = random_scalar(rng), b = random_scalar(rng);
    EXPECT_EQ(qt_invert_q(qt_invert_q(a)), a);
    EXPECT_EQ(qt_invert_q(a * b), qt_invert_q(a) * qt_invert_q(b));
    EXPECT_EQ(qt_invert_q(a + b), qt_invert_q(a) + qt_invert_q(b));
  }
}

TEST(Scalars, FieldAxiomsOnRandomSamples) {
  std::mt19937 rng(11);
  for (int k = 0; k < 60; ++k) {
    QTScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a / a).is_one());
  }
}

TEST(Scalars, CanonicalFormIsIdempotentAndRoundTrips) {
  std::mt19937 rng(3);
  for (int k = 0; k < 60; ++k) {
    QTScalar a = random_scalar(rng);
    QTScalar again(a.num(), a.den());
    EXPECT_EQ(again.num(), a.num());
    EXPECT_EQ(again.den(), a.den());
    EXPECT_EQ(QTScalar::parse(a.str()), a) << a.str();
  }
  // equal elements written differently are bitwise identical
  EXPECT_EQ(S("(2*q-2)/(4*q^2-4)").str(), S("1/(2*q+2)").str());
  EXPECT_EQ(S("(t-1)/(1-t)").str(), "-1");
}

TEST(Scalars, ParseErrorsCarryPosition) {
  try {
    S("q+*t");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(S("x"), ParseError);
  EXPECT_THROW(S("(q"), ParseError);
}

TEST(Scalars, GcdCases) {
  Poly2 a = (Poly2::q() - Poly2(1)) * (Poly2::t() + Poly2(2)) * (Poly2::q() * Poly2::t() - Poly2(3));
  Poly2 b = (Poly2::q() - Poly2(1)) * (Poly2::q() * Poly2::t() - Poly2(3)) * (Poly2::q() + Poly2::t());
  EXPECT_EQ(gcd(a, b), (Poly2::q() - Poly2(1)) * (Poly2::q() * Poly2::t() - Poly2(3)));
  EXPECT_EQ(gcd(Poly2(6) * Poly2::q(), Poly2(4) * Poly2::q() * Poly2::q()), Poly2(2) * Poly2::q());
  EXPECT_TRUE(gcd(Poly2(0), Poly2(0)).is_zero());
}

TEST(Scalars, CharReduce) {
  CharRingElem e = char_reduce(2, 1, -1, 2);
  EXPECT_EQ(e.component(1).str(), "q^2*t");
  EXPECT_TRUE(e.component(0).to_scalar().is_zero());
  EXPECT_EQ(char_reduce(0, 0, 4, 2).component(0).str(), "1");
  EXPECT_EQ(char_reduce(1, 3, 1, 3).component(1).str(), "q*t^3");
}
