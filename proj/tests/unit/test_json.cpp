#include <gtest/gtest.h>

#include "wreathmac/errors.hpp"
#include "wreathmac/json_io.hpp"
#include "wreathmac/wreath.hpp"

using namespace wreathmac;

TEST(Json, TensorRoundTrip) {
  for (const auto& lam : fiber(Partition{}, 2, 2)) {
    TensorSymFunc P = compute_P(lam, 2);
    EXPECT_EQ(tensor_from_json(to_json(P)), P);
    TensorSymFunc m = convert_basis(P, Basis::Monomial);
    EXPECT_EQ(tensor_from_json(to_json(m)), m);
  }
  EXPECT_EQ(to_json(TensorSymFunc::unit(2, Basis::Schur, MultiPartition::parse("1;", 2))),
            R"({"basis":"schur","r":2,"terms":[{"coeff":"1","key":"1;"}]})");
}

TEST(Json, XPolyRoundTrip) {
  DimVector N{2, 1};
  XPoly p = XPoly::parse("(q-t)/(1-q)*x_0_1^2*x_1_1 + 3*x_0_2 - 1", N);
  EXPECT_EQ(xpoly_from_json(to_json(p)), p);
  EXPECT_EQ(xpoly_from_json(to_json(XPoly(N))), XPoly(N));
}

TEST(Json, ReportRoundTrip) {
  VerifyOptions o;
  o.r = 2;
  o.max_boxes = 1;
  for (const auto& rep : verify_theorem(o)) {
    std::string line = to_json(rep);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    VerificationReport back = report_from_json(line);
    EXPECT_EQ(to_json(back), line);
  }
}

TEST(Json, Malformed) {
  EXPECT_THROW(tensor_from_json("{"), ParseError);
  EXPECT_THROW(tensor_from_json(R"({"r":2})"), ParseError);
  EXPECT_THROW(tensor_from_json(R"({"r":2,"basis":"schur","terms":[{"key":"1;","coeff":"q+"}]})"), ParseError);
  EXPECT_THROW(xpoly_from_json(R"({"N":[2],"terms":[{"exponents":[1],"coeff":"1"}]})"), ParseError);
}
