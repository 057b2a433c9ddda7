#include "doctest.h"

#include "forms/form_inverse.hpp"
#include "verma/evaluator.hpp"

using namespace qsphere;

TEST_CASE("F coefficients") {
  CHECK(f_coefficient({0, 0}).is_one());
  CHECK(f_coefficient({1, 0}) == -Scalar::theta() * Scalar::v(-1));
  CHECK(f_coefficient({0, 1}) == -Scalar::theta() * Scalar::v(3));
  // [2]! = q + q^-1
  Scalar expected = Scalar::theta() * Scalar::theta() * Scalar::v(-4) / (Scalar::v(2) + Scalar::v(-2));
  CHECK(f_coefficient({2, 0}) == expected);
}

TEST_CASE("build_F enumerates every multi-index up to D") {
  FTensor F = build_F(2, 3);
  CHECK(F.entries.size() == 10);
  CHECK(F.entries.front().m == MultiIndex{0, 0});
  CHECK(F.entries.front().coeff.is_one());
  CHECK(F.entries.front().epart == AlgElt(1));
  CHECK(F.entries.front().fpart == AlgElt(1));
  for (const auto& e : F.entries) {
    int s = 0;
    for (int x : e.m) s += x;
    CHECK(s <= 3);
  }
  auto j = F.to_json();
  REQUIRE(j.is_array());
  CHECK(j.size() == 10);
  CHECK(j[0].contains("m"));
  CHECK(j[0].contains("coeff"));
}

TEST_CASE("F at v = 1 reduces to the unit") {
  FTensor F = build_F(2, 3);
  for (const auto& e : F.entries) {
    if (e.m == MultiIndex{0, 0}) continue;
    // theta vanishes at v = 1; the q-factorials do not
    CHECK(substitute_v(e.coeff, Scalar(1)).is_zero());
  }
}

TEST_CASE("diagonal normalization on small k") {
  FTensor F = build_F(2, 2);
  for (int sigma : {1, -1}) {
    EvalContext ctx{2, SpecMode::lambda(sigma)};
    Report r = verify_F_inverse(F, ctx);
    CHECK(r.passed());
    CHECK(r.checks.size() >= 6);
  }
}
