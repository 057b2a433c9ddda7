#include "doctest.h"

#include "errors.hpp"
#include "plane/plane_suites.hpp"
#include "random_gen.hpp"

using namespace qsphere;
using qsphere::testing::Gen;

namespace {

Scalar q() { return Scalar::v(2); }
PlanePoly x(int i) { return PlanePoly::x(i); }

} // namespace

TEST_CASE("normal ordering rules") {
  QuantumPlane P(2);
  CHECK(P.normalize({0, 1}) == P.multiply(x(0), x(1)));
  CHECK(P.normalize({0, 1}) == PlanePoly::mono([] {
          PlaneMono m;
          m.a[4] = 1;
          m.a[5] = 1;
          return m;
        }()));
  PlanePoly x0sq = P.multiply(x(0), x(0));
  CHECK(P.multiply(x(1), x(-1)) == P.normalize({-1, 1}) + (q() - Scalar(1)) * x0sq);
  CHECK(P.normalize({1, 0}) == q().inverse() * P.normalize({0, 1}));
  CHECK(P.multiply(x0sq, x(0)) == P.power(x(0), 3));
  CHECK(P.multiply(PlanePoly(Scalar(1)), x(2)) == x(2));
  // j = 2 rule followed by the j = 1 rule
  PlanePoly lhs = P.normalize({2, -2});
  PlanePoly rhs = P.normalize({-2, 2}) + q() * P.normalize({1, -1}) - q().inverse() * P.normalize({-1, 1});
  CHECK(lhs == rhs);
}

TEST_CASE("rewriting is confluent on random words") {
  QuantumPlane P(3);
  Gen g(7);
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::vector<int> w;
    int len = g.uniform(2, 5);
    for (int p = 0; p < len; ++p) w.push_back(g.uniform(-3, 3));
    CHECK(P.normalize(w) == P.normalize_random(w, rng));
  }
}

TEST_CASE("generator action on the variables") {
  QuantumPlane P(2);
  CHECK(P.act(Letter::e(1), x(0)) == x(1));
  CHECK(P.act(Letter::f(1), x(1)) == x(0));
  CHECK(P.act(Letter::f(1), x(0)) == -x(-1));
  CHECK(P.act(Letter::e(2), x(1)) == x(2));
  CHECK(P.act(Letter::e(2), x(-2)) == -x(-1));
  CHECK(P.act(Letter::e(1), x(1)).is_zero());
  CHECK(P.act(Letter::k(eps(1)), x(1)) == q() * x(1));
}

TEST_CASE("Casimir is invariant") {
  for (int n : {1, 2, 3}) {
    QuantumPlane P(n);
    PlanePoly C = P.casimir();
    for (int i = 1; i <= n; ++i) {
      CHECK(P.act(Letter::e(i), C).is_zero());
      CHECK(P.act(Letter::f(i), C).is_zero());
      CHECK(P.act(Letter::k(simple_root(i)), C) == C);
    }
  }
}

TEST_CASE("iota is an anti-automorphism") {
  QuantumPlane P(2);
  CHECK(P.iota(x(1)) == x(-1));
  PlanePoly a = P.multiply(x(2), x(0)), b = x(-1);
  CHECK(P.iota(P.multiply(a, b)) == P.multiply(P.iota(b), P.iota(a)));
  // iota(e1 |> x0) = chev_twist(e1) |> iota(x0)
  CHECK(P.iota(P.act(Letter::e(1), x(0))) == P.act(chev_twist(e(1)), P.iota(x(0))));
}

TEST_CASE("x0 powers are killed by the delta vectors") {
  QuantumPlane P(2);
  AlgElt fd = root_vector(RootKind::FDelta, 0, 2), ed = root_vector(RootKind::EDelta, 0, 2);
  for (int k = 0; k <= 4; ++k) {
    CHECK(P.act(fd, P.power(x(0), k)).is_zero());
    CHECK(P.act(ed, P.power(x(0), k)).is_zero());
  }
  // f1 |> x0^2 = -(1 + q^-1) x_-1 x0
  CHECK(P.act(Letter::f(1), P.power(x(0), 2)) == -(Scalar(1) + q().inverse()) * P.multiply(x(-1), x(0)));
}

TEST_CASE("invariant dimensions") {
  QuantumPlane P(2);
  auto s0 = invariant_subspace(P, 0, Scalar(2));
  CHECK(s0.dim == 1);
  auto s1 = invariant_subspace(P, 1, Scalar(2));
  CHECK(s1.dim == 1);
  REQUIRE(s1.basis.size() == 1);
  CHECK(s1.basis[0].terms().size() == 1);
  CHECK(s1.basis[0].terms().begin()->first == PlaneMono::var(0));
  for (int m = 2; m <= 4; ++m) {
    auto s = invariant_subspace(P, m, Scalar(3));
    CHECK(s.dim == m / 2 + 1);
    CHECK(s.candidates_invariant);
    CHECK(s.candidates_rank == m / 2 + 1);
  }
  CHECK_THROWS_AS(kappa_operators(1), UsageError);
}

TEST_CASE("star product basics") {
  QuantumPlane P(2);
  FTensor F = build_F(2, 4);
  PlanePoly C = P.casimir();
  CHECK(star(P, PlanePoly(Scalar(1)), C, F) == C);
  CHECK(star(P, C, PlanePoly(Scalar(1)), F) == C);
  PlanePoly x0 = x(0);
  CHECK(star(P, star(P, x0, x0, F), x0, F) == star(P, x0, star(P, x0, x0, F), F));
  CHECK(star(P, star(P, x0, C, F), x0, F) == star(P, x0, star(P, C, x0, F), F));
  // classical limit
  auto at_one = [](const PlanePoly& p) { return p.map_coefficients([](const Scalar& c) { return substitute_v(c, Scalar(1)); }); };
  CHECK(at_one(star(P, x0, x0, F)) == at_one(P.multiply(x0, x0)));
  FTensor small = build_F(2, 1);
  CHECK_THROWS_AS(star(P, x0 * Scalar(1), P.power(x0, 2), small), PreconditionError);
}
