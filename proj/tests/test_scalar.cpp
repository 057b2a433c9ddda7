#include "doctest.h"

#include "errors.hpp"
#include "random_gen.hpp"
#include "scalar/scalar.hpp"

using namespace qsphere;

namespace {

Scalar q() { return Scalar::q(1); }

} // namespace

TEST_CASE("field arithmetic on simple values") {
  CHECK((Scalar::v(1) * Scalar::v(-1)).is_one());

  Scalar vm1 = Scalar::v(1) - Scalar(1);
  CHECK((Scalar(1) / vm1 * vm1).is_one());

  CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
  CHECK(Scalar::rational(-3, -6) == Scalar::rational(1, 2));
  CHECK(Scalar::rational(3, -6) == -Scalar::rational(1, 2));

  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
}

TEST_CASE("gaussian denominators are normalized to a fixed associate") {
  Scalar i = Scalar::imag();
  CHECK((i * i) == Scalar(-1));
  CHECK((Scalar(1) / i) == -i);
  Scalar a = Scalar(Poly(GaussInt(1, 1))) / Scalar(Poly(GaussInt(0, 2)));
  Scalar b = Scalar(Poly(GaussInt(-1, -1))) / Scalar(Poly(GaussInt(0, -2)));
  CHECK(a == b);
  CHECK(a.den().leading().coeff.re() > 0);
}

TEST_CASE("multivariate fractions reduce to lowest terms") {
  Scalar L1 = Scalar::L(1), L2 = Scalar::L(2), v = Scalar::v(1);
  Scalar common = L1 - v;
  Scalar x = (common * (L2 + Scalar(1))) / (common * (v + Scalar(2)));
  CHECK(x == (L2 + Scalar(1)) / (v + Scalar(2)));
  CHECK(x.num().size() == 2);
  CHECK(x.den().size() == 2);

  // (v^2 - L1^2) / (v - L1) = v + L1
  Scalar y = (v * v - L1 * L1) / (v - L1);
  CHECK(y == v + L1);
  CHECK(y.is_laurent());

  // Laurent monomials never stay in the denominator.
  Scalar z = Scalar(1) / (v * L2);
  CHECK(z.is_laurent());
}

TEST_CASE("q-numbers") {
  CHECK(qnum(HalfInt::integer(1)).is_one());
  CHECK(qnum(HalfInt::integer(2)) == Scalar::v(2) + Scalar::v(-2));
  CHECK(qnum(HalfInt::integer(0)).is_zero());
  CHECK(qnum(HalfInt::integer(3)) == Scalar::q(2) + Scalar(1) + Scalar::q(-2));

  for (int twice = -20; twice <= 20; ++twice) CHECK(qnum(HalfInt{-twice}) == -qnum(HalfInt{twice}));

  // [1/2]_q = 1/(q^(1/2) + q^(-1/2))
  CHECK(qnum(HalfInt::half(1)) == Scalar(1) / (Scalar::v(1) + Scalar::v(-1)));
}

TEST_CASE("q-numbers with a weight shift") {
  // [h]_q at q^h = L_1, on the special weight with branch +1: i / (v - v^-1)
  Scalar s = specialize(qnum(HalfInt::integer(0), Scalar::L(1)), SpecMode::lambda(1));
  CHECK(s == Scalar::imag() / (Scalar::v(1) - Scalar::v(-1)));
  CHECK(s == Scalar::imag() / Scalar::theta());
  Scalar t = specialize(qnum(HalfInt::integer(0), Scalar::L(1)), SpecMode::lambda(-1));
  CHECK(t == -s);
}

TEST_CASE("q-factorials") {
  CHECK(qfact(0).is_one());
  CHECK(qfact(1).is_one());
  CHECK(qfact(2) == Scalar::v(2) + Scalar::v(-2));
  CHECK(qfact(3) == (Scalar::v(2) + Scalar::v(-2)) * (Scalar::v(4) + Scalar(1) + Scalar::v(-4)));
  CHECK(qfact(3).is_laurent());
  CHECK_THROWS_AS(qfact(-1), UsageError);
}

TEST_CASE("specialization maps") {
  CHECK(specialize(Scalar::L(1), SpecMode::lambda(1)) == Scalar::imag() * Scalar::v(-1));
  CHECK(specialize(Scalar::L(3), SpecMode::lambda(-1)) == -Scalar::imag() * Scalar::v(-1));

  for (int sigma : {1, -1}) {
    Scalar L1 = Scalar::L(1);
    CHECK(specialize(L1 * L1 + q().inverse(), SpecMode::lambda(sigma)).is_zero());
    Scalar anything = Scalar::v(3) + Scalar::L(2);
    CHECK(specialize((L1 * L1 + Scalar::v(-2)) / anything, SpecMode::lambda(sigma)).is_zero());
  }

  auto at2 = SpecMode::numeric(Scalar(2), 1);
  CHECK(specialize(Scalar::theta(), at2) == Scalar::rational(3, 2));
  CHECK(specialize(qnum(HalfInt::integer(2)), at2) == Scalar::rational(17, 4));

  // The denominator v - 2 vanishes at v0 = 2.
  CHECK_THROWS_AS(specialize(Scalar(1) / (Scalar::v(1) - Scalar(2)), at2), DivisionByZero);
}

TEST_CASE("numeric points must avoid roots of unity") {
  CHECK_THROWS_AS(SpecMode::numeric(Scalar(1), 1), UsageError);
  CHECK_THROWS_AS(SpecMode::numeric(Scalar(-1), 1), UsageError);
  CHECK_THROWS_AS(SpecMode::numeric(Scalar::imag(), 1), UsageError);
  CHECK_THROWS_AS(SpecMode::numeric(Scalar(0), 1), UsageError);
  CHECK_THROWS_AS(SpecMode::numeric(Scalar::v(1), 1), UsageError);
  CHECK_NOTHROW(SpecMode::numeric(Scalar::rational(3, 5), -1));
}

TEST_CASE("canonical serialization") {
  CHECK(Scalar(0).to_string() == "0");
  CHECK((Scalar::v(2) + Scalar::v(-2)).to_string() == "(v^2 + v^-2)");
  Scalar x = Scalar::imag() / (Scalar::v(1) - Scalar::v(-1));
  CHECK(x.to_string() == "(i v^1) / (v^2 - 1)");
  CHECK((Scalar(3) * Scalar::L(1, -1) - Scalar::v(1)).to_string() == "(-v^1 + 3 L1^-1)");
}

TEST_CASE("property: field axioms and canonical form") {
  testing::Gen g(1234);
  for (int trial = 0; trial < 60; ++trial) {
    Scalar a = g.scalar(), b = g.scalar(), c = g.scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // canonicalizing a canonical pair is the identity
    CHECK(Scalar(a.num(), a.den()) == a);
    CHECK(Scalar(a.num(), a.den()).to_string() == a.to_string());
  }
}

TEST_CASE("property: specialization is a ring homomorphism") {
  testing::Gen g(99);
  std::vector<SpecMode> modes = {SpecMode::lambda(1), SpecMode::lambda(-1), SpecMode::numeric(Scalar(3), 1),
                                 SpecMode::numeric(Scalar::rational(2, 5), -1)};
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Scalar a = g.scalar(), b = g.scalar();
    for (const auto& mode : modes) {
      try {
        Scalar sa = specialize(a, mode), sb = specialize(b, mode);
        CHECK(specialize(a + b, mode) == sa + sb);
        CHECK(specialize(a * b, mode) == sa * sb);
        ++checked;
      } catch (const DivisionByZero&) {
        // a random denominator vanished at this point; pick the next sample
      }
    }
  }
  CHECK(checked > 100);
}
