#include "doctest.h"

#include "algebra/word.hpp"
#include "errors.hpp"
#include "random_gen.hpp"

using namespace qsphere;
using qsphere::testing::Gen;

namespace {

AlgElt random_elt(Gen& g, int rank, int max_terms = 3, int max_len = 3) {
  AlgElt x;
  int nt = g.uniform(1, max_terms);
  for (int t = 0; t < nt; ++t) {
    Word w;
    int len = g.uniform(0, max_len);
    for (int p = 0; p < len; ++p) {
      int kind = g.uniform(0, 2);
      int i = g.uniform(1, rank);
      if (kind == 0) w.push_back(Letter::e(i));
      else if (kind == 1) w.push_back(Letter::f(i));
      else w.push_back(Letter::k(simple_root(i).scaled(g.coin() ? 1 : -1)));
    }
    x.add_term(std::move(w), Scalar(Poly(g.gauss(2))) * Scalar::v(g.uniform(-2, 2)));
  }
  return x;
}

// Canonical representative modulo x_i y_j = y_j x_i for |i - j| > 1, x, y in {e, f}.
AlgElt commute_far(const AlgElt& x) {
  AlgElt r;
  for (const auto& [w0, c] : x.terms()) {
    Word w = w0;
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        const Letter a = w[p], b = w[p + 1];
        if (a.is_k() || b.is_k() || std::abs(a.index - b.index) < 2) continue;
        if (b < a) {
          std::swap(w[p], w[p + 1]);
          moved = true;
        }
      }
    }
    r.add_term(w, c);
  }
  return r;
}

} // namespace

TEST_CASE("weights of words add up") {
  Word w{Letter::e(1), Letter::f(2), Letter::f(2), Letter::k(eps(1))};
  CHECK(weight_of(w) == simple_root(1) - simple_root(2).scaled(2));
  CHECK(weight_of(Word{}).is_zero());
  CHECK(simple_root(1) + simple_root(2) == eps(2));
}

TEST_CASE("adjacent K letters merge and K_0 disappears") {
  AlgElt x = K(eps(1)) * K(-eps(1));
  CHECK(x == AlgElt(1));
  AlgElt y = K(eps(1)) * K(eps(2));
  CHECK(y == K(eps(1) + eps(2)));
}

TEST_CASE("q-bracket is bilinear") {
  Gen g(11);
  for (int t = 0; t < 20; ++t) {
    AlgElt a = random_elt(g, 3), b = random_elt(g, 3), c = random_elt(g, 3);
    Scalar s = Scalar::q(g.uniform(-2, 2));
    CHECK(qbracket(a + b, c, s) == qbracket(a, c, s) + qbracket(b, c, s));
    CHECK(qbracket(a, b + c, s) == qbracket(a, b, s) + qbracket(a, c, s));
  }
}

TEST_CASE("root vectors for small index") {
  const Scalar q = Scalar::q(1);
  CHECK(root_vector(RootKind::FEps, 1, 2) == f(1));
  CHECK(root_vector(RootKind::ETildeEps, 2, 2) == e(2) * e(1) - Scalar::q(-1) * (e(1) * e(2)));
  CHECK(root_vector(RootKind::EEps, 2, 2) == e(2) * e(1) - q * (e(1) * e(2)));
  CHECK(root_vector(RootKind::FDelta, 0, 2) == qbracket(f(1), qbracket(f(1), f(2), q), Scalar::q(-1)));
  CHECK_THROWS_AS(root_vector(RootKind::FEps, 3, 2), UsageError);
}

TEST_CASE("omega sends f_eps to e-tilde_eps") {
  for (int i = 1; i <= 4; ++i)
    CHECK(omega(root_vector(RootKind::FEps, i, 4)) == root_vector(RootKind::ETildeEps, i, 4));
}

TEST_CASE("omega and the antipode pair are involutive") {
  Gen g(5);
  for (int t = 0; t < 30; ++t) {
    AlgElt x = random_elt(g, 3);
    CHECK(omega(omega(x)) == x);
    CHECK(antipode(antipode(x, AntipodeDir::GammaInverse), AntipodeDir::Gamma) == x);
    CHECK(antipode(antipode(x, AntipodeDir::Gamma), AntipodeDir::GammaInverse) == x);
    CHECK(chev_twist(chev_twist(x)) == x);
  }
}

TEST_CASE("antipode of e_eps") {
  // gamma(e_eps_i) = -e-tilde_eps_i q^{-h_eps_i + 2(i-1)}
  for (int i = 1; i <= 4; ++i) {
    AlgElt lhs = k_right(antipode(root_vector(RootKind::EEps, i, 4), AntipodeDir::Gamma));
    AlgElt rhs = -(Scalar::q(2 * (i - 1)) * (root_vector(RootKind::ETildeEps, i, 4) * K(-eps(i))));
    if (i <= 2) CHECK(lhs == k_right(rhs));
    CHECK(commute_far(lhs) == commute_far(k_right(rhs)));
  }
}

TEST_CASE("gamma inverse on a generator") {
  // gamma^-1(e) = -K^-1 e
  CHECK(antipode(e(1), AntipodeDir::GammaInverse) == -(K(-simple_root(1)) * e(1)));
  CHECK(antipode(K(eps(2)), AntipodeDir::Gamma) == K(-eps(2)));
}

TEST_CASE("k_right moves K letters using only the K relation") {
  AlgElt x = K(simple_root(1)) * f(1);
  CHECK(k_right(x) == Scalar::q(-1) * (f(1) * K(simple_root(1))));
  AlgElt y = e(2) * K(eps(1));
  CHECK(k_right(y) == y);
}
