#pragma once

// Small deterministic generators for property tests.

#include "scalar/scalar.hpp"

#include <random>

namespace qsphere::testing {

class Gen {
public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  GaussInt gauss(int bound = 3, bool allow_imag = true) {
    return GaussInt(uniform(-bound, bound), allow_imag ? uniform(-bound, bound) : 0);
  }

  // Laurent polynomial in v and up to `nsym` L symbols.
  Poly laurent(int nterms, int nsym = 2, int maxexp = 3) {
    std::vector<Term> ts;
    for (int t = 0; t < nterms; ++t) {
      Monomial m = Monomial::v(uniform(-maxexp, maxexp));
      for (int k = 1; k <= nsym; ++k) m.exp[k] = static_cast<std::int16_t>(uniform(-1, 2));
      ts.push_back({m, gauss()});
    }
    return Poly::from_terms(std::move(ts));
  }

  Scalar scalar(int nsym = 2) {
    Poly num = laurent(uniform(0, 3), nsym);
    Poly den;
    while (den.is_zero()) den = laurent(uniform(1, 2), nsym, 2);
    return Scalar(num, den);
  }

  Scalar nonzero_scalar(int nsym = 2) {
    Scalar s;
    while (s.is_zero()) s = scalar(nsym);
    return s;
  }

  std::mt19937& engine() { return rng_; }

private:
  std::mt19937 rng_;
};

} // namespace qsphere::testing
