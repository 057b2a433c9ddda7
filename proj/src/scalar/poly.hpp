#pragma once

#include "scalar/gaussian.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qsphere {

inline constexpr int kMaxRank = 4;
// Variable 0 is v = q^(1/2); variables 1..kMaxRank are the weight symbols L_i.
inline constexpr int kNumVars = 1 + kMaxRank;

struct Monomial {
  std::array<std::int16_t, kNumVars> exp{};

  static Monomial v(int k) {
    Monomial m;
    m.exp[0] = static_cast<std::int16_t>(k);
    return m;
  }
  static Monomial L(int i, int k = 1) {
    Monomial m;
    m.exp[i] = static_cast<std::int16_t>(k);
    return m;
  }

  bool is_one() const {
    for (auto e : exp)
      if (e != 0) return false;
    return true;
  }

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  Monomial inverse() const;
  // Componentwise min / max.
  static Monomial meet(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct Term {
  Monomial mono;
  GaussInt coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Laurent polynomial in v, L_1..L_4 with Gaussian-integer coefficients.
// Terms are kept sorted by decreasing monomial (lex, v most significant) with
// no zero coefficients.
class Poly {
public:
  Poly() = default;
  Poly(long long c) : Poly(GaussInt(c)) {} // NOLINT(google-explicit-constructor)
  Poly(const GaussInt& c); // NOLINT(google-explicit-constructor)
  static Poly monomial(const GaussInt& c, const Monomial& m);
  static Poly from_terms(std::vector<Term> terms); // sorts and combines

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  GaussInt constant_value() const; // requires is_constant()
  const Term& leading() const { return terms_.front(); }

  bool involves(int var) const;
  bool only_v() const; // no L symbols
  int max_degree(int var) const;
  int min_degree(int var) const;
  Monomial min_exponents() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const GaussInt& c) const;
  Poly shifted(const Monomial& m) const; // multiply by a monomial
  // acc += c * m * src without intermediate allocation of the product.
  void add_scaled_shifted(const Poly& src, const GaussInt& c, const Monomial& m);

  GaussInt content() const; // gcd of coefficients, normalized
  Poly pow(unsigned k) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

// Polynomial algebra over Z[i] used for fraction reduction. Inputs to these
// functions must have non-negative exponents.
namespace polyalg {

// Exact quotient a / b; throws Error when b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);

} // namespace polyalg

} // namespace qsphere
