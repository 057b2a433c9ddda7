#pragma once

#include "scalar/poly.hpp"

#include <optional>
#include <string>
#include <variant>

namespace qsphere {

// Element of Frac(Z[i][v^{+-1}, L_1^{+-1}, ..., L_4^{+-1}]) in canonical form:
// gcd(num, den) is a unit, den is a polynomial not divisible by any variable,
// and den's leading coefficient lies in the quadrant re > 0, im >= 0.
// Equality of Scalars is equality of canonical forms.
class Scalar {
public:
  Scalar() : den_(1) {}
  Scalar(long long c) : num_(c), den_(1) {}                       // NOLINT(google-explicit-constructor)
  Scalar(const GaussInt& c) : num_(c), den_(1) {}                 // NOLINT(google-explicit-constructor)
  Scalar(Poly num) : num_(std::move(num)), den_(1) {}             // NOLINT(google-explicit-constructor)
  Scalar(Poly num, Poly den);

  static Scalar v(int k = 1) { return Scalar(Poly::monomial(GaussInt(1), Monomial::v(k))); }
  // q^(k/2); q = v^2.
  static Scalar q_half(int k) { return v(k); }
  static Scalar q(int k = 1) { return v(2 * k); }
  static Scalar L(int i, int k = 1) { return Scalar(Poly::monomial(GaussInt(1), Monomial::L(i, k))); }
  static Scalar imag() { return Scalar(GaussInt::i()); }
  static Scalar rational(long long num, long long den);
  // theta = q^(1/2) - q^(-1/2)
  static Scalar theta() { return v(1) - v(-1); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  // No variables at all: a Gaussian rational.
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Denominator is 1, i.e. a Laurent polynomial.
  bool is_laurent() const { return den_.is_one(); }
  bool involves_L() const { return !num_.only_v() || !den_.only_v(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(int k) const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

  // Canonical text form: "(<num terms>) / (<den terms>)", terms in decreasing
  // lexicographic exponent order.
  std::string to_string() const;

private:
  void canonicalize();
  void normalize_unit();

  Poly num_;
  Poly den_;
};

// Half-integer stored as twice its value.
struct HalfInt {
  int twice = 0;
  static HalfInt integer(int k) { return {2 * k}; }
  static HalfInt half(int k) { return {k}; } // k/2
  HalfInt operator-() const { return {-twice}; }
};

// [z]_q = (q^z - q^-z)/(q - q^-1).
Scalar qnum(HalfInt z);
// (s q^z - s^-1 q^-z)/(q - q^-1), the value of [h + z]_q when q^h acts by s.
Scalar qnum(HalfInt z, const Scalar& shift);
// prod_{l=1}^m [l]_q
Scalar qfact(int m);

// ---------------------------------------------------------------------------
// Specialization modes.

struct GenericMode {};
// L_i -> sigma * i * v^-1, so that L_i^2 = -q^-1.
struct LambdaMode {
  int sigma = 1;
};
// LambdaMode followed by v -> v0.
struct NumericMode {
  Scalar v0;
  int sigma = 1;
};

class SpecMode {
public:
  SpecMode() = default;
  static SpecMode generic() { return SpecMode(GenericMode{}); }
  static SpecMode lambda(int sigma);
  static SpecMode numeric(const Scalar& v0, int sigma, int root_order_bound = 24);

  bool is_generic() const { return std::holds_alternative<GenericMode>(mode_); }
  bool is_lambda() const { return std::holds_alternative<LambdaMode>(mode_); }
  bool is_numeric() const { return std::holds_alternative<NumericMode>(mode_); }
  int sigma() const;
  const Scalar& v0() const; // numeric only
  std::string name() const;

private:
  template <class M>
  explicit SpecMode(M m) : mode_(std::move(m)) {}
  std::variant<GenericMode, LambdaMode, NumericMode> mode_;
};

// Ring homomorphism K -> K for the given mode. Throws DivisionByZero when the
// denominator vanishes under a numeric substitution.
Scalar specialize(const Scalar& s, const SpecMode& mode);
Poly specialize_lambda(const Poly& p, int sigma);
// Substitute v -> value (no L symbols may remain).
Scalar substitute_v(const Scalar& s, const Scalar& value);

} // namespace qsphere
