#pragma once

#include "algebra/roots.hpp"
#include "scalar/scalar.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qsphere {

// Generator of the free algebra: e_i, f_i, or K_mu = q^{h_mu}.
struct Letter {
  enum class Kind : std::uint8_t { E, F, K };
  Kind kind = Kind::K;
  std::uint8_t index = 0; // 1-based, E and F only
  std::array<std::int8_t, kMaxRank> mu{};

  static Letter e(int i) { return {Kind::E, static_cast<std::uint8_t>(i), {}}; }
  static Letter f(int i) { return {Kind::F, static_cast<std::uint8_t>(i), {}}; }
  static Letter k(const Weight& mu);

  bool is_e() const { return kind == Kind::E; }
  bool is_f() const { return kind == Kind::F; }
  bool is_k() const { return kind == Kind::K; }
  Weight k_weight() const;
  Weight weight() const; // alpha_i for e_i, -alpha_i for f_i, 0 for K

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Weight weight_of(const Word& w);
std::string word_to_string(const Word& w, int rank);

// Finite Scalar-linear combination of words. Adjacent K letters are merged and
// K_0 is dropped; no other relation is applied.
class AlgElt {
public:
  AlgElt() = default;
  AlgElt(const Scalar& c); // NOLINT(google-explicit-constructor)
  AlgElt(long long c) : AlgElt(Scalar(c)) {} // NOLINT(google-explicit-constructor)
  static AlgElt letter(const Letter& l);
  static AlgElt word(const Word& w, const Scalar& c = Scalar(1));

  const std::map<Word, Scalar>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  void add_term(Word w, const Scalar& c);

  AlgElt operator-() const;
  AlgElt& operator+=(const AlgElt& o);
  AlgElt& operator-=(const AlgElt& o);
  AlgElt& operator*=(const Scalar& c);
  friend AlgElt operator+(AlgElt a, const AlgElt& b) { return a += b; }
  friend AlgElt operator-(AlgElt a, const AlgElt& b) { return a -= b; }
  friend AlgElt operator*(const AlgElt& a, const AlgElt& b);
  friend AlgElt operator*(AlgElt a, const Scalar& c) { return a *= c; }
  friend AlgElt operator*(const Scalar& c, AlgElt a) { return a *= c; }

  AlgElt pow(int k) const;
  AlgElt map_coefficients(const SpecMode& mode) const; // specialize every coefficient

  // All words share one weight.
  bool is_homogeneous() const;
  int max_length() const;

  friend bool operator==(const AlgElt&, const AlgElt&) = default;

  // "coeff * word + coeff * word ..." with the empty word printed as "1".
  std::string to_string(int rank) const;

private:
  std::map<Word, Scalar> terms_;
};

inline AlgElt e(int i) { return AlgElt::letter(Letter::e(i)); }
inline AlgElt f(int i) { return AlgElt::letter(Letter::f(i)); }
inline AlgElt K(const Weight& mu) { return AlgElt::letter(Letter::k(mu)); }

// [a, b]_c = ab - c ba
AlgElt qbracket(const AlgElt& a, const AlgElt& b, const Scalar& c);
inline AlgElt commutator(const AlgElt& a, const AlgElt& b) { return qbracket(a, b, Scalar(1)); }

enum class RootKind { FEps, EEps, ETildeEps, EDelta, FDelta };
// Composite root vectors, expanded into words. Index i is ignored for delta.
AlgElt root_vector(RootKind kind, int i, int rank);

// Chevalley anti-involution: reverse words, e_i <-> f_i, K fixed.
AlgElt omega(const AlgElt& x);

enum class AntipodeDir { Gamma, GammaInverse };
// gamma(e) = -e K^-1, gamma(f) = -K f, gamma(K_mu) = K_-mu; anti-multiplicative.
AlgElt antipode(const AlgElt& x, AntipodeDir dir);

// Move every K to the right end using K_mu X = q^{(mu, wt X)} X K_mu, merging
// the K's. Only the K-commutation relation is used.
AlgElt k_right(const AlgElt& x);

// Involution e_i -> -f_i, f_i -> -e_i, K_mu -> K_-mu (multiplicative).
AlgElt chev_twist(const AlgElt& x);

} // namespace qsphere
