#pragma once

#include "algebra/word.hpp"

#include <map>
#include <random>

namespace qsphere {

// Exponents of x_{-4}..x_4; slot i + kMaxRank holds the exponent of x_i.
struct PlaneMono {
  std::array<std::uint8_t, 2 * kMaxRank + 1> a{};

  static PlaneMono var(int i);
  int exp(int i) const { return a[static_cast<std::size_t>(i + kMaxRank)]; }
  int degree() const;
  Weight weight() const;
  std::vector<int> word() const; // indices, ascending

  friend bool operator==(const PlaneMono&, const PlaneMono&) = default;
  friend auto operator<=>(const PlaneMono&, const PlaneMono&) = default;
};

inline Weight plane_weight(int i) { return i == 0 ? Weight{} : i > 0 ? eps(i) : -eps(-i); }

class PlanePoly {
public:
  PlanePoly() = default;
  PlanePoly(const Scalar& c); // NOLINT(google-explicit-constructor)
  static PlanePoly mono(const PlaneMono& m, const Scalar& c = Scalar(1));
  static PlanePoly x(int i) { return mono(PlaneMono::var(i)); }

  const std::map<PlaneMono, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const PlaneMono& m, const Scalar& c);
  int max_degree() const;

  PlanePoly& operator+=(const PlanePoly& o);
  PlanePoly& operator-=(const PlanePoly& o);
  PlanePoly& operator*=(const Scalar& c);
  friend PlanePoly operator+(PlanePoly a, const PlanePoly& b) { return a += b; }
  friend PlanePoly operator-(PlanePoly a, const PlanePoly& b) { return a -= b; }
  friend PlanePoly operator*(PlanePoly a, const Scalar& c) { return a *= c; }
  friend PlanePoly operator*(const Scalar& c, PlanePoly a) { return a *= c; }
  PlanePoly operator-() const { return *this * Scalar(-1); }
  friend bool operator==(const PlanePoly&, const PlanePoly&) = default;

  PlanePoly map_coefficients(const std::function<Scalar(const Scalar&)>& fn) const;
  // "coeff * x[-2]^3 x[0]^1 x[2]^2 + ..."; "0" when empty
  std::string to_string() const;

private:
  std::map<PlaneMono, Scalar> terms_;
};

// The quantum Euclidean plane of rank n (variables x_{-n}..x_n).
class QuantumPlane {
public:
  explicit QuantumPlane(int n);
  int rank() const { return n_; }

  // Rewrites a word in the generators to normal (ascending) order.
  PlanePoly normalize(const std::vector<int>& word) const;
  // Same, resolving a uniformly random inversion at each step.
  PlanePoly normalize_random(const std::vector<int>& word, std::mt19937& rng) const;
  PlanePoly multiply(const PlanePoly& p, const PlanePoly& r) const;
  PlanePoly power(const PlanePoly& p, int k) const;

  // Action of a single generator, extended with the coproduct.
  PlanePoly act(const Letter& l, const PlanePoly& p) const;
  PlanePoly act(const AlgElt& x, const PlanePoly& p) const;
  // Leibniz expansion on a word that is not normal ordered, then normalized.
  PlanePoly act_on_word(const Letter& l, const std::vector<int>& word) const;

  // Anti-algebra involution x_i -> x_{-i}.
  PlanePoly iota(const PlanePoly& p) const;
  PlanePoly casimir() const;

  // The defining relations as (lhs word, rhs combination of words).
  struct Relation {
    std::vector<int> lhs;
    std::vector<std::pair<std::vector<int>, Scalar>> rhs;
  };
  std::vector<Relation> relations() const;

  // Normal-ordered monomials of degree m.
  std::vector<PlaneMono> monomials(int m) const;

private:
  // (normal-ordered mono) * x_k
  const PlanePoly& mul_letter(const PlaneMono& m, int k) const;
  // x_a x_b with a > b rewritten into two-letter words
  std::vector<std::pair<std::pair<int, int>, Scalar>> swap_rule(int a, int b) const;
  void check_var(int i) const;

  int n_;
  mutable std::map<std::pair<PlaneMono, int>, PlanePoly> memo_;
};

} // namespace qsphere
