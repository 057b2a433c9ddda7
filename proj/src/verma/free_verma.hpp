#pragma once

#include "algebra/word.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace qsphere {

struct EvalContext {
  int n = 2;
  SpecMode mode = SpecMode::lambda(1);
};

// Packed f-word: letter p (from the left) in bits 3p..3p+2, values 1..4.
using PackedWord = std::uint64_t;
inline constexpr int kMaxPackedLength = 21;

int packed_length(PackedWord w);
inline int packed_letter(PackedWord w, int p) { return static_cast<int>((w >> (3 * p)) & 7u); }
PackedWord pack_f_word(const Word& w); // throws unless all letters are F
Word unpack(PackedWord w);

// The module over the free algebra spanned by f-words applied to 1_lambda, with
// e_i f_j - f_j e_i = delta_ij (K_i - K_i^-1) and K acting by its eigenvalue.
// The factor 1/(q - q^-1) of every e-step is left out, so all values are
// Laurent polynomials; callers divide by (v^2 - v^-2)^{#e} afterwards.
class FreeVerma {
public:
  using Vec = std::unordered_map<PackedWord, Poly>;

  // generic: weight symbols stay free; otherwise L_i = sigma i v^-1.
  FreeVerma(int n, bool generic, int sigma);

  static Vec vacuum() { return Vec{{0, Poly(1)}}; }

  Vec apply(const Letter& l, const Vec& in) const;
  Vec apply_word(const Word& w, Vec v) const; // rightmost letter first

  // Value of each word on `start`, read off at 1_lambda. Shares work between
  // words with a common suffix.
  std::vector<Poly> evaluate(const std::vector<const Word*>& words, const Vec& start) const;

  // (K_{alpha_i} - K_{alpha_i}^-1) on the weight lambda - beta with (alpha_i, beta) = s.
  Poly e_eigen(int i, int s) const;
  // K_mu on lambda - beta, (mu, beta) = s.
  Poly k_eigen(const Weight& mu, int s) const;

  int rank() const { return n_; }

private:
  void apply_e(int i, const Vec& in, Vec& out) const;

  int n_;
  bool generic_;
  int sigma_;
  std::array<Poly, kMaxRank + 1> la_;     // K_{alpha_i} at lambda
  std::array<Poly, kMaxRank + 1> la_inv_; // and its inverse
  static constexpr int kEigenRange = 64;
  std::array<std::vector<Poly>, kMaxRank + 1> eig_table_; // e_eigen(i, s), s in [-range, range]
};

// (v^2 - v^-2), the stripped denominator of each e-step.
const Poly& e_step_denominator();

} // namespace qsphere
