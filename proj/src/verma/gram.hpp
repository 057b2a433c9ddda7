#pragma once

#include "verma/free_verma.hpp"

namespace qsphere {

struct GramSlice {
  Weight weight;
  std::vector<Word> words; // lexicographic order
  std::vector<std::vector<Scalar>> entries; // entries[j][k] = <omega(w_j) w_k>
};

// All f-words of the given relative weight, lexicographically ordered; empty if
// the weight is not -(sum a_i alpha_i) with a_i >= 0, i <= n.
std::vector<Word> f_words_of_weight(const Weight& relative, int n);

// Rows are evaluated on `threads` workers.
GramSlice gram(const Weight& relative, const EvalContext& ctx, int threads = 1);

// Numeric mode only.
int rank_at(const Weight& relative, const EvalContext& ctx, int threads = 1);
// Rank of a matrix with entries in Q(i).
int exact_rank(const std::vector<std::vector<Scalar>>& m);

} // namespace qsphere
