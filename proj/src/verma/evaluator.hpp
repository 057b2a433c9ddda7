#pragma once

#include "verma/free_verma.hpp"

#include <random>

namespace qsphere {

// <x>: Cartan projection of x evaluated at lambda, in ctx.mode.
Scalar vacuum_eval(const AlgElt& x, const EvalContext& ctx);
// <y x>, sharing the computation of x 1_lambda across the words of y.
Scalar pair_eval(const AlgElt& y, const AlgElt& x, const EvalContext& ctx);
// (x 1_lambda, y 1*_lambda) = <gamma^-1(y) x>
Scalar invariant_form(const AlgElt& x, const AlgElt& y, const EvalContext& ctx);
// <omega(x) y>
Scalar shapovalov(const AlgElt& x, const AlgElt& y, const EvalContext& ctx);

// x 1_lambda in the free module, up to a nonzero overall factor.
FreeVerma::Vec image_of_vacuum(const AlgElt& x, const FreeVerma& engine);

// True iff x 1_lambda pairs to zero with every f-word, i.e. lies in the radical
// of the contravariant form. Checked by descending along all e-words.
bool in_radical(const AlgElt& x, const EvalContext& ctx);

enum class RewriteStrategy { Leftmost, Random };
// Independent evaluation of <w> by rewriting w into F* K E* order with the
// defining relations, then projecting.
Scalar normal_order_eval(const Word& w, const EvalContext& ctx, RewriteStrategy strategy, std::mt19937* rng = nullptr);

} // namespace qsphere
