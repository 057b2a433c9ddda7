#pragma once

#include "verify/report.hpp"
#include "verma/evaluator.hpp"
#include "verma/irreducible.hpp"

namespace qsphere {

using MultiIndex = std::vector<int>;

// All m in Z_+^n with sum <= D, ordered by total degree then lexicographically.
std::vector<MultiIndex> multi_indices(int n, int D);
std::string mi_string(const MultiIndex& m);

AlgElt f_monomial(const MultiIndex& m, int n);      // f_eps_1^m_1 ... f_eps_n^m_n
AlgElt e_monomial_desc(const MultiIndex& k, int n); // e_eps_n^k_n ... e_eps_1^k_1
AlgElt etilde_monomial(const MultiIndex& k, int n); // e~_eps_1^k_1 ... e~_eps_n^k_n

// Right side of the factorization formula at the diagonal k = m, before specialization.
Scalar factorization_rhs(const MultiIndex& m);

// q-Serre elements of the f-side (or e-side) generators, with names.
std::vector<std::pair<std::string, AlgElt>> serre_elements(int n, bool e_side);

Report verify_factorization(const EvalContext& ctx, int D);
Report verify_harish(const EvalContext& ctx, int D);
Report verify_span_action(IrreducibleModule& L, int D);
Report verify_normalizer(IrreducibleModule& L, int D);
Report verify_serre_radical(const EvalContext& ctx, int bound);
Report verify_xyz(const EvalContext& ctx, int triples, unsigned seed);
Report verify_irreducibility(int n, const std::vector<Scalar>& points, int sigma, int D, int threads);

} // namespace qsphere
