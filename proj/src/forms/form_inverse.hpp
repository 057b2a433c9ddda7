#pragma once

#include "verify/report.hpp"
#include "verify/verma_suites.hpp"

namespace qsphere {

struct FTensor {
  struct Entry {
    MultiIndex m;
    Scalar coeff;
    AlgElt epart; // e~_eps_1^m_1 ... e~_eps_n^m_n
    AlgElt fpart; // f_eps_1^m_1 ... f_eps_n^m_n
  };
  int n = 2;
  int D = 0;
  std::vector<Entry> entries; // every m with sum <= D

  Json to_json() const;
};

// (-theta)^{|m|} prod q^{-m_i^2/2 + 2 m_i (i-1)} / prod [m_i]_q!
Scalar f_coefficient(const MultiIndex& m);
FTensor build_F(int n, int D);

// coeff(k) (f^k 1, e~^k 1*) = 1 for |k| <= D, plus vanishing between distinct
// indices of equal degree.
Report verify_F_inverse(const FTensor& F, const EvalContext& ctx);

} // namespace qsphere
