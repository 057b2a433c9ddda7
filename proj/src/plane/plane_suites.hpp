#pragma once

#include "forms/form_inverse.hpp"
#include "plane/plane.hpp"
#include "verify/report.hpp"

namespace qsphere {

// e_a_i, f_a_i (i >= 2), e_delta, f_delta: the operators whose joint kernel on
// weight-zero polynomials is (P^m)^kappa.
std::vector<std::pair<std::string, AlgElt>> kappa_operators(int n);

struct InvariantSpace {
  int degree = 0;
  int dim = 0;
  std::vector<PlanePoly> basis;      // numeric coefficients at v0
  std::vector<PlanePoly> candidates; // C_q^l x_0^{m-2l}, exact
  bool candidates_invariant = false; // each candidate killed by the operators
  int candidates_rank = 0;           // at v0
};

InvariantSpace invariant_subspace(const QuantumPlane& P, int m, const Scalar& v0);
// C_q^l x_0^{m-2l}, l = 0..m/2
std::vector<PlanePoly> invariant_candidates(const QuantumPlane& P, int m);
// True iff p has weight zero and every kappa operator kills it (exact).
bool is_kappa_invariant(const QuantumPlane& P, const PlanePoly& p);

// sum_m coeff(m) (e-part |> p)(f-part |> r); needs F.D >= 2 min(deg p, deg r).
PlanePoly star(const QuantumPlane& P, const PlanePoly& p, const PlanePoly& r, const FTensor& F);

Report verify_module_algebra(int n, int degree, int cases, unsigned seed);
Report verify_delta_inv(int n, int kmax);
Report verify_invariant_dims(int n, int mmax, const std::vector<Scalar>& points);
Report verify_star(int n, int mbound);

} // namespace qsphere
