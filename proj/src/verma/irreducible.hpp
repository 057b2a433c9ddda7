#pragma once

#include "verma/free_verma.hpp"

#include <map>
#include <set>

namespace qsphere {

// Coordinates a of beta = sum a_i alpha_i; the vector weight is lambda - beta.
using RootCoord = std::array<int, kMaxRank>;

RootCoord to_root_coord(const Weight& relative); // relative = -beta in the eps basis
Weight from_root_coord(const RootCoord& a);      // returns -beta
// Number of monomials f_eps_1^m_1 ... f_eps_n^m_n with weight lambda - beta (0 or 1).
int b_count(const RootCoord& a, int n);

// The irreducible quotient L(lambda) of the free module, built weight by weight:
// a vector below the top is zero iff every e_j kills it, so each weight space
// is the image of f_i L_{beta - alpha_i} under (e_1, ..., e_n).
class IrreducibleModule {
public:
  struct Space {
    int dim = 0;
    // e[j][r]: coordinates of e_j b_r in the space at a - e_j
    std::array<std::vector<std::vector<Scalar>>, kMaxRank + 1> e;
    // f[i][k]: coordinates in this space of f_i applied to basis vector k of a - e_i
    std::array<std::vector<std::vector<Scalar>>, kMaxRank + 1> f;
    std::vector<Word> reps; // an f-word producing each basis vector
  };
  using LVec = std::map<RootCoord, std::vector<Scalar>>;

  // mode: specialized or numeric
  IrreducibleModule(int n, const SpecMode& mode);

  int rank() const { return n_; }
  const SpecMode& mode() const { return mode_; }
  const Space& space(const RootCoord& a);
  int dim(const RootCoord& a) { return space(a).dim; }

  LVec act(const AlgElt& x); // x 1_lambda
  static bool is_zero(const LVec& v);

  // dim L_beta == b_count(beta); recorded so that is_zero_in_M may use beta.
  bool certify(const RootCoord& a);
  bool certified(const RootCoord& a) const { return certified_.count(a) > 0; }

  // Equality oracle in M_lambda; throws PreconditionError when the weight of x
  // has not been certified.
  bool is_zero_in_M(const AlgElt& x);

private:
  Scalar h_eigen(int i, const RootCoord& a);     // [h_{alpha_i}]_q on lambda - beta
  Scalar k_eigen(const Weight& mu, const RootCoord& a);
  void build(const RootCoord& a, Space& s);
  LVec apply(const Letter& l, const LVec& v);

  int n_;
  SpecMode mode_;
  FreeVerma engine_;
  std::map<RootCoord, Space> spaces_;
  std::map<std::pair<int, int>, Scalar> h_cache_;
  std::set<RootCoord> certified_;
};

} // namespace qsphere
