#pragma once

#include "scalar/poly.hpp"

#include <array>
#include <string>

namespace qsphere {

// Integer vector in the orthonormal basis eps_1..eps_n of h^*.
// `relative` marks a weight measured from lambda rather than from 0.
struct Weight {
  std::array<int, kMaxRank> c{};
  bool relative = false;

  Weight& operator+=(const Weight& o) {
    for (int i = 0; i < kMaxRank; ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (int i = 0; i < kMaxRank; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const { return Weight{} - *this; }
  Weight scaled(int k) const {
    Weight w = *this;
    for (auto& x : w.c) x *= k;
    return w;
  }
  bool is_zero() const {
    for (int x : c)
      if (x != 0) return false;
    return true;
  }
  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.c <=> b.c; }

  std::string to_string(int rank = kMaxRank) const;
};

inline int inner(const Weight& a, const Weight& b) {
  int s = 0;
  for (int i = 0; i < kMaxRank; ++i) s += a.c[i] * b.c[i];
  return s;
}

inline Weight eps(int i) {
  Weight w;
  w.c[i - 1] = 1;
  return w;
}

// alpha_1 = eps_1, alpha_i = eps_i - eps_{i-1}.
inline Weight simple_root(int i) {
  Weight w = eps(i);
  if (i > 1) w.c[i - 2] = -1;
  return w;
}

// delta = eps_1 + eps_2 = 2 alpha_1 + alpha_2
inline Weight delta_root() { return eps(1) + eps(2); }

// (alpha_i, alpha_j)
inline int cartan_inner(int i, int j) { return inner(simple_root(i), simple_root(j)); }

void check_rank(int n);                  // 1 <= n <= kMaxRank, else UsageError
void check_index(int i, int n);          // 1 <= i <= n, else UsageError

} // namespace qsphere
