#include "algebra/roots.hpp"

#include "errors.hpp"

namespace qsphere {

std::string Weight::to_string(int rank) const {
  std::string s = "[";
  for (int i = 0; i < rank; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

void check_rank(int n) {
  if (n < 1 || n > kMaxRank) throw UsageError("rank must lie in 1.." + std::to_string(kMaxRank));
}

void check_index(int i, int n) {
  if (i < 1 || i > n) throw UsageError("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
}

} // namespace qsphere
