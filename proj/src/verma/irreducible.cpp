#include "verma/irreducible.hpp"

#include "errors.hpp"

namespace qsphere {

RootCoord to_root_coord(const Weight& relative) {
  RootCoord a{};
  int acc = 0;
  for (int i = kMaxRank - 1; i >= 0; --i) {
    acc -= relative.c[i];
    a[i] = acc;
  }
  return a;
}

Weight from_root_coord(const RootCoord& a) {
  Weight w;
  for (int i = 0; i < kMaxRank; ++i) w.c[i] = -(a[i] - (i + 1 < kMaxRank ? a[i + 1] : 0));
  return w;
}

int b_count(const RootCoord& a, int n) {
  for (int i = 0; i < kMaxRank; ++i) {
    if (i >= n && a[i] != 0) return 0;
    int next = i + 1 < kMaxRank ? a[i + 1] : 0;
    if (i < n && a[i] - next < 0) return 0;
  }
  return 1;
}

namespace {

bool valid(const RootCoord& a, int n) {
  for (int i = 0; i < kMaxRank; ++i) {
    if (a[i] < 0) return false;
    if (i >= n && a[i] != 0) return false;
  }
  return true;
}

RootCoord shifted(RootCoord a, int i, int by) {
  a[i - 1] += by;
  return a;
}

int beta_pairing(const Weight& mu, const RootCoord& a) {
  int s = 0;
  for (int j = 1; j <= kMaxRank; ++j) s += a[j - 1] * inner(mu, simple_root(j));
  return s;
}

} // namespace

IrreducibleModule::IrreducibleModule(int n, const SpecMode& mode)
    : n_(n), mode_(mode), engine_(n, false, mode.is_generic() ? 1 : mode.sigma()) {
  if (mode.is_generic()) throw UsageError("the irreducible quotient is built at the special weight only");
}

Scalar IrreducibleModule::h_eigen(int i, const RootCoord& a) {
  int s = beta_pairing(simple_root(i), a);
  auto key = std::make_pair(i, s);
  auto it = h_cache_.find(key);
  if (it == h_cache_.end()) {
    Scalar val = specialize(Scalar(engine_.e_eigen(i, s), e_step_denominator()), mode_);
    it = h_cache_.emplace(key, val).first;
  }
  return it->second;
}

Scalar IrreducibleModule::k_eigen(const Weight& mu, const RootCoord& a) {
  return specialize(Scalar(engine_.k_eigen(mu, beta_pairing(mu, a))), mode_);
}

const IrreducibleModule::Space& IrreducibleModule::space(const RootCoord& a) {
  static const Space empty;
  if (!valid(a, n_)) return empty;
  auto it = spaces_.find(a);
  if (it != spaces_.end()) return it->second;
  Space s;
  build(a, s);
  return spaces_.emplace(a, std::move(s)).first->second;
}

void IrreducibleModule::build(const RootCoord& a, Space& s) {
  if (a == RootCoord{}) {
    s.dim = 1;
    for (int j = 1; j <= n_; ++j) s.e[j] = {std::vector<Scalar>{}};
    s.reps = {Word{}};
    return;
  }
  // Layout of psi(c) = (e_1 c, ..., e_n c).
  std::array<int, kMaxRank + 2> offset{};
  for (int j = 1; j <= n_; ++j) offset[j + 1] = offset[j] + dim(shifted(a, j, -1));
  const int total = offset[n_ + 1];

  struct Candidate {
    int i, k;
    std::vector<Scalar> psi;
  };
  std::vector<Candidate> cands;
  for (int i = 1; i <= n_; ++i) {
    RootCoord sub = shifted(a, i, -1);
    const Space& S = space(sub);
    for (int k = 0; k < S.dim; ++k) {
      std::vector<Scalar> psi(static_cast<std::size_t>(total));
      for (int j = 1; j <= n_; ++j) {
        if (a[j - 1] == 0) continue;
        const Space& T = space(shifted(a, j, -1));
        // f_i (e_j b_k)
        const auto& ejb = S.e[j][k];
        for (std::size_t t = 0; t < ejb.size(); ++t) {
          if (ejb[t].is_zero()) continue;
          for (int r = 0; r < T.dim; ++r) {
            const Scalar& fr = T.f[i][t][r];
            if (!fr.is_zero()) psi[offset[j] + r] += ejb[t] * fr;
          }
        }
        if (j == i) psi[offset[j] + k] += h_eigen(i, sub);
      }
      cands.push_back({i, k, std::move(psi)});
    }
  }

  // Incremental echelon form; comb expresses each row through the basis.
  struct Row {
    std::vector<Scalar> vec;
    std::size_t pivot;
    std::vector<Scalar> comb;
  };
  std::vector<Row> ech;
  std::vector<std::size_t> basis;
  std::vector<std::vector<Scalar>> coords(cands.size());
  for (std::size_t ci = 0; ci < cands.size(); ++ci) {
    std::vector<Scalar> r = cands[ci].psi;
    std::vector<Scalar> comb(basis.size());
    for (const auto& row : ech) {
      if (r[row.pivot].is_zero()) continue;
      Scalar factor = r[row.pivot] / row.vec[row.pivot];
      for (std::size_t t = 0; t < r.size(); ++t)
        if (!row.vec[t].is_zero()) r[t] -= factor * row.vec[t];
      for (std::size_t t = 0; t < row.comb.size(); ++t)
        if (!row.comb[t].is_zero()) comb[t] += factor * row.comb[t];
    }
    std::size_t pivot = 0;
    while (pivot < r.size() && r[pivot].is_zero()) ++pivot;
    if (pivot == r.size()) {
      coords[ci] = std::move(comb);
      continue;
    }
    std::size_t b = basis.size();
    basis.push_back(ci);
    Row row{std::move(r), pivot, {}};
    row.comb.resize(b + 1);
    for (std::size_t t = 0; t < b; ++t) row.comb[t] = -comb[t];
    row.comb[b] = Scalar(1);
    ech.push_back(std::move(row));
    coords[ci].assign(b + 1, Scalar());
    coords[ci][b] = Scalar(1);
  }

  s.dim = static_cast<int>(basis.size());
  for (int i = 1; i <= n_; ++i) s.f[i].assign(static_cast<std::size_t>(dim(shifted(a, i, -1))), {});
  for (std::size_t ci = 0; ci < cands.size(); ++ci) {
    coords[ci].resize(basis.size());
    s.f[cands[ci].i][cands[ci].k] = std::move(coords[ci]);
  }
  for (int j = 1; j <= n_; ++j) {
    for (std::size_t b : basis) {
      const auto& psi = cands[b].psi;
      s.e[j].emplace_back(psi.begin() + offset[j], psi.begin() + offset[j + 1]);
    }
  }
  for (std::size_t b : basis) {
    Word w{Letter::f(cands[b].i)};
    const Word& tail = space(shifted(a, cands[b].i, -1)).reps[cands[b].k];
    w.insert(w.end(), tail.begin(), tail.end());
    s.reps.push_back(std::move(w));
  }
}

IrreducibleModule::LVec IrreducibleModule::apply(const Letter& l, const LVec& v) {
  LVec out;
  for (const auto& [a, x] : v) {
    if (l.is_f()) {
      check_index(l.index, n_);
      RootCoord t = shifted(a, l.index, 1);
      const Space& T = space(t);
      std::vector<Scalar> y(static_cast<std::size_t>(T.dim));
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].is_zero()) continue;
        for (int r = 0; r < T.dim; ++r) y[r] += x[k] * T.f[l.index][k][r];
      }
      auto& slot = out[t];
      if (slot.empty()) slot.resize(y.size());
      for (std::size_t r = 0; r < y.size(); ++r) slot[r] += y[r];
    } else if (l.is_e()) {
      check_index(l.index, n_);
      if (a[l.index - 1] == 0) continue;
      RootCoord t = shifted(a, l.index, -1);
      const Space& S = space(a);
      std::vector<Scalar> y(static_cast<std::size_t>(dim(t)));
      for (std::size_t r = 0; r < x.size(); ++r) {
        if (x[r].is_zero()) continue;
        for (std::size_t u = 0; u < y.size(); ++u) y[u] += x[r] * S.e[l.index][r][u];
      }
      auto& slot = out[t];
      if (slot.empty()) slot.resize(y.size());
      for (std::size_t u = 0; u < y.size(); ++u) slot[u] += y[u];
    } else {
      Scalar ev = k_eigen(l.k_weight(), a);
      auto& slot = out[a];
      if (slot.empty()) slot.resize(x.size());
      for (std::size_t r = 0; r < x.size(); ++r) slot[r] += ev * x[r];
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    bool zero = true;
    for (const auto& c : it->second) zero = zero && c.is_zero();
    if (zero) it = out.erase(it);
    else ++it;
  }
  return out;
}

IrreducibleModule::LVec IrreducibleModule::act(const AlgElt& x) {
  LVec result;
  for (const auto& [w, c] : x.terms()) {
    LVec v{{RootCoord{}, {Scalar(1)}}};
    for (auto it = w.rbegin(); it != w.rend() && !v.empty(); ++it) v = apply(*it, v);
    Scalar cs = specialize(c, mode_);
    for (const auto& [a, y] : v) {
      auto& slot = result[a];
      if (slot.empty()) slot.resize(y.size());
      for (std::size_t r = 0; r < y.size(); ++r) slot[r] += cs * y[r];
    }
  }
  for (auto it = result.begin(); it != result.end();) {
    bool zero = true;
    for (const auto& c : it->second) zero = zero && c.is_zero();
    if (zero) it = result.erase(it);
    else ++it;
  }
  return result;
}

bool IrreducibleModule::is_zero(const LVec& v) {
  for (const auto& [a, x] : v)
    for (const auto& c : x)
      if (!c.is_zero()) return false;
  return true;
}

bool IrreducibleModule::certify(const RootCoord& a) {
  if (!valid(a, n_)) return false;
  bool ok = dim(a) == b_count(a, n_);
  if (ok) certified_.insert(a);
  return ok;
}

bool IrreducibleModule::is_zero_in_M(const AlgElt& x) {
  if (x.is_zero()) return true;
  if (!x.is_homogeneous()) throw UsageError("is_zero_in_M needs a weight-homogeneous element");
  RootCoord a = to_root_coord(weight_of(x.terms().begin()->first));
  if (!valid(a, n_)) return true; // no such weight below lambda
  if (!certified(a)) throw PreconditionError("weight space not certified against the B-count");
  return is_zero(act(x));
}

} // namespace qsphere
