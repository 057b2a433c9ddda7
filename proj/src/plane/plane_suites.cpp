#include "plane/plane_suites.hpp"

#include "errors.hpp"
#include "verma/gram.hpp"

namespace qsphere {

std::vector<std::pair<std::string, AlgElt>> kappa_operators(int n) {
  if (n < 2) throw UsageError("delta operators need n >= 2");
  std::vector<std::pair<std::string, AlgElt>> ops;
  for (int i = 2; i <= n; ++i) {
    ops.push_back({"e" + std::to_string(i), e(i)});
    ops.push_back({"f" + std::to_string(i), f(i)});
  }
  ops.push_back({"e_delta", root_vector(RootKind::EDelta, 0, n)});
  ops.push_back({"f_delta", root_vector(RootKind::FDelta, 0, n)});
  return ops;
}

bool is_kappa_invariant(const QuantumPlane& P, const PlanePoly& p) {
  for (const auto& [m, c] : p.terms())
    if (!m.weight().is_zero()) return false;
  for (const auto& [name, op] : kappa_operators(P.rank()))
    if (!P.act(op, p).is_zero()) return false;
  return true;
}

std::vector<PlanePoly> invariant_candidates(const QuantumPlane& P, int m) {
  std::vector<PlanePoly> out;
  PlanePoly C = P.casimir();
  for (int l = 0; 2 * l <= m; ++l) out.push_back(P.multiply(P.power(C, l), P.power(PlanePoly::x(0), m - 2 * l)));
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Scalar inv = a[r][c].inverse();
    for (auto& x : a[r]) x *= inv;
    for (std::size_t o = 0; o < a.size(); ++o) {
      if (o == r || a[o][c].is_zero()) continue;
      Scalar fct = a[o][c];
      for (std::size_t cc = c; cc < cols; ++cc)
        if (!a[r][cc].is_zero()) a[o][cc] -= fct * a[r][cc];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

InvariantSpace invariant_subspace(const QuantumPlane& P, int m, const Scalar& v0) {
  InvariantSpace out;
  out.degree = m;
  auto at = [&](const Scalar& s) { return substitute_v(s, v0); };

  std::vector<PlaneMono> cols;
  for (const auto& mono : P.monomials(m))
    if (mono.weight().is_zero()) cols.push_back(mono);

  std::vector<std::vector<Scalar>> rows;
  for (const auto& [name, op] : kappa_operators(P.rank())) {
    std::map<PlaneMono, std::vector<Scalar>> block;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      PlanePoly img = P.act(op, PlanePoly::mono(cols[c]));
      for (const auto& [tm, tc] : img.terms()) {
        auto& row = block[tm];
        if (row.empty()) row.resize(cols.size());
        row[c] = at(tc);
      }
    }
    for (auto& [tm, row] : block) rows.push_back(std::move(row));
  }

  auto pivots = rref(rows, cols.size());
  out.dim = static_cast<int>(cols.size() - pivots.size());
  std::vector<bool> is_pivot(cols.size());
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols.size(); ++free) {
    if (is_pivot[free]) continue;
    PlanePoly b = PlanePoly::mono(cols[free]);
    for (std::size_t r = 0; r < pivots.size(); ++r) b.add(cols[pivots[r]], -rows[r][free]);
    out.basis.push_back(std::move(b));
  }

  out.candidates = invariant_candidates(P, m);
  out.candidates_invariant = true;
  for (const auto& c : out.candidates) out.candidates_invariant = out.candidates_invariant && is_kappa_invariant(P, c);
  std::vector<std::vector<Scalar>> cm;
  for (const auto& c : out.candidates) {
    std::vector<Scalar> row(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      auto it = c.terms().find(cols[k]);
      if (it != c.terms().end()) row[k] = at(it->second);
    }
    cm.push_back(std::move(row));
  }
  out.candidates_rank = exact_rank(cm);
  return out;
}

PlanePoly star(const QuantumPlane& P, const PlanePoly& p, const PlanePoly& r, const FTensor& F) {
  if (F.n != P.rank()) throw UsageError("rank of F and plane differ");
  if (p.is_zero() || r.is_zero()) return PlanePoly();
  const int need = 2 * std::min(p.max_degree(), r.max_degree());
  if (F.D < need) throw PreconditionError("star needs F truncated at degree >= " + std::to_string(need));
  PlanePoly out;
  for (const auto& ent : F.entries) {
    int deg = 0;
    for (int x : ent.m) deg += x;
    if (deg > need) continue; // raises the weight past anything of that degree
    PlanePoly a = P.act(ent.epart, p);
    if (a.is_zero()) continue;
    PlanePoly b = P.act(ent.fpart, r);
    if (b.is_zero()) continue;
    out += P.multiply(a, b) * ent.coeff;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

PlanePoly random_poly(std::mt19937& rng, const QuantumPlane& P, int degree) {
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  PlanePoly p;
  int nt = uni(1, 3);
  const int n = P.rank();
  for (int t = 0; t < nt; ++t) {
    std::vector<int> w;
    int d = uni(0, degree);
    for (int k = 0; k < d; ++k) w.push_back(uni(-n, n));
    Scalar c(GaussInt(uni(-3, 3), uni(-1, 1)));
    if (c.is_zero()) c = Scalar(1);
    p += P.normalize(w) * (c * Scalar::v(uni(-2, 2)));
  }
  return p;
}

std::vector<Letter> generators(int n) {
  std::vector<Letter> g;
  for (int i = 1; i <= n; ++i) {
    g.push_back(Letter::e(i));
    g.push_back(Letter::f(i));
    g.push_back(Letter::k(simple_root(i)));
  }
  return g;
}

std::string letter_name(const Letter& l, int n) { return word_to_string(Word{l}, n); }

// counts successes over a batch, keeping the first failure as witness
struct Tally {
  int good = 0, total = 0;
  std::optional<std::string> witness;
  void operator()(bool ok, const std::function<std::string()>& what) {
    ++total;
    if (ok) ++good;
    else if (!witness) witness = what();
  }
  void report(Report& rep, const std::string& name) const {
    rep.add(name + " (" + std::to_string(total) + " cases)", good == total, witness);
  }
};

} // namespace

Report verify_module_algebra(int n, int degree, int cases, unsigned seed) {
  Stopwatch sw;
  Report rep;
  rep.suite = "module-algebra";
  rep.params = {{"n", n}, {"max_deg", degree}, {"cases", cases}, {"seed", seed}};
  rep.mode = "generic-q";
  QuantumPlane P(n);
  std::mt19937 rng(seed);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const auto gens = generators(n);

  // (a) every generator respects every defining relation
  for (const auto& rel : P.relations()) {
    for (const auto& g : gens) {
      PlanePoly lhs = P.act_on_word(g, rel.lhs);
      for (const auto& [w, c] : rel.rhs) lhs -= P.act_on_word(g, w) * c;
      std::string name = letter_name(g, n) + " on x" + std::to_string(rel.lhs[0]) + " x" + std::to_string(rel.lhs[1]) + " relation";
      rep.add(name, lhs.is_zero(), lhs.is_zero() ? std::nullopt : std::optional<std::string>(lhs.to_string()));
    }
  }
  Tally raw;
  for (int t = 0; t < cases; ++t) {
    std::vector<int> w;
    int len = uni(2, std::max(2, degree));
    for (int k = 0; k < len; ++k) w.push_back(uni(-n, n));
    const Letter& g = gens[static_cast<std::size_t>(uni(0, static_cast<int>(gens.size()) - 1))];
    bool ok = P.act(g, P.normalize(w)) == P.act_on_word(g, w);
    raw(ok, [&] {
      std::string s = letter_name(g, n) + " on raw word";
      for (int k : w) s += " x" + std::to_string(k);
      return s;
    });
  }
  raw.report(rep, "action on raw words matches action on normal forms");

  Tally conf;
  for (int t = 0; t < cases; ++t) {
    std::vector<int> w;
    int len = uni(1, std::max(1, degree + 2));
    for (int k = 0; k < len; ++k) w.push_back(uni(-n, n));
    conf(P.normalize(w) == P.normalize_random(w, rng), [&] {
      std::string s = "word";
      for (int k : w) s += " x" + std::to_string(k);
      return s;
    });
  }
  conf.report(rep, "normal form independent of rewriting order");

  // (b) [e_i, f_j] = delta_ij [h_i]_q
  const Scalar qq = Scalar::q(1) - Scalar::q(-1);
  Tally comm;
  for (int t = 0; t < cases; ++t) {
    int i = uni(1, n), j = uni(1, n);
    PlanePoly p = random_poly(rng, P, degree);
    PlanePoly lhs = P.act(Letter::e(i), P.act(Letter::f(j), p)) - P.act(Letter::f(j), P.act(Letter::e(i), p));
    PlanePoly rhs;
    if (i == j) rhs = (P.act(Letter::k(simple_root(i)), p) - P.act(Letter::k(-simple_root(i)), p)) * qq.inverse();
    comm(lhs == rhs, [&] { return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " p=" + p.to_string(); });
  }
  comm.report(rep, "[e_i, f_j] on random polynomials");

  // Serre elements act by zero
  Tally serre;
  for (int t = 0; t < std::max(1, cases / 10); ++t) {
    PlanePoly p = random_poly(rng, P, degree);
    for (bool e_side : {false, true})
      for (const auto& [name, S] : serre_elements(n, e_side)) {
        PlanePoly r = P.act(S, p);
        serre(r.is_zero(), [&, nm = name] { return nm + " on " + p.to_string(); });
      }
  }
  serre.report(rep, "q-Serre elements act by zero");

  // (c) iota(u |> x) = theta(u) |> iota(x), theta = chev_twist
  for (const auto& g : gens) {
    AlgElt u = AlgElt::letter(g);
    AlgElt tu = chev_twist(u);
    for (int k = -n; k <= n; ++k) {
      PlanePoly x = PlanePoly::x(k);
      PlanePoly lhs = P.iota(P.act(u, x)), rhs = P.act(tu, P.iota(x));
      rep.add("iota compatibility " + letter_name(g, n) + " on x" + std::to_string(k), lhs == rhs,
              lhs == rhs ? std::nullopt : std::optional<std::string>(lhs.to_string() + " vs " + rhs.to_string()));
    }
  }
  Tally iot;
  for (int t = 0; t < cases; ++t) {
    PlanePoly p = random_poly(rng, P, degree);
    const Letter& g = gens[static_cast<std::size_t>(uni(0, static_cast<int>(gens.size()) - 1))];
    AlgElt u = AlgElt::letter(g);
    iot(P.iota(P.act(u, p)) == P.act(chev_twist(u), P.iota(p)), [&] { return letter_name(g, n) + " on " + p.to_string(); });
  }
  iot.report(rep, "iota compatibility on random polynomials");

  PlanePoly C = P.casimir();
  for (int i = 1; i <= n; ++i) {
    bool ok = P.act(Letter::e(i), C).is_zero() && P.act(Letter::f(i), C).is_zero();
    rep.add("C_q killed by e" + std::to_string(i) + ", f" + std::to_string(i), ok);
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

Report verify_delta_inv(int n, int kmax) {
  Stopwatch sw;
  Report rep;
  rep.suite = "delta-inv";
  rep.params = {{"n", n}, {"kmax", kmax}};
  rep.mode = "generic-q";
  if (n < 2) throw UsageError("delta-inv needs n >= 2");
  QuantumPlane P(n);
  const AlgElt fd = root_vector(RootKind::FDelta, 0, n), ed = root_vector(RootKind::EDelta, 0, n);
  auto c = [](int k) { return (Scalar::q(-k) - Scalar(1)) / (Scalar::q(-1) - Scalar(1)); };
  auto mono = [](std::initializer_list<std::pair<int, int>> ex) {
    PlaneMono m;
    for (auto [i, a] : ex) m.a[static_cast<std::size_t>(i + kMaxRank)] = static_cast<std::uint8_t>(a);
    return m;
  };
  auto check = [&](const std::string& name, const PlanePoly& got, const PlanePoly& want) {
    bool ok = got == want;
    rep.add(name, ok, ok ? std::nullopt : std::optional<std::string>("got " + got.to_string() + ", expected " + want.to_string()));
  };
  for (int k = 0; k <= kmax; ++k) {
    const std::string tag = " on x0^" + std::to_string(k);
    PlanePoly x = P.power(PlanePoly::x(0), k);
    check("f_delta" + tag, P.act(fd, x), PlanePoly());
    check("e_delta" + tag, P.act(ed, x), PlanePoly());
    check("f2" + tag, P.act(f(2), x), PlanePoly());
    PlanePoly i1, i2, i3, i4;
    if (k >= 1) i1 = PlanePoly::mono(mono({{-1, 1}, {0, k - 1}}), -c(k));
    if (k >= 2) {
      Scalar ck = c(k - 1) * c(k);
      i2 = PlanePoly::mono(mono({{-1, 2}, {0, k - 2}}), Scalar::q(1) * ck);
      i3 = PlanePoly::mono(mono({{-2, 1}, {-1, 1}, {0, k - 2}}), -(ck * qnum(HalfInt::integer(2))));
      i4 = PlanePoly::mono(mono({{-2, 1}, {-1, 1}, {0, k - 2}}), -ck);
    }
    check("f1" + tag, P.act(f(1), x), i1);
    check("f1^2" + tag, P.act(f(1) * f(1), x), i2);
    check("f2 f1^2" + tag, P.act(f(2) * f(1) * f(1), x), i3);
    check("f1 f2 f1" + tag, P.act(f(1) * f(2) * f(1), x), i4);
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

Report verify_invariant_dims(int n, int mmax, const std::vector<Scalar>& points) {
  Stopwatch sw;
  Report rep;
  rep.suite = "invariant-dims";
  Json pts = Json::array();
  for (const auto& p : points) pts.push_back(p.to_string());
  rep.params = {{"n", n}, {"max_deg", mmax}, {"v0", pts}};
  rep.mode = "numeric";
  QuantumPlane P(n);
  for (const auto& v0 : points) {
    Json dims = Json::array();
    for (int m = 0; m <= mmax; ++m) {
      InvariantSpace s = invariant_subspace(P, m, v0);
      const int expected = m / 2 + 1;
      dims.push_back(s.dim);
      std::string tag = "v0=" + v0.to_string() + " m=" + std::to_string(m);
      rep.add(tag + " dimension", s.dim == expected,
              s.dim == expected ? std::nullopt
                                : std::optional<std::string>("dim " + std::to_string(s.dim) + " expected " + std::to_string(expected)));
      rep.add(tag + " C_q^l x0^(m-2l) invariant", s.candidates_invariant);
      rep.add(tag + " C_q^l x0^(m-2l) independent", s.candidates_rank == expected,
              s.candidates_rank == expected ? std::nullopt : std::optional<std::string>("rank " + std::to_string(s.candidates_rank)));
    }
    rep.params["dims v0=" + v0.to_string()] = dims;
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

Report verify_star(int n, int mbound) {
  Stopwatch sw;
  Report rep;
  rep.suite = "star";
  rep.params = {{"n", n}, {"max_deg", mbound}};
  rep.mode = "generic-q";
  if (n < 2) throw UsageError("star needs n >= 2");
  QuantumPlane P(n);
  const FTensor F = build_F(n, 2 * std::max(1, mbound));

  std::vector<std::pair<std::string, PlanePoly>> basis;
  for (int d = 0; d <= mbound; ++d) {
    auto cand = invariant_candidates(P, d);
    for (std::size_t l = 0; l < cand.size(); ++l)
      basis.push_back({"C^" + std::to_string(l) + " x0^" + std::to_string(d - 2 * static_cast<int>(l)), cand[l]});
  }

  std::map<std::pair<std::size_t, std::size_t>, PlanePoly> pair_star;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      PlanePoly s = star(P, basis[a].second, basis[b].second, F);
      bool ok = is_kappa_invariant(P, s);
      rep.add("closure " + basis[a].first + " * " + basis[b].first, ok, ok ? std::nullopt : std::optional<std::string>(s.to_string()));
      pair_star.emplace(std::make_pair(a, b), std::move(s));
    }

  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t c = 0; c < basis.size(); ++c) {
        PlanePoly left = star(P, pair_star.at({a, b}), basis[c].second, F);
        PlanePoly right = star(P, basis[a].second, pair_star.at({b, c}), F);
        bool ok = left == right;
        rep.add("associativity (" + basis[a].first + ", " + basis[b].first + ", " + basis[c].first + ")", ok,
                ok ? std::nullopt : std::optional<std::string>(left.to_string() + " vs " + right.to_string()));
      }

  // non-invariant triples of degree one
  std::optional<std::string> witness;
  for (int i = -n; i <= n && !witness; ++i)
    for (int j = -n; j <= n && !witness; ++j)
      for (int k = -n; k <= n && !witness; ++k) {
        PlanePoly x = PlanePoly::x(i), y = PlanePoly::x(j), z = PlanePoly::x(k);
        PlanePoly left = star(P, star(P, x, y, F), z, F), right = star(P, x, star(P, y, z, F), F);
        if (!(left == right))
          witness = "(x" + std::to_string(i) + " * x" + std::to_string(j) + ") * x" + std::to_string(k) + " = " + left.to_string() +
                    " but x" + std::to_string(i) + " * (x" + std::to_string(j) + " * x" + std::to_string(k) + ") = " + right.to_string();
      }
  if (witness) rep.params["non_associative_witness"] = *witness;
  else rep.warnings.push_back("no non-associative triple found among degree-one monomials");

  // classical limit v -> 1
  auto at1 = [](const Scalar& s) { return substitute_v(s, Scalar(1)); };
  std::vector<std::pair<std::string, PlanePoly>> probes = basis;
  for (int i = -n; i <= n; ++i) probes.push_back({"x" + std::to_string(i), PlanePoly::x(i)});
  Tally lim;
  for (const auto& [na, pa] : probes)
    for (const auto& [nb, pb] : probes) {
      if (pa.max_degree() + pb.max_degree() > 2 * mbound) continue;
      PlanePoly s = star(P, pa, pb, F).map_coefficients(at1);
      PlanePoly m = P.multiply(pa, pb).map_coefficients(at1);
      lim(s == m, [&, a = na, b = nb] { return a + " * " + b; });
    }
  lim.report(rep, "v -> 1 limit of star equals the plane product");
  rep.elapsed_ms = sw.ms();
  return rep;
}

} // namespace qsphere
