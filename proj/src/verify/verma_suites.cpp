#include "verify/verma_suites.hpp"

#include "errors.hpp"
#include "verma/gram.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace qsphere {

std::vector<MultiIndex> multi_indices(int n, int D) {
  std::vector<MultiIndex> out;
  for (int total = 0; total <= D; ++total) {
    MultiIndex m(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == n - 1) {
        m[pos] = left;
        out.push_back(m);
        return;
      }
      for (int x = left; x >= 0; --x) {
        m[pos] = x;
        rec(pos + 1, left - x);
      }
    };
    rec(0, total);
  }
  return out;
}

std::string mi_string(const MultiIndex& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}

AlgElt f_monomial(const MultiIndex& m, int n) {
  AlgElt x(1);
  for (int i = 1; i <= n; ++i) x = x * root_vector(RootKind::FEps, i, n).pow(m[i - 1]);
  return x;
}

AlgElt e_monomial_desc(const MultiIndex& k, int n) {
  AlgElt x(1);
  for (int i = n; i >= 1; --i) x = x * root_vector(RootKind::EEps, i, n).pow(k[i - 1]);
  return x;
}

AlgElt etilde_monomial(const MultiIndex& k, int n) {
  AlgElt x(1);
  for (int i = 1; i <= n; ++i) x = x * root_vector(RootKind::ETildeEps, i, n).pow(k[i - 1]);
  return x;
}

Scalar factorization_rhs(const MultiIndex& m) {
  Scalar r(1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    int mi = m[i];
    if (mi == 0) continue;
    Scalar t = qfact(mi) * Scalar::theta().pow(-mi) * Scalar::L(static_cast<int>(i) + 1, -mi) * Scalar::v(-mi);
    r *= (mi % 2 ? -t : t);
  }
  return r;
}

namespace {

// [N choose k] in the variable t
Scalar qbinom(int N, int k, const Scalar& t) {
  auto num = [&](int a) { return (t.pow(a) - t.pow(-a)) / (t - t.inverse()); };
  Scalar r(1);
  for (int j = 1; j <= k; ++j) r = r * num(N - k + j) / num(j);
  return r;
}

std::string wstr(const Word& w, int n) { return word_to_string(w, n); }

// Certifies the weight of x in L before asking the oracle; nullopt on a failed certificate.
std::optional<bool> oracle_zero(IrreducibleModule& L, const AlgElt& x, Report& rep) {
  if (x.is_zero()) return true;
  RootCoord a = to_root_coord(weight_of(x.terms().begin()->first));
  bool inside = true;
  for (int i = 0; i < kMaxRank; ++i) inside = inside && a[i] >= 0;
  if (inside && !L.certified(a) && !L.certify(a)) {
    std::string s;
    for (int i = 0; i < L.rank(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    rep.add("certify weight (" + s + ")", false,
            "dim L = " + std::to_string(L.dim(a)) + ", B-count = " + std::to_string(b_count(a, L.rank())));
    rep.fatal = true;
    return std::nullopt;
  }
  return L.is_zero_in_M(x);
}

void record_oracle(IrreducibleModule& L, const std::string& name, const AlgElt& x, Report& rep) {
  auto z = oracle_zero(L, x, rep);
  if (!z) return;
  rep.add(name, *z, *z ? std::nullopt : std::optional<std::string>("difference is nonzero in M_lambda"));
}

} // namespace

Report verify_factorization(const EvalContext& ctx, int D) {
  Stopwatch sw;
  Report rep;
  rep.suite = "factorization";
  rep.params = {{"n", ctx.n}, {"max_deg", D}};
  rep.mode = ctx.mode.name();
  if (!ctx.mode.is_lambda()) throw UsageError("factorization runs in specialized mode");
  auto idx = multi_indices(ctx.n, D);
  for (const auto& m : idx) {
    AlgElt x = f_monomial(m, ctx.n);
    for (const auto& k : idx) {
      Scalar lhs = pair_eval(e_monomial_desc(k, ctx.n), x, ctx);
      Scalar rhs = k == m ? specialize(factorization_rhs(m), ctx.mode) : Scalar(0);
      bool ok = lhs == rhs;
      rep.add("k=" + mi_string(k) + " m=" + mi_string(m), ok,
              ok ? std::nullopt : std::optional<std::string>("lhs " + lhs.to_string() + " rhs " + rhs.to_string()));
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

Report verify_harish(const EvalContext& ctx, int D) {
  Stopwatch sw;
  Report rep;
  rep.suite = "harish";
  rep.params = {{"n", ctx.n}, {"max_deg", D}};
  rep.mode = ctx.mode.name();
  if (!ctx.mode.is_lambda()) throw UsageError("harish runs in specialized mode");
  const Scalar half = qnum(HalfInt::half(1));
  for (int i = 1; i <= ctx.n; ++i) {
    AlgElt ee = root_vector(RootKind::EEps, i, ctx.n), ff = root_vector(RootKind::FEps, i, ctx.n);
    for (int m = 0; m <= D; ++m) {
      Scalar lhs = pair_eval(ee.pow(m), ff.pow(m), ctx);
      Scalar prod(1);
      for (int l = 1; l <= m; ++l) prod *= qnum(HalfInt::half(l)) / half;
      for (int l = 0; l < m; ++l) prod *= qnum(HalfInt::half(-l), Scalar::L(i));
      prod = specialize(prod, ctx.mode);
      Scalar closed = specialize(factorization_rhs([&] {
                                   MultiIndex mm(static_cast<std::size_t>(ctx.n));
                                   mm[i - 1] = m;
                                   return mm;
                                 }()),
                                 ctx.mode);
      std::string tag = "i=" + std::to_string(i) + " m=" + std::to_string(m);
      rep.add(tag + " product form", lhs == prod,
              lhs == prod ? std::nullopt : std::optional<std::string>("lhs " + lhs.to_string() + " rhs " + prod.to_string()));
      rep.add(tag + " closed form", lhs == closed,
              lhs == closed ? std::nullopt : std::optional<std::string>("lhs " + lhs.to_string() + " rhs " + closed.to_string()));
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

Report verify_span_action(IrreducibleModule& L, int D) {
  Stopwatch sw;
  Report rep;
  const int n = L.rank();
  rep.suite = "span";
  rep.params = {{"n", n}, {"max_deg", D}};
  rep.mode = L.mode().name();
  for (const auto& m : multi_indices(n, D)) {
    AlgElt b = f_monomial(m, n);
    MultiIndex up = m;
    up[0] += 1;
    record_oracle(L, "f_a1 on " + mi_string(m), f(1) * b - f_monomial(up, n), rep);
    for (int i = 1; i < n; ++i) {
      AlgElt x = f(i + 1) * b;
      if (m[i - 1] > 0) {
        MultiIndex mm = m;
        mm[i - 1] -= 1;
        mm[i] += 1;
        x += Scalar::q(1) * qnum(HalfInt::integer(m[i - 1])) * f_monomial(mm, n);
      }
      record_oracle(L, "f_a" + std::to_string(i + 1) + " on " + mi_string(m), x, rep);
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

Report verify_normalizer(IrreducibleModule& L, int D) {
  Stopwatch sw;
  Report rep;
  const int n = L.rank();
  rep.suite = "normalizer";
  rep.params = {{"n", n}, {"max_deg", D}};
  rep.mode = L.mode().name();
  if (n < 2) throw UsageError("normalizer needs n >= 2");
  std::vector<AlgElt> feps{AlgElt(0)};
  for (int i = 1; i <= n; ++i) feps.push_back(root_vector(RootKind::FEps, i, n));
  const AlgElt fdelta = root_vector(RootKind::FDelta, 0, n);

  for (int m = 2; m <= n; ++m) {
    std::vector<std::pair<std::string, AlgElt>> gens{{"f_delta", fdelta}};
    for (int j = 2; j <= m; ++j) gens.push_back({"f_a" + std::to_string(j), f(j)});

    std::vector<std::pair<std::string, AlgElt>> tails;
    // products of the normalizing elements f_eps_m..f_eps_n, in any order
    std::vector<std::vector<int>> words{{}};
    for (std::size_t s = 0; s < words.size(); ++s) {
      if (static_cast<int>(words[s].size()) == std::min(D, 3)) continue;
      for (int j = m; j <= n; ++j) {
        auto w = words[s];
        w.push_back(j);
        words.push_back(std::move(w));
      }
    }
    for (const auto& w : words) {
      AlgElt t(1);
      std::string name = "word[";
      for (int j : w) {
        t = t * feps[j];
        name += " f_eps" + std::to_string(j);
      }
      tails.push_back({name + " ]", t});
    }
    // ordered monomials as they appear in the corollary
    for (const auto& mm : multi_indices(n - m + 1, D)) {
      MultiIndex full(static_cast<std::size_t>(n));
      for (int j = m; j <= n; ++j) full[j - 1] = mm[j - m];
      if (mm.size() == 1 || std::count_if(mm.begin(), mm.end(), [](int x) { return x > 0; }) > 1)
        tails.push_back({"mono" + mi_string(full), f_monomial(full, n)});
    }
    for (const auto& [gname, g] : gens)
      for (const auto& [tname, t] : tails)
        record_oracle(L, "m=" + std::to_string(m) + " " + gname + " * " + tname, g * t, rep);
  }

  // Read literally the statement has f_eps_i, i < m, normalize U k_m^-; then
  // f_a3 f_eps2 1 would vanish, but the corollary gives -q f_eps3 1.
  if (n >= 3) {
    auto z = oracle_zero(L, f(3) * feps[2], rep);
    if (z && !*z) rep.warnings.push_back("f_a3 f_eps2 1_lambda is nonzero: f_eps_i normalizes U k_m^- only for i >= m");
  }

  // f_eps_{i+1} f_eps_i = q^-1 f_eps_i f_eps_{i+1} on tails in f_eps_{i+1}..f_eps_n
  for (int i = 1; i < n; ++i) {
    AlgElt rel = feps[i + 1] * feps[i] - Scalar::q(-1) * (feps[i] * feps[i + 1]);
    for (const auto& mm : multi_indices(n - i, std::max(0, D - 2))) {
      MultiIndex full(static_cast<std::size_t>(n));
      for (int j = i + 1; j <= n; ++j) full[j - 1] = mm[j - i - 1];
      record_oracle(L, "reorder eps" + std::to_string(i) + "," + std::to_string(i + 1) + " on " + mi_string(full),
                    rel * f_monomial(full, n), rep);
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

std::vector<std::pair<std::string, AlgElt>> serre_elements(int n, bool e_side) {
  auto g = e_side ? e : f;
  const std::string p = e_side ? "e" : "f";
  std::vector<std::pair<std::string, AlgElt>> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Weight ai = simple_root(i), aj = simple_root(j);
      int aij = 2 * inner(ai, aj) / inner(ai, ai);
      int N = 1 - aij;
      // q_i = q^{(a_i, a_i)/2}
      Scalar t = Scalar::v(inner(ai, ai));
      AlgElt s;
      for (int k = 0; k <= N; ++k) {
        AlgElt term = g(i).pow(N - k) * g(j) * g(i).pow(k);
        Scalar c = qbinom(N, k, t);
        s += (k % 2 ? -c : c) * term;
      }
      out.push_back({"serre " + p + std::to_string(i) + "," + p + std::to_string(j), s});
    }
  }
  if (n >= 2) {
    AlgElt d = root_vector(e_side ? RootKind::EDelta : RootKind::FDelta, 0, n);
    out.push_back({"[" + p + "1, " + p + "_delta]", commutator(g(1), d)});
  }
  return out;
}

Report verify_serre_radical(const EvalContext& ctx, int bound) {
  Stopwatch sw;
  Report rep;
  rep.suite = "serre-radical";
  rep.params = {{"n", ctx.n}, {"weight_bound", bound}};
  rep.mode = ctx.mode.name();
  if (!ctx.mode.is_generic()) throw UsageError("serre-radical runs in generic mode");
  const int n = ctx.n;
  std::vector<Word> tails{Word{}};
  for (std::size_t s = 0; s < tails.size(); ++s) {
    if (static_cast<int>(tails[s].size()) == bound) continue;
    for (int j = 1; j <= n; ++j) {
      Word w = tails[s];
      w.push_back(Letter::f(j));
      tails.push_back(std::move(w));
    }
  }
  for (bool e_side : {false, true}) {
    for (const auto& [name, S] : serre_elements(n, e_side)) {
      int deg = S.max_length();
      for (const auto& t : tails) {
        int len = static_cast<int>(t.size());
        if (!e_side && deg + len > bound) continue;
        // e-side: only tails that the element can lower to the top or below
        if (e_side) {
          if (len > bound) continue;
          RootCoord a = to_root_coord(weight_of(t) + weight_of(S.terms().begin()->first));
          bool below = true;
          for (int i = 0; i < kMaxRank; ++i) below = below && a[i] >= 0;
          if (!below) continue;
        }
        bool ok = in_radical(S * AlgElt::word(t), ctx);
        rep.add(name + " * [" + wstr(t, n) + "]", ok, ok ? std::nullopt : std::optional<std::string>("pairs nonzero with some f-word"));
        if (!ok) rep.fatal = true;
      }
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

Report verify_xyz(const EvalContext& ctx, int triples, unsigned seed) {
  Stopwatch sw;
  Report rep;
  rep.suite = "xyz";
  rep.params = {{"n", ctx.n}, {"triples", triples}, {"seed", seed}};
  rep.mode = ctx.mode.name();
  if (!ctx.mode.is_generic()) throw UsageError("xyz runs in generic mode");
  const int n = ctx.n;

  std::mt19937 rng(seed);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto rand_scalar = [&] {
    Scalar s;
    while (s.is_zero()) s = Scalar(GaussInt(uni(-3, 3), uni(-2, 2))) * Scalar::v(uni(-3, 3));
    return s;
  };
  auto rand_elt = [&] {
    AlgElt x;
    int nt = uni(1, 3);
    for (int t = 0; t < nt; ++t) {
      Word w;
      int len = uni(0, 2);
      for (int p = 0; p < len; ++p) {
        int kind = uni(0, 2), i = uni(1, n);
        w.push_back(kind == 0 ? Letter::e(i) : kind == 1 ? Letter::f(i) : Letter::k(eps(i).scaled(uni(0, 1) ? 1 : -1)));
      }
      x.add_term(std::move(w), rand_scalar());
    }
    return x;
  };
  int good = 0;
  std::optional<std::string> first_bad;
  for (int t = 0; t < triples; ++t) {
    AlgElt X = rand_elt(), Y = rand_elt(), Z = rand_elt();
    Scalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
    AlgElt lhs = qbracket(X, qbracket(Y, Z, a), b);
    AlgElt rhs = qbracket(qbracket(X, Y, c), Z, a * b / c) + c * qbracket(Y, qbracket(X, Z, b / c), a / c);
    if (lhs == rhs) ++good;
    else if (!first_bad) first_bad = "X = " + X.to_string(n) + ", Y = " + Y.to_string(n) + ", Z = " + Z.to_string(n);
  }
  rep.add("jacobi identity on " + std::to_string(triples) + " random triples", good == triples, first_bad);
  {
    AlgElt X = f(1);
    AlgElt lhs = qbracket(X, qbracket(X, X, Scalar(1)), Scalar(1));
    AlgElt rhs = qbracket(qbracket(X, X, Scalar(1)), X, Scalar(1)) + qbracket(X, qbracket(X, X, Scalar(1)), Scalar(1));
    rep.add("jacobi identity X=Y=Z=f1, a=b=c=1", lhs == rhs && lhs.is_zero());
  }

  const Scalar q = Scalar::q(1), qbar = Scalar::q(-1);
  for (int i = 2; i + 1 <= n; ++i) {
    AlgElt x = f(i - 1), y = f(i), z = f(i + 1);
    std::string tag = "i=" + std::to_string(i);
    AlgElt yz = qbracket(y, z, q);
    AlgElt first = commutator(qbracket(x, y, qbar), yz);
    AlgElt second = commutator(y, qbracket(x, yz, q));
    bool ok1 = in_radical(first, ctx), ok2 = in_radical(second, ctx);
    rep.add(tag + " [[x,y]_qbar,[y,z]_q]", ok1, ok1 ? std::nullopt : std::optional<std::string>("nonzero pairing"));
    rep.add(tag + " [y,[x,[y,z]_q]_q]", ok2, ok2 ? std::nullopt : std::optional<std::string>("nonzero pairing"));
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

Report verify_irreducibility(int n, const std::vector<Scalar>& points, int sigma, int D, int threads) {
  Stopwatch sw;
  Report rep;
  rep.suite = "irreducibility";
  Json pts = Json::array();
  for (const auto& p : points) pts.push_back(p.to_string());
  rep.params = {{"n", n}, {"max_deg", D}, {"v0", pts}};
  rep.mode = SpecMode::lambda(sigma).name();

  std::vector<RootCoord> weights;
  RootCoord a{};
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      weights.push_back(a);
      return;
    }
    for (int x = 0; x <= D; ++x) {
      a[i] = x;
      rec(i + 1);
    }
    a[i] = 0;
  };
  rec(0);

  for (const auto& v0 : points) {
    EvalContext ctx{n, SpecMode::numeric(v0, sigma)};
    for (const auto& w : weights) {
      Weight wt = from_root_coord(w);
      int bc = b_count(w, n);
      int r = rank_at(wt, ctx, threads);
      std::string tag = "v0=" + v0.to_string() + " beta=(";
      for (int i = 0; i < n; ++i) tag += (i ? "," : "") + std::to_string(w[i]);
      tag += ")";
      rep.add(tag + " rank", r == bc,
              r == bc ? std::nullopt : std::optional<std::string>("rank " + std::to_string(r) + " vs B-count " + std::to_string(bc)));
      if (bc == 1) {
        MultiIndex m(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) m[i] = w[i] - (i + 1 < n ? w[i + 1] : 0);
        AlgElt b = f_monomial(m, n);
        Scalar d = shapovalov(b, b, ctx);
        rep.add(tag + " diagonal", !d.is_zero(), d.is_zero() ? std::optional<std::string>("zero diagonal") : std::nullopt);
      }
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

} // namespace qsphere
