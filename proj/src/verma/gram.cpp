#include "verma/gram.hpp"

#include "errors.hpp"
#include "verma/irreducible.hpp"

#include <algorithm>
#include <thread>

namespace qsphere {

std::vector<Word> f_words_of_weight(const Weight& relative, int n) {
  RootCoord a = to_root_coord(relative);
  for (int i = 0; i < kMaxRank; ++i)
    if (a[i] < 0 || (i >= n && a[i] != 0)) return {};
  Word w;
  for (int i = 1; i <= n; ++i) w.insert(w.end(), static_cast<std::size_t>(a[i - 1]), Letter::f(i));
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

GramSlice gram(const Weight& relative, const EvalContext& ctx, int threads) {
  GramSlice g;
  g.weight = relative;
  g.words = f_words_of_weight(relative, ctx.n);
  const std::size_t N = g.words.size();
  g.entries.assign(N, std::vector<Scalar>(N));
  if (N == 0) return g;

  FreeVerma engine(ctx.n, ctx.mode.is_generic(), ctx.mode.is_generic() ? 1 : ctx.mode.sigma());
  std::vector<Word> rows;
  for (const auto& w : g.words) rows.push_back(omega(AlgElt::word(w)).terms().begin()->first);
  std::vector<const Word*> row_ptrs;
  for (const auto& r : rows) row_ptrs.push_back(&r);
  const Poly denom = e_step_denominator().pow(static_cast<unsigned>(g.words.front().size()));

  auto column = [&](std::size_t k) {
    FreeVerma::Vec xv = engine.apply_word(g.words[k], FreeVerma::vacuum());
    std::vector<Poly> vals = engine.evaluate(row_ptrs, xv);
    for (std::size_t j = 0; j < N; ++j)
      if (!vals[j].is_zero()) g.entries[j][k] = specialize(Scalar(vals[j], denom), ctx.mode);
  };
  int nt = std::clamp(threads, 1, static_cast<int>(N));
  if (nt == 1) {
    for (std::size_t k = 0; k < N; ++k) column(k);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t k = static_cast<std::size_t>(t); k < N; k += static_cast<std::size_t>(nt)) column(k);
      });
    for (auto& th : pool) th.join();
  }
  return g;
}

int exact_rank(const std::vector<std::vector<Scalar>>& m) {
  // clear denominators row by row, then fraction-free elimination over Z[i]
  std::vector<std::vector<GaussInt>> a;
  for (const auto& row : m) {
    GaussInt l(1);
    for (const auto& s : row) {
      if (!s.is_constant()) throw PreconditionError("exact_rank needs numeric entries");
      GaussInt d = s.den().constant_value();
      l = l * d.exact_div(gcd(l, d));
    }
    std::vector<GaussInt> r;
    for (const auto& s : row) r.push_back(s.is_zero() ? GaussInt(0) : s.num().constant_value() * l.exact_div(s.den().constant_value()));
    a.push_back(std::move(r));
  }
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  GaussInt prev(1);
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[static_cast<std::size_t>(rank)]);
    const auto& piv = a[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
      for (std::size_t cc = c + 1; cc < cols; ++cc)
        a[r][cc] = (piv[c] * a[r][cc] - a[r][c] * piv[cc]).exact_div(prev);
      a[r][c] = GaussInt(0);
    }
    prev = piv[c];
    ++rank;
  }
  return rank;
}

int rank_at(const Weight& relative, const EvalContext& ctx, int threads) {
  if (!ctx.mode.is_numeric()) throw UsageError("rank_at needs numeric mode");
  return exact_rank(gram(relative, ctx, threads).entries);
}

} // namespace qsphere
