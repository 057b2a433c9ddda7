#include "verma/evaluator.hpp"

#include "errors.hpp"

#include <map>

namespace qsphere {

namespace {

int count_e(const Word& w) {
  int k = 0;
  for (const auto& l : w) k += l.is_e();
  return k;
}

FreeVerma make_engine(const EvalContext& ctx) {
  return FreeVerma(ctx.n, ctx.mode.is_generic(), ctx.mode.is_generic() ? 1 : ctx.mode.sigma());
}

// lcm of the denominators of the coefficients of x
Poly common_denominator(const AlgElt& x) {
  Poly d(1);
  for (const auto& [w, c] : x.terms()) {
    if (c.den().is_one()) continue;
    Poly g = polyalg::gcd(d, c.den());
    d = d * polyalg::exact_divide(c.den(), g);
  }
  return d;
}

// x 1_lambda = vec / scale
FreeVerma::Vec image_scaled(const AlgElt& x, const FreeVerma& engine, Poly& scale) {
  int max_e = 0;
  for (const auto& [w, c] : x.terms()) max_e = std::max(max_e, count_e(w));
  Poly d = common_denominator(x);
  scale = d * e_step_denominator().pow(static_cast<unsigned>(max_e));
  FreeVerma::Vec out;
  for (const auto& [w, c] : x.terms()) {
    Poly p = c.num() * polyalg::exact_divide(d, c.den());
    int missing = max_e - count_e(w);
    if (missing > 0) p = p * e_step_denominator().pow(static_cast<unsigned>(missing));
    FreeVerma::Vec v = engine.apply_word(w, FreeVerma::vacuum());
    for (const auto& [pw, pc] : v) {
      Poly& slot = out[pw];
      slot += pc * p;
      if (slot.is_zero()) out.erase(pw);
    }
  }
  return out;
}

bool descend_to_zero(const FreeVerma& engine, const FreeVerma::Vec& v) {
  if (v.empty()) return true;
  if (v.count(0)) return false;
  for (int j = 1; j <= engine.rank(); ++j) {
    FreeVerma::Vec u = engine.apply(Letter::e(j), v);
    if (!descend_to_zero(engine, u)) return false;
  }
  return true;
}

} // namespace

FreeVerma::Vec image_of_vacuum(const AlgElt& x, const FreeVerma& engine) {
  Poly scale;
  return image_scaled(x, engine, scale);
}

Scalar pair_eval(const AlgElt& y, const AlgElt& x, const EvalContext& ctx) {
  FreeVerma engine = make_engine(ctx);
  Poly scale;
  FreeVerma::Vec xv = image_scaled(x, engine, scale);
  if (xv.empty() || y.is_zero()) return Scalar(0);

  std::optional<Weight> target;
  if (x.is_homogeneous()) target = -weight_of(x.terms().begin()->first);

  std::vector<const Word*> words;
  std::vector<const Scalar*> coeffs;
  for (const auto& [u, c] : y.terms()) {
    if (target && weight_of(u) != *target) continue;
    words.push_back(&u);
    coeffs.push_back(&c);
  }
  std::vector<Poly> values = engine.evaluate(words, xv);

  std::map<int, Scalar> by_e;
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (values[k].is_zero()) continue;
    by_e[count_e(*words[k])] += *coeffs[k] * Scalar(values[k]);
  }
  Scalar total;
  for (const auto& [ne, s] : by_e) {
    if (s.is_zero()) continue;
    total += s / Scalar(scale * e_step_denominator().pow(static_cast<unsigned>(ne)));
  }
  return specialize(total, ctx.mode);
}

Scalar vacuum_eval(const AlgElt& x, const EvalContext& ctx) { return pair_eval(x, AlgElt(1), ctx); }

Scalar invariant_form(const AlgElt& x, const AlgElt& y, const EvalContext& ctx) {
  return pair_eval(antipode(y, AntipodeDir::GammaInverse), x, ctx);
}

Scalar shapovalov(const AlgElt& x, const AlgElt& y, const EvalContext& ctx) { return pair_eval(omega(x), y, ctx); }

bool in_radical(const AlgElt& x, const EvalContext& ctx) {
  if (ctx.mode.is_numeric()) throw UsageError("in_radical works in generic or specialized mode");
  FreeVerma engine = make_engine(ctx);
  FreeVerma::Vec v = image_of_vacuum(x.map_coefficients(ctx.mode), engine);
  return descend_to_zero(engine, v);
}

// ---------------------------------------------------------------------------

namespace {

bool reducible(const Letter& a, const Letter& b) {
  return (a.is_e() && (b.is_f() || b.is_k())) || (a.is_k() && b.is_f());
}

Scalar k_value(const Word& w, const SpecMode& mode) {
  Monomial m;
  for (const auto& l : w) {
    if (!l.is_k()) throw Error("normal_order_eval: residual word is not a Cartan word");
    for (int i = 0; i < kMaxRank; ++i) m.exp[i + 1] = static_cast<std::int16_t>(m.exp[i + 1] + l.mu[i]);
  }
  return specialize(Scalar(Poly::monomial(GaussInt(1), m)), mode);
}

} // namespace

Scalar normal_order_eval(const Word& w, const EvalContext& ctx, RewriteStrategy strategy, std::mt19937* rng) {
  if (strategy == RewriteStrategy::Random && rng == nullptr) throw UsageError("random strategy needs a generator");
  const Scalar inv_qq = Scalar(1) / (Scalar::q(1) - Scalar::q(-1));
  AlgElt active = AlgElt::word(w);
  Scalar result;
  while (!active.is_zero()) {
    AlgElt next;
    for (const auto& [word, c] : active.terms()) {
      // f on the far left or e on the far right never moves again
      if (!word.empty() && (word.front().is_f() || word.back().is_e())) continue;
      std::vector<std::size_t> spots;
      for (std::size_t p = 0; p + 1 < word.size(); ++p)
        if (reducible(word[p], word[p + 1])) spots.push_back(p);
      if (spots.empty()) {
        result += c * k_value(word, ctx.mode);
        continue;
      }
      std::size_t p = spots.front();
      if (strategy == RewriteStrategy::Random)
        p = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(*rng)];
      const Letter a = word[p], b = word[p + 1];
      Word swapped = word;
      std::swap(swapped[p], swapped[p + 1]);
      if (a.is_e() && b.is_f()) {
        next.add_term(swapped, c);
        if (a.index == b.index) {
          Weight al = simple_root(a.index);
          for (int sign : {1, -1}) {
            Word t(word.begin(), word.begin() + static_cast<long>(p));
            t.push_back(Letter::k(al.scaled(sign)));
            t.insert(t.end(), word.begin() + static_cast<long>(p) + 2, word.end());
            next.add_term(std::move(t), sign > 0 ? c * inv_qq : -(c * inv_qq));
          }
        }
      } else if (a.is_e()) {
        // e_i K_mu = q^{-(mu, alpha_i)} K_mu e_i
        next.add_term(swapped, c * Scalar::q(-inner(b.k_weight(), a.weight())));
      } else {
        // K_mu f_j = q^{(mu, -alpha_j)} f_j K_mu
        next.add_term(swapped, c * Scalar::q(inner(a.k_weight(), b.weight())));
      }
    }
    active = std::move(next);
  }
  return specialize(result, ctx.mode);
}

} // namespace qsphere
