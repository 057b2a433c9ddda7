#include "verma/free_verma.hpp"

#include "errors.hpp"

#include <bit>
#include <map>

namespace qsphere {

namespace {

PackedWord remove_letter(PackedWord w, int p) {
  PackedWord low = w & ((PackedWord(1) << (3 * p)) - 1);
  PackedWord high = w >> (3 * (p + 1));
  return low | (high << (3 * p));
}

void drop_zeros(FreeVerma::Vec& v) {
  for (auto it = v.begin(); it != v.end();) {
    if (it->second.is_zero()) it = v.erase(it);
    else ++it;
  }
}

} // namespace

int packed_length(PackedWord w) { return (std::bit_width(w) + 2) / 3; }

PackedWord pack_f_word(const Word& w) {
  if (static_cast<int>(w.size()) > kMaxPackedLength) throw Error("f-word longer than the packed limit");
  PackedWord p = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!w[k].is_f()) throw Error("pack_f_word: word contains a non-f letter");
    p |= PackedWord(w[k].index) << (3 * k);
  }
  return p;
}

Word unpack(PackedWord w) {
  Word out;
  for (int p = 0, len = packed_length(w); p < len; ++p) out.push_back(Letter::f(packed_letter(w, p)));
  return out;
}

const Poly& e_step_denominator() {
  static const Poly d = Poly::monomial(GaussInt(1), Monomial::v(2)) - Poly::monomial(GaussInt(1), Monomial::v(-2));
  return d;
}

FreeVerma::FreeVerma(int n, bool generic, int sigma) : n_(n), generic_(generic), sigma_(sigma) {
  check_rank(n);
  for (int i = 1; i <= n; ++i) {
    Monomial m = Monomial::L(i, 1);
    if (i > 1) m.exp[i - 1] = -1;
    Poly a = Poly::monomial(GaussInt(1), m);
    Poly b = Poly::monomial(GaussInt(1), m.inverse());
    la_[i] = generic ? a : specialize_lambda(a, sigma);
    la_inv_[i] = generic ? b : specialize_lambda(b, sigma);
    for (int s = -kEigenRange; s <= kEigenRange; ++s) eig_table_[i].push_back(e_eigen(i, s));
  }
}

Poly FreeVerma::e_eigen(int i, int s) const {
  return la_[i].shifted(Monomial::v(-2 * s)) - la_inv_[i].shifted(Monomial::v(2 * s));
}

Poly FreeVerma::k_eigen(const Weight& mu, int s) const {
  Monomial m = Monomial::v(-2 * s);
  for (int i = 1; i <= kMaxRank; ++i) m.exp[i] = static_cast<std::int16_t>(mu.c[i - 1]);
  Poly p = Poly::monomial(GaussInt(1), m);
  return generic_ ? p : specialize_lambda(p, sigma_);
}

void FreeVerma::apply_e(int i, const Vec& in, Vec& out) const {
  // |s| <= 2 * kMaxPackedLength, well inside the table
  auto eigen = [&](int s) -> const Poly& { return eig_table_[i][s + kEigenRange]; };
  for (const auto& [w, c] : in) {
    int len = packed_length(w);
    int s = 0;
    for (int p = len - 1; p >= 0; --p) {
      int j = packed_letter(w, p);
      if (j == i) {
        const Poly& eg = eigen(s);
        Poly& slot = out[remove_letter(w, p)];
        for (const auto& t : eg.terms()) slot.add_scaled_shifted(c, t.coeff, t.mono);
      }
      s += cartan_inner(i, j);
    }
  }
  drop_zeros(out);
}

FreeVerma::Vec FreeVerma::apply(const Letter& l, const Vec& in) const {
  Vec out;
  switch (l.kind) {
  case Letter::Kind::F:
    check_index(l.index, n_);
    out.reserve(in.size());
    for (const auto& [w, c] : in) {
      if (packed_length(w) >= kMaxPackedLength) throw Error("f-word longer than the packed limit");
      out.emplace((w << 3) | l.index, c);
    }
    break;
  case Letter::Kind::E:
    check_index(l.index, n_);
    apply_e(l.index, in, out);
    break;
  case Letter::Kind::K: {
    Weight mu = l.k_weight();
    for (const auto& [w, c] : in) {
      int s = 0;
      for (int p = 0, len = packed_length(w); p < len; ++p) s += inner(mu, simple_root(packed_letter(w, p)));
      out.emplace(w, c * k_eigen(mu, s));
    }
    break;
  }
  }
  return out;
}

FreeVerma::Vec FreeVerma::apply_word(const Word& w, Vec v) const {
  for (auto it = w.rbegin(); it != w.rend() && !v.empty(); ++it) v = apply(*it, v);
  return v;
}

std::vector<Poly> FreeVerma::evaluate(const std::vector<const Word*>& words, const Vec& start) const {
  std::vector<Poly> result(words.size());
  std::vector<std::size_t> all(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) all[k] = k;

  auto dfs = [&](auto&& self, const Vec& v, const std::vector<std::size_t>& idx, std::size_t depth) -> void {
    std::map<Letter, std::vector<std::size_t>> next;
    for (std::size_t k : idx) {
      const Word& w = *words[k];
      if (w.size() == depth) {
        auto it = v.find(0);
        if (it != v.end()) result[k] = it->second;
      } else {
        next[w[w.size() - 1 - depth]].push_back(k);
      }
    }
    for (const auto& [letter, group] : next) {
      Vec u = apply(letter, v);
      if (u.empty()) continue;
      self(self, u, group, depth + 1);
    }
  };
  if (!start.empty()) dfs(dfs, start, all, 0);
  return result;
}

} // namespace qsphere
