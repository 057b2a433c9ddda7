#include "plane/plane.hpp"

#include "errors.hpp"

#include <algorithm>
#include <functional>

namespace qsphere {

PlaneMono PlaneMono::var(int i) {
  PlaneMono m;
  m.a[static_cast<std::size_t>(i + kMaxRank)] = 1;
  return m;
}

int PlaneMono::degree() const {
  int d = 0;
  for (auto x : a) d += x;
  return d;
}

Weight PlaneMono::weight() const {
  Weight w;
  for (int i = 1; i <= kMaxRank; ++i) w.c[i - 1] = exp(i) - exp(-i);
  return w;
}

std::vector<int> PlaneMono::word() const {
  std::vector<int> w;
  for (int i = -kMaxRank; i <= kMaxRank; ++i) w.insert(w.end(), static_cast<std::size_t>(exp(i)), i);
  return w;
}

// ---------------------------------------------------------------------------

PlanePoly::PlanePoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(PlaneMono{}, c);
}

PlanePoly PlanePoly::mono(const PlaneMono& m, const Scalar& c) {
  PlanePoly p;
  p.add(m, c);
  return p;
}

void PlanePoly::add(const PlaneMono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int PlanePoly::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

PlanePoly& PlanePoly::operator+=(const PlanePoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

PlanePoly& PlanePoly::operator-=(const PlanePoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

PlanePoly& PlanePoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

PlanePoly PlanePoly::map_coefficients(const std::function<Scalar(const Scalar&)>& fn) const {
  PlanePoly r;
  for (const auto& [m, c] : terms_) r.add(m, fn(c));
  return r;
}

std::string PlanePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += c.to_string();
    for (int i = -kMaxRank; i <= kMaxRank; ++i)
      if (m.exp(i) > 0) s += (s.back() == ')' ? " * " : " ") + ("x[" + std::to_string(i) + "]^" + std::to_string(m.exp(i)));
  }
  return s;
}

// ---------------------------------------------------------------------------

QuantumPlane::QuantumPlane(int n) : n_(n) { check_rank(n); }

void QuantumPlane::check_var(int i) const {
  if (i < -n_ || i > n_) throw UsageError("plane variable index out of range: " + std::to_string(i));
}

std::vector<std::pair<std::pair<int, int>, Scalar>> QuantumPlane::swap_rule(int a, int b) const {
  if (a != -b) return {{{b, a}, Scalar::q(-1)}};
  const int j = a;
  if (j == 1) return {{{-1, 1}, Scalar(1)}, {{0, 0}, Scalar::q(1) - Scalar(1)}};
  return {{{-j, j}, Scalar(1)}, {{j - 1, -j + 1}, Scalar::q(1)}, {{-j + 1, j - 1}, -Scalar::q(-1)}};
}

const PlanePoly& QuantumPlane::mul_letter(const PlaneMono& m, int k) const {
  auto key = std::make_pair(m, k);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  int t = -kMaxRank - 1;
  for (int i = kMaxRank; i >= -kMaxRank; --i)
    if (m.exp(i) > 0) {
      t = i;
      break;
    }
  PlanePoly result;
  if (t <= k) {
    PlaneMono r = m;
    ++r.a[static_cast<std::size_t>(k + kMaxRank)];
    result.add(r, Scalar(1));
  } else {
    PlaneMono rest = m;
    --rest.a[static_cast<std::size_t>(t + kMaxRank)];
    for (const auto& [uv, c] : swap_rule(t, k)) {
      PlanePoly step = mul_letter(rest, uv.first);
      for (const auto& [mm, cc] : step.terms()) result += mul_letter(mm, uv.second) * (c * cc);
    }
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

PlanePoly QuantumPlane::normalize(const std::vector<int>& word) const {
  PlanePoly p(Scalar(1));
  for (int k : word) {
    check_var(k);
    PlanePoly next;
    for (const auto& [m, c] : p.terms()) next += mul_letter(m, k) * c;
    p = std::move(next);
  }
  return p;
}

PlanePoly QuantumPlane::normalize_random(const std::vector<int>& word, std::mt19937& rng) const {
  std::map<std::vector<int>, Scalar> active{{word, Scalar(1)}};
  PlanePoly out;
  while (!active.empty()) {
    auto node = active.extract(active.begin());
    const std::vector<int>& w = node.key();
    std::vector<std::size_t> spots;
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (w[p] > w[p + 1]) spots.push_back(p);
    if (spots.empty()) {
      PlaneMono m;
      for (int k : w) {
        check_var(k);
        ++m.a[static_cast<std::size_t>(k + kMaxRank)];
      }
      out.add(m, node.mapped());
      continue;
    }
    std::size_t p = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    for (const auto& [uv, c] : swap_rule(w[p], w[p + 1])) {
      std::vector<int> nw = w;
      nw[p] = uv.first;
      nw[p + 1] = uv.second;
      Scalar add = c * node.mapped();
      auto [it, fresh] = active.emplace(std::move(nw), add);
      if (!fresh) {
        it->second += add;
        if (it->second.is_zero()) active.erase(it);
      }
    }
  }
  return out;
}

PlanePoly QuantumPlane::multiply(const PlanePoly& p, const PlanePoly& r) const {
  PlanePoly out;
  for (const auto& [mr, cr] : r.terms()) {
    PlanePoly acc = p * cr;
    for (int k : mr.word()) {
      PlanePoly next;
      for (const auto& [m, c] : acc.terms()) next += mul_letter(m, k) * c;
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

PlanePoly QuantumPlane::power(const PlanePoly& p, int k) const {
  PlanePoly r(Scalar(1));
  for (int i = 0; i < k; ++i) r = multiply(r, p);
  return r;
}

namespace {

// generator on a single variable: list of (index, coefficient)
std::vector<std::pair<int, Scalar>> on_variable(const Letter& l, int k) {
  std::vector<std::pair<int, Scalar>> out;
  const int i = l.index;
  if (l.is_e()) {
    if (k == i - 1) out.push_back({i, Scalar(1)});
    if (k == -i) out.push_back({-i + 1, Scalar(-1)});
  } else if (l.is_f()) {
    if (k == i) out.push_back({i - 1, Scalar(1)});
    if (k == -i + 1) out.push_back({-i, Scalar(-1)});
  }
  return out;
}

} // namespace

PlanePoly QuantumPlane::act_on_word(const Letter& l, const std::vector<int>& word) const {
  if (l.is_k()) {
    Weight w;
    for (int k : word) w += plane_weight(k);
    return normalize(word) * Scalar::q(inner(l.k_weight(), w));
  }
  check_index(l.index, n_);
  const Weight alpha = simple_root(l.index);
  PlanePoly out;
  for (std::size_t p = 0; p < word.size(); ++p) {
    auto images = on_variable(l, word[p]);
    if (images.empty()) continue;
    // e: K_alpha on everything to the right; f: K_alpha^-1 on everything to the left
    Weight side;
    if (l.is_e())
      for (std::size_t r = p + 1; r < word.size(); ++r) side += plane_weight(word[r]);
    else
      for (std::size_t r = 0; r < p; ++r) side -= plane_weight(word[r]);
    Scalar k = Scalar::q(inner(alpha, side));
    for (const auto& [idx, c] : images) {
      std::vector<int> w = word;
      w[p] = idx;
      out += normalize(w) * (c * k);
    }
  }
  return out;
}

PlanePoly QuantumPlane::act(const Letter& l, const PlanePoly& p) const {
  PlanePoly out;
  for (const auto& [m, c] : p.terms()) out += act_on_word(l, m.word()) * c;
  return out;
}

PlanePoly QuantumPlane::act(const AlgElt& x, const PlanePoly& p) const {
  PlanePoly out;
  for (const auto& [w, c] : x.terms()) {
    PlanePoly v = p;
    for (auto it = w.rbegin(); it != w.rend() && !v.is_zero(); ++it) v = act(*it, v);
    out += v * c;
  }
  return out;
}

PlanePoly QuantumPlane::iota(const PlanePoly& p) const {
  PlanePoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> w = m.word();
    std::reverse(w.begin(), w.end());
    for (int& k : w) k = -k;
    out += normalize(w) * c;
  }
  return out;
}

PlanePoly QuantumPlane::casimir() const {
  PlanePoly c = normalize({0, 0}) * (Scalar(1) / (Scalar(1) + Scalar::q(1)));
  for (int i = 1; i <= n_; ++i) c += normalize({i, -i}) * Scalar::q(i - 1);
  return c;
}

std::vector<QuantumPlane::Relation> QuantumPlane::relations() const {
  std::vector<Relation> out;
  for (int i = -n_; i <= n_; ++i)
    for (int j = -n_; j < i; ++j) {
      if (i == -j) continue;
      out.push_back({{i, j}, {{{j, i}, Scalar::q(-1)}}});
    }
  out.push_back({{1, -1}, {{{-1, 1}, Scalar(1)}, {{0, 0}, Scalar::q(1) - Scalar(1)}}});
  for (int j = 2; j <= n_; ++j)
    out.push_back({{j, -j}, {{{-j, j}, Scalar(1)}, {{j - 1, -j + 1}, Scalar::q(1)}, {{-j + 1, j - 1}, -Scalar::q(-1)}}});
  return out;
}

std::vector<PlaneMono> QuantumPlane::monomials(int m) const {
  std::vector<PlaneMono> out;
  PlaneMono cur;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n_) {
      cur.a[static_cast<std::size_t>(i + kMaxRank)] = static_cast<std::uint8_t>(left);
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur.a[static_cast<std::size_t>(i + kMaxRank)] = static_cast<std::uint8_t>(x);
      rec(i + 1, left - x);
    }
  };
  rec(-n_, m);
  return out;
}

} // namespace qsphere
