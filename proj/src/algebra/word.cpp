#include "algebra/word.hpp"

#include "errors.hpp"

namespace qsphere {

Letter Letter::k(const Weight& mu) {
  Letter l;
  for (int i = 0; i < kMaxRank; ++i) l.mu[i] = static_cast<std::int8_t>(mu.c[i]);
  return l;
}

Weight Letter::k_weight() const {
  Weight w;
  for (int i = 0; i < kMaxRank; ++i) w.c[i] = mu[i];
  return w;
}

Weight Letter::weight() const {
  switch (kind) {
  case Kind::E: return simple_root(index);
  case Kind::F: return -simple_root(index);
  default: return {};
  }
}

Weight weight_of(const Word& w) {
  Weight s;
  for (const auto& l : w) s += l.weight();
  return s;
}

std::string word_to_string(const Word& w, int rank) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " ";
    switch (l.kind) {
    case Letter::Kind::E: s += "e" + std::to_string(l.index); break;
    case Letter::Kind::F: s += "f" + std::to_string(l.index); break;
    case Letter::Kind::K: s += "K" + l.k_weight().to_string(rank); break;
    }
  }
  return s;
}

namespace {

void merge_k(Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (l.is_k() && !out.empty() && out.back().is_k()) {
      Weight m = out.back().k_weight() + l.k_weight();
      out.back() = Letter::k(m);
    } else {
      out.push_back(l);
    }
    if (!out.empty() && out.back().is_k() && out.back().k_weight().is_zero()) out.pop_back();
  }
  w = std::move(out);
}

} // namespace

AlgElt::AlgElt(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Word{}, c);
}

AlgElt AlgElt::letter(const Letter& l) { return word(Word{l}); }

AlgElt AlgElt::word(const Word& w, const Scalar& c) {
  AlgElt a;
  a.add_term(w, c);
  return a;
}

void AlgElt::add_term(Word w, const Scalar& c) {
  if (c.is_zero()) return;
  merge_k(w);
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgElt AlgElt::operator-() const {
  AlgElt r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

AlgElt& AlgElt::operator+=(const AlgElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgElt& AlgElt::operator-=(const AlgElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AlgElt& AlgElt::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

AlgElt operator*(const AlgElt& a, const AlgElt& b) {
  AlgElt r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(std::move(w), ca * cb);
    }
  }
  return r;
}

AlgElt AlgElt::pow(int k) const {
  if (k < 0) throw UsageError("negative power of an algebra element");
  AlgElt r(1);
  for (int j = 0; j < k; ++j) r = r * *this;
  return r;
}

AlgElt AlgElt::map_coefficients(const SpecMode& mode) const {
  AlgElt r;
  for (const auto& [w, c] : terms_) r.add_term(w, specialize(c, mode));
  return r;
}

bool AlgElt::is_homogeneous() const {
  if (terms_.empty()) return true;
  Weight w0 = weight_of(terms_.begin()->first);
  for (const auto& [w, c] : terms_)
    if (weight_of(w) != w0) return false;
  return true;
}

int AlgElt::max_length() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.size());
  return static_cast<int>(m);
}

std::string AlgElt::to_string(int rank) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + " * " + word_to_string(w, rank);
  }
  return s;
}

AlgElt qbracket(const AlgElt& a, const AlgElt& b, const Scalar& c) { return a * b - c * (b * a); }

AlgElt root_vector(RootKind kind, int i, int rank) {
  check_rank(rank);
  const Scalar q = Scalar::q(1), qbar = Scalar::q(-1);
  switch (kind) {
  case RootKind::FEps: {
    check_index(i, rank);
    AlgElt x = f(1);
    for (int j = 2; j <= i; ++j) x = qbracket(x, f(j), qbar);
    return x;
  }
  case RootKind::EEps: {
    check_index(i, rank);
    AlgElt x = e(i);
    for (int j = i - 1; j >= 1; --j) x = qbracket(x, e(j), q);
    return x;
  }
  case RootKind::ETildeEps: {
    check_index(i, rank);
    AlgElt x = e(1);
    for (int j = 2; j <= i; ++j) x = qbracket(e(j), x, qbar);
    return x;
  }
  case RootKind::EDelta:
  case RootKind::FDelta: {
    if (rank < 2) throw UsageError("delta root vectors need rank >= 2");
    auto g = kind == RootKind::EDelta ? e : f;
    return qbracket(g(1), qbracket(g(1), g(2), q), qbar);
  }
  }
  throw Error("unknown root vector kind");
}

AlgElt omega(const AlgElt& x) {
  AlgElt r;
  for (const auto& [w, c] : x.terms()) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) {
      if (l.is_e()) l.kind = Letter::Kind::F;
      else if (l.is_f()) l.kind = Letter::Kind::E;
    }
    r.add_term(std::move(out), c);
  }
  return r;
}

namespace {

// Image of a single letter under gamma or gamma^-1.
AlgElt antipode_letter(const Letter& l, AntipodeDir dir) {
  if (l.is_k()) return K(-l.k_weight());
  Weight a = simple_root(l.index);
  Word w;
  bool gamma = dir == AntipodeDir::Gamma;
  if (l.is_e()) {
    // gamma(e) = -e K^-1, gamma^-1(e) = -K^-1 e
    w = gamma ? Word{l, Letter::k(-a)} : Word{Letter::k(-a), l};
  } else {
    // gamma(f) = -K f, gamma^-1(f) = -f K
    w = gamma ? Word{Letter::k(a), l} : Word{l, Letter::k(a)};
  }
  return AlgElt::word(w, Scalar(-1));
}

} // namespace

AlgElt antipode(const AlgElt& x, AntipodeDir dir) {
  AlgElt r;
  for (const auto& [w, c] : x.terms()) {
    AlgElt t(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = t * antipode_letter(*it, dir);
    r += t;
  }
  return r;
}

AlgElt k_right(const AlgElt& x) {
  AlgElt r;
  for (const auto& [w, c] : x.terms()) {
    Weight acc;
    int vpow = 0;
    Word out;
    for (const auto& l : w) {
      if (l.is_k()) {
        acc += l.k_weight();
      } else {
        vpow += 2 * inner(acc, l.weight());
        out.push_back(l);
      }
    }
    if (!acc.is_zero()) out.push_back(Letter::k(acc));
    r.add_term(std::move(out), c * Scalar::v(vpow));
  }
  return r;
}

AlgElt chev_twist(const AlgElt& x) {
  AlgElt r;
  for (const auto& [w, c] : x.terms()) {
    Word out = w;
    int sign = 1;
    for (auto& l : out) {
      if (l.is_e()) {
        l.kind = Letter::Kind::F;
        sign = -sign;
      } else if (l.is_f()) {
        l.kind = Letter::Kind::E;
        sign = -sign;
      } else {
        l = Letter::k(-l.k_weight());
      }
    }
    r.add_term(std::move(out), sign > 0 ? c : -c);
  }
  return r;
}

} // namespace qsphere
