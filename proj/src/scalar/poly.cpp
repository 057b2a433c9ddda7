#include "scalar/poly.hpp"

#include "errors.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace qsphere {

Monomial& Monomial::operator*=(const Monomial& o) {
  for (int k = 0; k < kNumVars; ++k) {
    int e = exp[k] + o.exp[k];
    if (e > std::numeric_limits<std::int16_t>::max() || e < std::numeric_limits<std::int16_t>::min())
      throw Error("monomial exponent overflow");
    exp[k] = static_cast<std::int16_t>(e);
  }
  return *this;
}

Monomial Monomial::inverse() const {
  Monomial m;
  for (int k = 0; k < kNumVars; ++k) m.exp[k] = static_cast<std::int16_t>(-exp[k]);
  return m;
}

Monomial Monomial::meet(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int k = 0; k < kNumVars; ++k) m.exp[k] = std::min(a.exp[k], b.exp[k]);
  return m;
}

namespace {

bool term_before(const Term& a, const Term& b) { return a.mono > b.mono; }

// Merge two descending term lists; b's coefficients are multiplied by `sign`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono > b[j].mono) {
      out.push_back(a[i++]);
    } else if (b[j].mono > a[i].mono) {
      out.push_back(negate_b ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      GaussInt c = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(negate_b ? Term{b[j].mono, -b[j].coeff} : b[j]);
  return out;
}

} // namespace

Poly::Poly(const GaussInt& c) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

Poly Poly::monomial(const GaussInt& c, const Monomial& m) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

GaussInt Poly::constant_value() const {
  if (terms_.empty()) return GaussInt(0);
  if (!is_constant()) throw Error("Poly::constant_value on a non-constant polynomial");
  return terms_[0].coeff;
}

bool Poly::involves(int var) const {
  for (const auto& t : terms_)
    if (t.mono.exp[var] != 0) return true;
  return false;
}

bool Poly::only_v() const {
  for (int k = 1; k < kNumVars; ++k)
    if (involves(k)) return false;
  return true;
}

int Poly::max_degree(int var) const {
  int d = std::numeric_limits<int>::min();
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.exp[var]);
  return d;
}

int Poly::min_degree(int var) const {
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min<int>(d, t.mono.exp[var]);
  return d;
}

Monomial Poly::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].mono;
  for (const auto& t : terms_) m = Monomial::meet(m, t.mono);
  return m;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return b.shifted(a.terms_[0].mono).scaled(a.terms_[0].coeff);
  if (b.is_monomial()) return a.shifted(b.terms_[0].mono).scaled(b.terms_[0].coeff);
  // Accumulate row by row: each row a_i * b is already sorted.
  Poly acc;
  for (const auto& t : a.terms_) acc.add_scaled_shifted(b, t.coeff, t.mono);
  return acc;
}

Poly Poly::scaled(const GaussInt& c) const {
  if (c.is_zero()) return {};
  if (c.is_one()) return *this;
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::shifted(const Monomial& m) const {
  if (m.is_one()) return *this;
  Poly p = *this;
  for (auto& t : p.terms_) t.mono *= m;
  return p;
}

void Poly::add_scaled_shifted(const Poly& src, const GaussInt& c, const Monomial& m) {
  if (src.is_zero() || c.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + src.terms_.size());
  std::size_t i = 0, j = 0;
  auto scaled_term = [&](const Term& t) { return Term{t.mono * m, t.coeff * c}; };
  while (i < terms_.size() && j < src.terms_.size()) {
    Monomial mj = src.terms_[j].mono * m;
    if (terms_[i].mono > mj) {
      out.push_back(std::move(terms_[i++]));
    } else if (mj > terms_[i].mono) {
      out.push_back(scaled_term(src.terms_[j++]));
    } else {
      GaussInt s = terms_[i].coeff + src.terms_[j].coeff * c;
      if (!s.is_zero()) out.push_back({mj, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < src.terms_.size(); ++j) out.push_back(scaled_term(src.terms_[j]));
  terms_ = std::move(out);
}

GaussInt Poly::content() const {
  GaussInt g(0);
  for (const auto& t : terms_) {
    g = gcd(g, t.coeff);
    if (g.is_one()) break;
  }
  return g;
}

Poly Poly::pow(unsigned k) const {
  Poly result(1);
  Poly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[kNumVars] = {"v", "L1", "L2", "L3", "L4"};
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    GaussInt c = t.coeff;
    bool negative = (c.im().is_zero() && c.re() < 0) || (c.re().is_zero() && c.im() < 0);
    if (negative) c = -c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (int k = 0; k < kNumVars; ++k) {
      if (t.mono.exp[k] == 0) continue;
      if (!factors.empty()) factors += " ";
      factors += names[k];
      factors += "^" + std::to_string(t.mono.exp[k]);
    }
    if (factors.empty()) {
      s += c.to_string();
    } else {
      if (!c.is_one()) s += c.to_string() + " ";
      s += factors;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace polyalg {
namespace {

bool divides_mono(const Monomial& d, const Monomial& m) {
  for (int k = 0; k < kNumVars; ++k)
    if (d.exp[k] > m.exp[k]) return false;
  return true;
}

Monomial mono_quotient(const Monomial& m, const Monomial& d) {
  Monomial q;
  for (int k = 0; k < kNumVars; ++k) q.exp[k] = static_cast<std::int16_t>(m.exp[k] - d.exp[k]);
  return q;
}

// Coefficients of p viewed as a univariate polynomial in `var`; the map key is
// the degree and the values have `var` removed.
std::map<int, Poly> split(const Poly& p, int var) {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) {
    Term u = t;
    int d = u.mono.exp[var];
    u.mono.exp[var] = 0;
    buckets[d].push_back(std::move(u));
  }
  std::map<int, Poly> out;
  for (auto& [d, ts] : buckets) out.emplace(d, Poly::from_terms(std::move(ts)));
  return out;
}

Poly leading_coeff(const Poly& p, int var, int& degree) {
  degree = p.max_degree(var);
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    if (t.mono.exp[var] != degree) continue;
    Term u = t;
    u.mono.exp[var] = 0;
    ts.push_back(std::move(u));
  }
  return Poly::from_terms(std::move(ts));
}

int highest_var(const Poly& a, const Poly& b) {
  for (int k = kNumVars - 1; k >= 0; --k)
    if (a.involves(k) || b.involves(k)) return k;
  return -1;
}

// --- modular images -------------------------------------------------------
// Arithmetic in F_p with p = 10^9 + 9 = 1 (mod 4), where i maps to a square
// root of -1. Images bound the degree of a gcd from above.

constexpr std::uint64_t kPrime = 1000000009ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::uint64_t sqrt_minus_one() {
  static const std::uint64_t root = [] {
    for (std::uint64_t g = 2;; ++g) {
      std::uint64_t r = powmod(g, (kPrime - 1) / 4);
      if (mulmod(r, r) == kPrime - 1) return r;
    }
  }();
  return root;
}

std::uint64_t reduce(const Int& x) {
  Int m = x % Int(kPrime);
  if (m < 0) m += Int(kPrime);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t image(const GaussInt& c) {
  return (reduce(c.re()) + mulmod(reduce(c.im()), sqrt_minus_one())) % kPrime;
}

using ModPoly = std::vector<std::uint64_t>; // dense, index = degree, trimmed

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Image of p in F_p[x_var] after substituting `point` for the other variables.
ModPoly evaluate_except(const Poly& p, int var, const std::array<std::uint64_t, kNumVars>& point) {
  ModPoly out(static_cast<std::size_t>(std::max(0, p.max_degree(var))) + 1, 0);
  for (const auto& t : p.terms()) {
    std::uint64_t c = image(t.coeff);
    for (int k = 0; k < kNumVars; ++k)
      if (k != var && t.mono.exp[k] != 0) c = mulmod(c, powmod(point[k], static_cast<std::uint64_t>(t.mono.exp[k])));
    auto& slot = out[static_cast<std::size_t>(t.mono.exp[var])];
    slot = (slot + c) % kPrime;
  }
  trim(out);
  return out;
}

int modular_gcd_degree(ModPoly a, ModPoly b) {
  while (!b.empty()) {
    // a := a mod b
    std::uint64_t inv = invmod(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t f = mulmod(a.back(), inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = (a[shift + k] + kPrime - mulmod(f, b[k])) % kPrime;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// Upper bound on deg_var gcd(a, b), or -1 when no lucky point was found.
int gcd_degree_bound(const Poly& a, const Poly& b, int var) {
  std::uint64_t seed = 0x9E3779B97F4A7C15ULL;
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::array<std::uint64_t, kNumVars> point{};
    for (auto& x : point) {
      seed ^= seed << 13;
      seed ^= seed >> 7;
      seed ^= seed << 17;
      x = 2 + seed % (kPrime - 3);
    }
    ModPoly ia = evaluate_except(a, var, point);
    ModPoly ib = evaluate_except(b, var, point);
    if (static_cast<int>(ia.size()) - 1 != a.max_degree(var) || static_cast<int>(ib.size()) - 1 != b.max_degree(var))
      continue; // leading coefficient vanished
    return modular_gcd_degree(std::move(ia), std::move(ib));
  }
  return -1;
}

Poly normalize_unit(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading().coeff.normalizing_unit());
}

Poly content_in(const Poly& p, int var) {
  Poly g;
  for (auto& [d, c] : split(p, var)) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly prem(Poly a, const Poly& b, int var) {
  int db = 0;
  Poly lcb = leading_coeff(b, var, db);
  while (!a.is_zero()) {
    int da = a.max_degree(var);
    if (da < db) break;
    int unused = 0;
    Poly lca = leading_coeff(a, var, unused);
    Monomial shift;
    shift.exp[var] = static_cast<std::int16_t>(da - db);
    a = lcb * a - (lca * b).shifted(shift);
  }
  return a;
}

} // namespace

Poly exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (b.is_one()) return a;
  if (b.is_constant()) {
    GaussInt c = b.constant_value();
    std::vector<Term> ts;
    ts.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!c.divides(t.coeff)) throw Error("exact_divide: coefficient not divisible");
      ts.push_back({t.mono, t.coeff.exact_div(c)});
    }
    return Poly::from_terms(std::move(ts));
  }
  Poly rem = a;
  std::vector<Term> quot;
  const Term& lb = b.leading();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    if (!divides_mono(lb.mono, lr.mono) || !lb.coeff.divides(lr.coeff))
      throw Error("exact_divide: polynomial not divisible");
    Term q{mono_quotient(lr.mono, lb.mono), lr.coeff.exact_div(lb.coeff)};
    rem.add_scaled_shifted(b, -q.coeff, q.mono);
    quot.push_back(std::move(q));
  }
  return Poly::from_terms(std::move(quot));
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  if (a.is_constant()) return Poly(gcd(a.constant_value(), b.content()));
  if (b.is_constant()) return Poly(gcd(b.constant_value(), a.content()));
  if (a == b) return normalize_unit(a);

  Monomial ma = a.min_exponents(), mb = b.min_exponents();
  if (!ma.is_one() || !mb.is_one()) {
    Poly g = gcd(a.shifted(ma.inverse()), b.shifted(mb.inverse()));
    return g.shifted(Monomial::meet(ma, mb));
  }

  int var = highest_var(a, b);
  if (!a.involves(var)) return gcd(a, content_in(b, var));
  if (!b.involves(var)) return gcd(content_in(a, var), b);

  // A variable in which the gcd has degree 0 can be eliminated: the gcd then
  // divides every coefficient with respect to it.
  int best_var = -1, best_bound = std::numeric_limits<int>::max();
  for (int k = 0; k < kNumVars; ++k) {
    if (!a.involves(k) || !b.involves(k)) continue;
    int bound = gcd_degree_bound(a, b, k);
    if (bound == 0) return gcd(content_in(a, k), content_in(b, k));
    if (bound > 0 && bound < best_bound) {
      best_bound = bound;
      best_var = k;
    }
  }
  if (best_var >= 0) var = best_var;

  Poly ca = content_in(a, var);
  Poly cb = content_in(b, var);
  Poly g_content = gcd(ca, cb);
  Poly pa = exact_divide(a, ca);
  Poly pb = exact_divide(b, cb);
  if (pa.max_degree(var) < pb.max_degree(var)) std::swap(pa, pb);

  while (true) {
    Poly r = prem(pa, pb, var);
    if (r.is_zero()) break;
    if (!r.involves(var)) {
      pb = Poly(1);
      break;
    }
    pa = std::move(pb);
    pb = exact_divide(r, content_in(r, var));
  }
  Poly prim = exact_divide(pb, content_in(pb, var));
  return normalize_unit(g_content * prim);
}

} // namespace polyalg
} // namespace qsphere
