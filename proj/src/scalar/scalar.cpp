#include "scalar/scalar.hpp"

#include "errors.hpp"

#include <map>

namespace qsphere {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

Scalar Scalar::rational(long long num, long long den) { return Scalar(Poly(num), Poly(den)); }

void Scalar::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero("Scalar with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Monomial md = den_.min_exponents().inverse();
  if (!md.is_one()) {
    den_ = den_.shifted(md);
    num_ = num_.shifted(md);
  }
  if (den_.is_constant()) {
    GaussInt d = den_.constant_value();
    GaussInt g = gcd(d, num_.content());
    if (!g.is_one()) {
      num_ = polyalg::exact_divide(num_, Poly(g));
      d = d.exact_div(g);
    }
    GaussInt u = d.normalizing_unit();
    den_ = Poly(d * u);
    if (!u.is_one()) num_ = num_.scaled(u);
    return;
  }
  Monomial mn = num_.min_exponents();
  Poly np = num_.shifted(mn.inverse());
  Poly g = polyalg::gcd(np, den_);
  if (!g.is_one()) {
    np = polyalg::exact_divide(np, g);
    den_ = polyalg::exact_divide(den_, g);
  }
  GaussInt u = den_.leading().coeff.normalizing_unit();
  num_ = np.shifted(mn);
  if (!u.is_one()) {
    num_ = num_.scaled(u);
    den_ = den_.scaled(u);
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

// gcd with a Laurent numerator; denominators never carry monomial factors.
Poly gcd_laurent(const Poly& n, const Poly& d) {
  return polyalg::gcd(n.shifted(n.min_exponents().inverse()), d);
}

Poly divide_laurent(const Poly& n, const Poly& d) {
  if (d.is_one()) return n;
  Monomial m = n.min_exponents();
  return polyalg::exact_divide(n.shifted(m.inverse()), d).shifted(m);
}

} // namespace

void Scalar::normalize_unit() {
  GaussInt u = den_.leading().coeff.normalizing_unit();
  if (!u.is_one()) {
    num_ = num_.scaled(u);
    den_ = den_.scaled(u);
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_one()) {
      if (num_.is_zero()) den_ = Poly(1);
      return *this;
    }
    canonicalize();
    return *this;
  }
  // Operands are reduced, so only the common part g of the denominators can
  // cancel against the new numerator.
  Poly g = polyalg::gcd(den_, o.den_);
  Poly d1 = polyalg::exact_divide(den_, g);
  Poly d2 = polyalg::exact_divide(o.den_, g);
  num_ = num_ * d2 + o.num_ * d1;
  if (num_.is_zero()) {
    den_ = Poly(1);
    return *this;
  }
  Poly h = g.is_one() ? g : gcd_laurent(num_, g);
  if (!h.is_one()) {
    num_ = divide_laurent(num_, h);
    den_ = d1 * polyalg::exact_divide(o.den_, h);
  } else {
    den_ = d1 * o.den_;
  }
  normalize_unit();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Poly g1 = gcd_laurent(num_, o.den_);
  Poly g2 = gcd_laurent(o.num_, den_);
  Poly n1 = divide_laurent(num_, g1);
  Poly n2 = divide_laurent(o.num_, g2);
  Poly e1 = g2.is_one() ? den_ : polyalg::exact_divide(den_, g2);
  Poly e2 = g1.is_one() ? o.den_ : polyalg::exact_divide(o.den_, g1);
  num_ = n1 * n2;
  den_ = e1 * e2;
  normalize_unit();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero Scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1);
  Scalar base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.is_zero() || num_.is_monomial() ? num_.to_string() : "(" + num_.to_string() + ")";
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------

Scalar qnum(HalfInt z) { return qnum(z, Scalar(1)); }

Scalar qnum(HalfInt z, const Scalar& shift) {
  Scalar up = shift * Scalar::v(z.twice);
  Scalar down = shift.inverse() * Scalar::v(-z.twice);
  return (up - down) / (Scalar::v(2) - Scalar::v(-2));
}

Scalar qfact(int m) {
  if (m < 0) throw UsageError("qfact of a negative integer");
  Scalar r(1);
  for (int l = 1; l <= m; ++l) r *= qnum(HalfInt::integer(l));
  return r;
}

// ---------------------------------------------------------------------------

SpecMode SpecMode::lambda(int sigma) {
  if (sigma != 1 && sigma != -1) throw UsageError("branch sign must be +1 or -1");
  return SpecMode(LambdaMode{sigma});
}

SpecMode SpecMode::numeric(const Scalar& v0, int sigma, int root_order_bound) {
  if (sigma != 1 && sigma != -1) throw UsageError("branch sign must be +1 or -1");
  if (!v0.is_constant()) throw UsageError("numeric point must be a Gaussian rational");
  if (v0.is_zero()) throw UsageError("numeric point v0 must be nonzero");
  Scalar p = v0;
  for (int k = 1; k <= root_order_bound; ++k) {
    if (p.is_one()) throw UsageError("numeric point v0 is a root of unity of order " + std::to_string(k));
    p *= v0;
  }
  return SpecMode(NumericMode{v0, sigma});
}

int SpecMode::sigma() const {
  if (auto* l = std::get_if<LambdaMode>(&mode_)) return l->sigma;
  if (auto* n = std::get_if<NumericMode>(&mode_)) return n->sigma;
  return 1;
}

const Scalar& SpecMode::v0() const {
  if (auto* n = std::get_if<NumericMode>(&mode_)) return n->v0;
  throw Error("SpecMode::v0 requested outside numeric mode");
}

std::string SpecMode::name() const {
  if (is_generic()) return "generic";
  std::string s = sigma() > 0 ? "+1" : "-1";
  if (is_lambda()) return "specialized(sigma=" + s + ")";
  return "numeric(v0=" + v0().to_string() + ",sigma=" + s + ")";
}

Poly specialize_lambda(const Poly& p, int sigma) {
  // (sigma*i)^k for k mod 4
  const GaussInt unit = sigma > 0 ? GaussInt::i() : -GaussInt::i();
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    int total = 0;
    Monomial m = t.mono;
    for (int k = 1; k < kNumVars; ++k) {
      total += m.exp[k];
      m.exp[k] = 0;
    }
    m.exp[0] = static_cast<std::int16_t>(m.exp[0] - total);
    GaussInt c = t.coeff;
    int r = ((total % 4) + 4) % 4;
    for (int k = 0; k < r; ++k) c *= unit;
    out.push_back({m, std::move(c)});
  }
  return Poly::from_terms(std::move(out));
}

namespace {

Scalar substitute_poly(const Poly& p, const Scalar& value) {
  std::map<int, Scalar> powers;
  auto power = [&](int k) -> const Scalar& {
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
    return it->second;
  };
  Scalar r;
  for (const auto& t : p.terms()) {
    for (int k = 1; k < kNumVars; ++k)
      if (t.mono.exp[k] != 0) throw Error("substitute_v: L symbols must be specialized first");
    r += Scalar(t.coeff) * power(t.mono.exp[0]);
  }
  return r;
}

} // namespace

Scalar substitute_v(const Scalar& s, const Scalar& value) {
  Scalar d = substitute_poly(s.den(), value);
  if (d.is_zero()) throw DivisionByZero("denominator vanishes at v = " + value.to_string());
  return substitute_poly(s.num(), value) / d;
}

Scalar specialize(const Scalar& s, const SpecMode& mode) {
  if (mode.is_generic()) return s;
  Poly n = specialize_lambda(s.num(), mode.sigma());
  Poly d = specialize_lambda(s.den(), mode.sigma());
  if (d.is_zero()) throw DivisionByZero("denominator vanishes under the weight specialization");
  Scalar lam(std::move(n), std::move(d));
  if (mode.is_lambda()) return lam;
  return substitute_v(lam, mode.v0());
}

} // namespace qsphere
