#include "scalar/gaussian.hpp"

#include "errors.hpp"

namespace qsphere {
namespace {

// Round num/den to the nearest integer (den > 0), ties towards +infinity.
Int round_div(const Int& num, const Int& den) {
  Int twice = 2 * num + den;
  Int q = twice / (2 * den);
  if (twice < 0 && q * 2 * den != twice) q -= 1; // floor for negatives
  return q;
}

} // namespace

GaussInt GaussInt::exact_div(const GaussInt& d) const {
  if (d.is_zero()) throw DivisionByZero("Gaussian integer division by zero");
  if (d.im_.is_zero()) {
    if (d.re_ == 1) return *this;
    return {re_ / d.re_, im_ / d.re_};
  }
  GaussInt t = *this * d.conj();
  Int n = d.norm();
  return {t.re_ / n, t.im_ / n};
}

std::pair<GaussInt, GaussInt> GaussInt::divmod(const GaussInt& d) const {
  if (d.is_zero()) throw DivisionByZero("Gaussian integer division by zero");
  GaussInt t = *this * d.conj();
  Int n = d.norm();
  GaussInt q(round_div(t.re_, n), round_div(t.im_, n));
  GaussInt r = *this - q * d;
  return {q, r};
}

bool GaussInt::divides(const GaussInt& x) const {
  if (is_zero()) return x.is_zero();
  GaussInt t = x * conj();
  Int n = norm();
  return (t.re_ % n).is_zero() && (t.im_ % n).is_zero();
}

GaussInt GaussInt::normalizing_unit() const {
  // quadrant: re > 0, im >= 0
  if (re_ > 0 && im_ >= 0) return GaussInt(1);
  if (re_ <= 0 && im_ > 0) return GaussInt(0, -1); // multiply by -i
  if (re_ < 0 && im_ <= 0) return GaussInt(-1);
  if (re_ >= 0 && im_ < 0) return GaussInt(0, 1);
  return GaussInt(1); // zero
}

std::string GaussInt::to_string() const {
  if (im_.is_zero()) return re_.str();
  if (re_.is_zero()) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return im_.str() + "i";
  }
  std::string s = "(" + re_.str();
  if (im_ > 0) s += "+";
  if (im_ == 1) s += "i";
  else if (im_ == -1) s += "-i";
  else s += im_.str() + "i";
  return s + ")";
}

GaussInt gcd(GaussInt a, GaussInt b) {
  if (a.im().is_zero() && b.im().is_zero()) {
    Int g = boost::multiprecision::gcd(a.re(), b.re());
    return GaussInt(g < 0 ? Int(-g) : g, Int(0));
  }
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.normalized();
}

} // namespace qsphere
