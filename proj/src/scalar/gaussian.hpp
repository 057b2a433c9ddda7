#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <utility>

namespace qsphere {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Element a + b*i of Z[i].
class GaussInt {
public:
  GaussInt() = default;
  GaussInt(long long re) : re_(re) {} // NOLINT(google-explicit-constructor)
  GaussInt(Int re, Int im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussInt i() { return GaussInt(0, 1); }

  const Int& re() const { return re_; }
  const Int& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_ == 1 && im_.is_zero(); }
  bool is_unit() const { return norm() == 1; }

  Int norm() const { return re_ * re_ + im_ * im_; }
  GaussInt conj() const { return {re_, -im_}; }

  GaussInt operator-() const { return {-re_, -im_}; }
  GaussInt& operator+=(const GaussInt& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussInt& operator*=(const GaussInt& o) {
    if (o.im_.is_zero()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Int r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }

  friend bool operator==(const GaussInt&, const GaussInt&) = default;
  friend std::strong_ordering operator<=>(const GaussInt& a, const GaussInt& b) {
    if (auto c = a.re_.compare(b.re_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    auto c = a.im_.compare(b.im_);
    if (c == 0) return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  // Exact quotient; the caller guarantees divisibility.
  GaussInt exact_div(const GaussInt& d) const;
  // Quotient rounded to the nearest lattice point (Euclidean division).
  std::pair<GaussInt, GaussInt> divmod(const GaussInt& d) const;
  bool divides(const GaussInt& x) const;

  // The unit u in {1, i, -1, -i} with u*x in the canonical quadrant (re > 0, im >= 0).
  GaussInt normalizing_unit() const;
  GaussInt normalized() const { return *this * normalizing_unit(); }

  std::string to_string() const;

private:
  Int re_{0};
  Int im_{0};
};

GaussInt gcd(GaussInt a, GaussInt b);

} // namespace qsphere
