#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "benesnet/checked_int.hpp"

namespace benesnet {

// Exact rational over checked 128-bit integers, always gcd-reduced with a
// positive denominator. Closed-form coefficients like 20096/27 make float
// evaluation a non-starter; everything stays exact until output.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int128 n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT
  Rational(int n) : num_(n), den_(1) {}  // NOLINT
  Rational(Int128 n, Int128 d) : num_(n), den_(d) { normalize(); }

  Int128 num() const { return num_; }
  Int128 den() const { return den_; }

  bool is_integer() const { return den_ == Int128(1); }

  // Throws unless the value is integral. Closed forms use this to assert
  // that fractional leading coefficients cancel.
  Int128 to_integer(const char* context = "rational") const {
    if (!is_integer())
      throw std::domain_error(std::string(context) + ": non-integer value " + str());
    return num_;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_.is_negative() ? -*this : *this; }

  // "p" for integers, "p/q" otherwise.
  std::string str() const {
    if (is_integer()) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  // Fixed-point decimal rendering, truncated toward zero.
  std::string decimal(unsigned digits) const {
    Int128 q = num_ / den_;
    Int128 r = (num_ % den_).abs();
    std::string s = (num_.is_negative() && q.is_zero()) ? "-" + q.str() : q.str();
    if (digits == 0) return s;
    s += '.';
    for (unsigned i = 0; i < digits; ++i) {
      r = r * Int128(10);
      Int128 d = r / den_;
      r = r % den_;
      s += d.str();
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.is_negative()) {
      num_ = -num_;
      den_ = -den_;
    }
    Int128 g = gcd(num_, den_);
    if (!g.is_zero() && g != Int128(1)) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    if (num_.is_zero()) den_ = Int128(1);
  }

  Int128 num_;
  Int128 den_;
};

}  // namespace benesnet
