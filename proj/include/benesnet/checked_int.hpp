#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <ostream>

namespace benesnet {

// 128-bit signed integer with overflow detection on every operation.
// Descriptor values grow like 2^{3n} n^3, so 64 bits is not enough headroom
// at the dimensions the tooling sweeps; wrapping is never acceptable.
class Int128 {
 public:
  constexpr Int128() = default;
  constexpr Int128(long long x) : v_(x) {}            // NOLINT: implicit on purpose
  constexpr Int128(int x) : v_(x) {}                  // NOLINT
  constexpr Int128(unsigned long long x) : v_(static_cast<__int128>(x)) {}  // NOLINT

  static constexpr Int128 from_raw(__int128 v) {
    Int128 r;
    r.v_ = v;
    return r;
  }
  constexpr __int128 raw() const { return v_; }

  friend Int128 operator+(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a.v_, b.v_, &r.v_)) throw_overflow("+");
    return r;
  }
  friend Int128 operator-(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r.v_)) throw_overflow("-");
    return r;
  }
  friend Int128 operator*(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r.v_)) throw_overflow("*");
    return r;
  }
  friend Int128 operator/(Int128 a, Int128 b) {
    if (b.v_ == 0) throw std::domain_error("Int128: division by zero");
    if (a.v_ == min_raw() && b.v_ == -1) throw_overflow("/");
    return from_raw(a.v_ / b.v_);
  }
  friend Int128 operator%(Int128 a, Int128 b) {
    if (b.v_ == 0) throw std::domain_error("Int128: division by zero");
    if (a.v_ == min_raw() && b.v_ == -1) throw_overflow("%");
    return from_raw(a.v_ % b.v_);
  }
  Int128 operator-() const {
    if (v_ == min_raw()) throw_overflow("negate");
    return from_raw(-v_);
  }

  Int128& operator+=(Int128 b) { return *this = *this + b; }
  Int128& operator-=(Int128 b) { return *this = *this - b; }
  Int128& operator*=(Int128 b) { return *this = *this * b; }

  friend bool operator==(Int128 a, Int128 b) { return a.v_ == b.v_; }
  friend bool operator!=(Int128 a, Int128 b) { return a.v_ != b.v_; }
  friend bool operator<(Int128 a, Int128 b) { return a.v_ < b.v_; }
  friend bool operator<=(Int128 a, Int128 b) { return a.v_ <= b.v_; }
  friend bool operator>(Int128 a, Int128 b) { return a.v_ > b.v_; }
  friend bool operator>=(Int128 a, Int128 b) { return a.v_ >= b.v_; }

  Int128 abs() const { return v_ < 0 ? -*this : *this; }

  bool is_zero() const { return v_ == 0; }
  bool is_negative() const { return v_ < 0; }

  // Exact conversion; throws if the value does not fit.
  long long to_int64() const {
    if (v_ > static_cast<__int128>(INT64_MAX) || v_ < static_cast<__int128>(INT64_MIN))
      throw std::overflow_error("Int128: value does not fit in 64 bits");
    return static_cast<long long>(v_);
  }

  std::string str() const {
    if (v_ == 0) return "0";
    unsigned __int128 mag =
        v_ < 0 ? static_cast<unsigned __int128>(-(v_ + 1)) + 1 : static_cast<unsigned __int128>(v_);
    char buf[48];
    int pos = 48;
    while (mag > 0) {
      buf[--pos] = static_cast<char>('0' + static_cast<int>(mag % 10));
      mag /= 10;
    }
    std::string s(buf + pos, 48 - pos);
    return v_ < 0 ? "-" + s : s;
  }

  friend std::ostream& operator<<(std::ostream& os, Int128 x) { return os << x.str(); }

  static Int128 pow2(unsigned e) {
    if (e >= 127) throw std::overflow_error("Int128: 2^e overflow");
    return from_raw(static_cast<__int128>(1) << e);
  }

 private:
  static constexpr __int128 min_raw() { return static_cast<__int128>(1) << 127; }
  [[noreturn]] static void throw_overflow(const char* op) {
    throw std::overflow_error(std::string("Int128: overflow in operator") + op);
  }

  __int128 v_ = 0;
};

inline Int128 gcd(Int128 a, Int128 b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace benesnet
