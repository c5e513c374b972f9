#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace suig2 {

// Exact rational number. Always stored in reduced form with positive
// denominator. All coordinate arithmetic in this project goes through this
// type; there is no floating point anywhere in the core.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return add_signed(a, b, 1);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return add_signed(a, b, -1);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    // operands are reduced, so crossing out gcd pairs leaves a reduced result
    long long g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
    long long g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
    return from_reduced((__int128)(a.num_ / g1) * (b.num_ / g2),
                        (__int128)(a.den_ / g2) * (b.den_ / g1));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return make_checked((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    __int128 l = (__int128)a.num_ * b.den_;
    __int128 r = (__int128)b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rat abs() const { return num_ < 0 ? -*this : *this; }
  bool is_integer() const { return den_ == 1; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Fixed-point decimal expansion, used only for SVG output. Trailing zeros
  // trimmed; exactness is not required there, determinism is.
  std::string decimal(int digits = 6) const {
    long long ip = num_ / den_;
    long long rem = num_ % den_;
    bool neg = false;
    if (rem < 0) {
      neg = num_ < 0;
      rem = -rem;
      if (ip == 0 && neg) return "-" + Rat(-num_, den_).decimal(digits);
    } else if (ip < 0) {
      return "-" + Rat(-num_, den_).decimal(digits);
    }
    std::string frac;
    for (int i = 0; i < digits && rem != 0; ++i) {
      rem *= 10;
      frac += char('0' + rem / den_);
      rem %= den_;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string s = std::to_string(ip);
    if (!frac.empty()) s += "." + frac;
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  // Sum of reduced operands with at most one 64-bit gcd: common prime
  // factors of the unreduced numerator and denominator all divide g1.
  static Rat add_signed(const Rat& a, const Rat& b, long long sgn) {
    long long g1 = std::gcd(a.den_, b.den_);
    if (g1 == 1)
      return from_reduced(
          (__int128)a.num_ * b.den_ + sgn * (__int128)b.num_ * a.den_,
          (__int128)a.den_ * b.den_);
    long long ad = a.den_ / g1, bd = b.den_ / g1;
    __int128 t = (__int128)a.num_ * bd + sgn * (__int128)b.num_ * ad;
    long long r;
    if (t >= INT64_MIN && t <= INT64_MAX)
      r = (long long)t % g1;
    else
      r = (long long)(t % g1);
    long long h = std::gcd(r < 0 ? -r : r, g1);
    return from_reduced(t / h, (__int128)(a.den_ / h) * bd);
  }
  static Rat make_checked(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return from_reduced(n, d);
  }
  static Rat from_reduced(__int128 n, __int128 d) {
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("Rat: overflow");
    Rat r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_;
  long long den_;
};

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace suig2
