#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace shapeslab {

// All lattice arithmetic runs on 64-bit integers with explicit overflow
// detection: enumeration counts fit comfortably, silent wraparound would not.
inline int64_t ck_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 add overflow");
  return r;
}

inline int64_t ck_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 sub overflow");
  return r;
}

inline int64_t ck_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 mul overflow");
  return r;
}

inline int64_t ck_neg(int64_t a) { return ck_sub(0, a); }

// Exact rational on checked int64, always normalized (den > 0, gcd = 1).
struct Rat {
  int64_t num = 0;
  int64_t den = 1;

  Rat() = default;
  Rat(int64_t n) : num(n), den(1) {}
  Rat(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) { num = ck_neg(num); den = ck_neg(den); }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(ck_add(ck_mul(a.num, b.den), ck_mul(b.num, a.den)), ck_mul(a.den, b.den));
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(ck_sub(ck_mul(a.num, b.den), ck_mul(b.num, a.den)), ck_mul(a.den, b.den));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(ck_mul(a.num, b.num), ck_mul(a.den, b.den));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("rational division by zero");
    return Rat(ck_mul(a.num, b.den), ck_mul(a.den, b.num));
  }
  Rat operator-() const { Rat r; r.num = ck_neg(num); r.den = den; return r; }
  Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
  Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
  Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
  Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return ck_mul(a.num, b.den) < ck_mul(b.num, a.den);
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
  bool is_integer() const { return den == 1; }
  double to_double() const { return double(num) / double(den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Rat abs(const Rat& r) { return r.num < 0 ? -r : r; }

// Parses "n" or "n/d".
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad rational: \"" + s + "\"");
  }
}

}  // namespace shapeslab
