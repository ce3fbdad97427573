#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "shapeslab/numeric.hpp"

namespace shapeslab {

// Element a + b*w of the triangular vertex lattice, where w = 1/2 + (sqrt3/2)i
// is a primitive 6th root of unity, so w^2 = w - 1.  The lattice is a ring
// (the ring of integers of Q(sqrt-3)) and its six units are +-1, +-w, +-w^2.
struct Eis {
  int64_t a = 0;
  int64_t b = 0;

  Eis() = default;
  Eis(int64_t a_, int64_t b_) : a(a_), b(b_) {}

  friend Eis operator+(Eis x, Eis y) { return {ck_add(x.a, y.a), ck_add(x.b, y.b)}; }
  friend Eis operator-(Eis x, Eis y) { return {ck_sub(x.a, y.a), ck_sub(x.b, y.b)}; }
  Eis operator-() const { return {ck_neg(a), ck_neg(b)}; }

  // (a1 + b1 w)(a2 + b2 w) = a1a2 - b1b2 + (a1b2 + a2b1 + b1b2) w
  friend Eis operator*(Eis x, Eis y) {
    return {ck_sub(ck_mul(x.a, y.a), ck_mul(x.b, y.b)),
            ck_add(ck_add(ck_mul(x.a, y.b), ck_mul(x.b, y.a)), ck_mul(x.b, y.b))};
  }

  friend bool operator==(Eis x, Eis y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(Eis x, Eis y) { return !(x == y); }
  friend bool operator<(Eis x, Eis y) {  // lexicographic, for use as a map key
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }

  bool is_zero() const { return a == 0 && b == 0; }
};

inline Eis conj(Eis x) { return {ck_add(x.a, x.b), ck_neg(x.b)}; }

inline int64_t norm(Eis x) {
  return ck_add(ck_add(ck_mul(x.a, x.a), ck_mul(x.a, x.b)), ck_mul(x.b, x.b));
}

inline std::complex<double> embed(Eis x) {
  return {double(x.a) + 0.5 * double(x.b), 0.8660254037844386467637 * double(x.b)};
}

// w * (a + b w) = -b + (a + b) w, a 60 degree rotation.
inline Eis mul_w(Eis x) { return {ck_neg(x.b), ck_add(x.a, x.b)}; }

inline Eis mul_w_pow(Eis x, int k) {
  k %= 6;
  if (k < 0) k += 6;
  for (int i = 0; i < k; ++i) x = mul_w(x);
  return x;
}

inline std::array<Eis, 6> units() {
  return {Eis{1, 0}, Eis{0, 1}, Eis{-1, 1}, Eis{-1, 0}, Eis{0, -1}, Eis{1, -1}};
}

// Twice the signed area of the parallelogram (x, y) measured in lattice
// cells; equivalently the number of unit triangles in the triangle (0, x, y).
// Positive iff y lies counterclockwise of x.
inline int64_t cross_tri(Eis x, Eis y) {
  return ck_sub(ck_mul(x.a, y.b), ck_mul(y.a, x.b));
}

// 2 Re(conj(x) y); exact, used for angle comparisons.
inline int64_t dot2(Eis x, Eis y) {
  return ck_add(ck_mul(2, ck_add(ck_add(ck_mul(x.a, y.a), ck_mul(x.b, y.a)), ck_mul(x.b, y.b))),
                ck_sub(ck_mul(x.a, y.b), ck_mul(y.a, x.b)));
}

// The associate x*u (u a unit) with polar angle in [0, pi/3).  That sextant
// is exactly {a > 0, b >= 0}, so the representative is found by rotating.
inline Eis unit_canonical(Eis x) {
  if (x.is_zero()) throw std::domain_error("zero has no canonical associate");
  for (int k = 0; k < 6; ++k) {
    if (x.a > 0 && x.b >= 0) return x;
    x = mul_w(x);
  }
  throw std::logic_error("unit_canonical: no sextant hit");  // unreachable
}

// Textual form "a+bw", e.g. "1+2w", "-3+0w", "2-1w".
inline std::string to_string(Eis x) {
  return std::to_string(x.a) + (x.b < 0 ? "" : "+") + std::to_string(x.b) + "w";
}

inline Eis parse_eis(const std::string& s) {
  // strip spaces
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty() || t.back() != 'w') throw std::invalid_argument("bad lattice element: \"" + s + "\"");
  t.pop_back();
  // split at the sign of the w coefficient: last '+' or '-' not at position 0
  size_t split = std::string::npos;
  for (size_t i = t.size(); i-- > 1;) {
    if (t[i] == '+' || t[i] == '-') { split = i; break; }
  }
  if (split == std::string::npos) throw std::invalid_argument("bad lattice element: \"" + s + "\"");
  try {
    int64_t a = std::stoll(t.substr(0, split));
    int64_t b = std::stoll(t[split] == '+' ? t.substr(split + 1) : t.substr(split));
    return {a, b};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad lattice element: \"" + s + "\"");
  }
}

// ---------------------------------------------------------------------------
// Rational point of the lattice plane: a + b w with a, b rational.  Q(w) is a
// field, so these support exact division; they carry all cut-and-reglue
// geometry (segment intersections land off the integer lattice).

struct EisQ {
  Rat a, b;

  EisQ() = default;
  EisQ(Rat a_, Rat b_) : a(a_), b(b_) {}
  EisQ(Eis x) : a(x.a), b(x.b) {}

  friend EisQ operator+(const EisQ& x, const EisQ& y) { return {x.a + y.a, x.b + y.b}; }
  friend EisQ operator-(const EisQ& x, const EisQ& y) { return {x.a - y.a, x.b - y.b}; }
  EisQ operator-() const { return {-a, -b}; }
  friend EisQ operator*(const EisQ& x, const EisQ& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend EisQ operator*(const Rat& s, const EisQ& x) { return {s * x.a, s * x.b}; }
  friend bool operator==(const EisQ& x, const EisQ& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const EisQ& x, const EisQ& y) { return !(x == y); }

  bool is_zero() const { return a.num == 0 && b.num == 0; }
  bool is_lattice() const { return a.is_integer() && b.is_integer(); }
  Eis to_lattice() const {
    if (!is_lattice()) throw std::domain_error("point is not a lattice point");
    return {a.num, b.num};
  }
  std::complex<double> to_complex() const {
    return {a.to_double() + 0.5 * b.to_double(), 0.8660254037844386467637 * b.to_double()};
  }
};

inline EisQ conj(const EisQ& x) { return {x.a + x.b, -x.b}; }
inline Rat norm(const EisQ& x) { return x.a * x.a + x.a * x.b + x.b * x.b; }

inline EisQ inv(const EisQ& x) {
  Rat n = norm(x);
  if (n.num == 0) throw std::domain_error("division by zero in Q(w)");
  EisQ c = conj(x);
  Rat in = Rat(1) / n;
  return {c.a * in, c.b * in};
}

inline EisQ operator/(const EisQ& x, const EisQ& y) { return x * inv(y); }

// Scaled cross product: sign is the orientation of (x, y); value is the area
// of the triangle (0, x, y) in unit lattice triangles.
inline Rat cross_tri(const EisQ& x, const EisQ& y) { return x.a * y.b - y.a * x.b; }

// 2 Re(conj(x) y), exact.
inline Rat dot2(const EisQ& x, const EisQ& y) {
  return Rat(2) * (x.a * y.a + x.b * y.a + x.b * y.b) + (x.a * y.b - y.a * x.b);
}

// True for the six units +-w^k.
inline bool is_unit(const EisQ& u) { return norm(u) == Rat(1) && u.is_lattice(); }

}  // namespace shapeslab
