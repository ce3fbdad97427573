#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "shapeslab/mesh.hpp"
#include "shapeslab/numeric.hpp"

namespace shapeslab {

// Lattice hexagon with sides parallel, in order, to a standard hexagon:
// a circumscribed triangle of side n minus corner triangles of sides
// p1, p2, p3.  The area form n^2 - p1^2 - p2^2 - p3^2 has signature (1,3);
// integer 4-tuples of positive area are shapes of possibly non-simple
// hexagons, and the geometric ones form the fundamental cone below.
struct Hexagon {
  int64_t n = 0, p1 = 0, p2 = 0, p3 = 0;

  friend bool operator==(const Hexagon& a, const Hexagon& b) {
    return a.n == b.n && a.p1 == b.p1 && a.p2 == b.p2 && a.p3 == b.p3;
  }
  friend bool operator!=(const Hexagon& a, const Hexagon& b) { return !(a == b); }
};

inline int64_t area(const Hexagon& h) {
  return ck_sub(ck_mul(h.n, h.n), ck_add(ck_mul(h.p1, h.p1),
                                         ck_add(ck_mul(h.p2, h.p2), ck_mul(h.p3, h.p3))));
}

// Side lengths in cyclic order.
inline std::array<int64_t, 6> side_lengths(const Hexagon& h) {
  return {h.p1, h.n - h.p1 - h.p2, h.p2, h.n - h.p2 - h.p3, h.p3, h.n - h.p3 - h.p1};
}

inline bool is_fundamental(const Hexagon& h) {
  return h.n > 0 && h.p1 >= 0 && h.p2 >= 0 && h.p3 >= 0 && h.p1 + h.p2 <= h.n &&
         h.p2 + h.p3 <= h.n && h.p3 + h.p1 <= h.n;
}

// Reverses the sign of one side length.  Odd sides flip the corresponding
// p_i; even sides are the Lorentz reflections fixing {n - p_i - p_j = 0},
// which work out to adding twice the side length to n, p_i and p_j.  Every
// move preserves the area form and is an involution.
inline Hexagon butterfly(const Hexagon& h, int side_index) {
  auto [n, p1, p2, p3] = h;
  switch (side_index) {
    case 1: return {n, -p1, p2, p3};
    case 3: return {n, p1, -p2, p3};
    case 5: return {n, p1, p2, -p3};
    case 2: {
      int64_t t = n - p1 - p2;
      return {n + 2 * t, p1 + 2 * t, p2 + 2 * t, p3};
    }
    case 4: {
      int64_t t = n - p2 - p3;
      return {n + 2 * t, p1, p2 + 2 * t, p3 + 2 * t};
    }
    case 6: {
      int64_t t = n - p3 - p1;
      return {n + 2 * t, p1 + 2 * t, p2, p3 + 2 * t};
    }
    default: throw std::out_of_range("butterfly side index must be 1..6");
  }
}

struct ReduceResult {
  Hexagon reduced;
  // Moves applied in order.  1..6 are butterfly moves; 0 is the global sign
  // change (n, p) -> (-n, -p), needed when the input lies on the opposite
  // sheet of the cone (same projective shape, unreachable by reflections).
  std::vector<int> word;
};

inline Hexagon apply_word(Hexagon h, const std::vector<int>& word) {
  for (int m : word) h = m == 0 ? Hexagon{-h.n, -h.p1, -h.p2, -h.p3} : butterfly(h, m);
  return h;
}

// Transforms a positive-area class into the fundamental cone.  Sign fixes
// first, then reflections at violated triangle inequalities; each of the
// latter strictly decreases n, which stays >= sqrt(area), so this stops.
// `pick` chooses among currently violated constraints (for the confluence
// property test); default takes the first.
inline ReduceResult reduce(Hexagon h,
                           const std::function<int(const std::vector<int>&)>& pick = nullptr) {
  if (area(h) <= 0) throw std::domain_error("not a positive-area class");
  ReduceResult res;
  if (h.n < 0) {
    h = {-h.n, -h.p1, -h.p2, -h.p3};
    res.word.push_back(0);
  }
  for (int guard = 0; guard < 100000; ++guard) {
    std::vector<int> violated;
    if (h.p1 < 0) violated.push_back(1);
    if (h.p2 < 0) violated.push_back(3);
    if (h.p3 < 0) violated.push_back(5);
    if (violated.empty()) {
      if (h.n - h.p1 - h.p2 < 0) violated.push_back(2);
      if (h.n - h.p2 - h.p3 < 0) violated.push_back(4);
      if (h.n - h.p3 - h.p1 < 0) violated.push_back(6);
    }
    if (violated.empty()) {
      res.reduced = h;
      return res;
    }
    int mv = pick ? violated[pick(violated)] : violated.front();
    h = butterfly(h, mv);
    res.word.push_back(mv);
  }
  throw std::logic_error("hexagon reduction did not terminate");
}

// ---------------------------------------------------------------------------
// Weighted enumeration: for each area m, hexagons are counted with orbifold
// weight 1/2^k where k is the number of zero side lengths.  Counts are exact
// dyadic rationals; with positive area at most three (alternating) sides can
// vanish, so everything is an integer number of eighths.

struct WeightedCounts {
  int64_t m_max = 0;
  std::vector<int64_t> eighths;  // index m in 1..m_max

  Rat count(int64_t m) const { return Rat(eighths.at(m), 8); }
  double count_d(int64_t m) const { return double(eighths.at(m)) / 8.0; }

  // Average over a centered window of the given width, clipped at the ends.
  double windowed_average(int64_t m, int64_t window = 49) const {
    int64_t lo = std::max<int64_t>(1, m - window / 2);
    int64_t hi = std::min<int64_t>(m_max, m + window / 2);
    double s = 0;
    for (int64_t i = lo; i <= hi; ++i) s += count_d(i);
    return s / double(hi - lo + 1);
  }
};

inline int zero_side_count(int64_t n, int64_t q1, int64_t q2, int64_t q3) {
  int k = 0;
  k += (q1 == 0) + (q2 == 0) + (q3 == 0);
  k += (q1 + q2 == n) + (q2 + q3 == n) + (q3 + q1 == n);
  return k;
}

namespace detail {

inline int64_t isqrt_floor(int64_t x) {
  if (x < 0) return -1;
  int64_t r = (int64_t)std::sqrt(double(x)) + 2;
  while (r * r > x) --r;
  return r;
}

inline void count_range(int64_t n_lo, int64_t n_hi, int64_t m_max, std::vector<int64_t>& acc) {
  for (int64_t n = n_lo; n < n_hi; ++n) {
    for (int64_t q1 = 0; q1 <= n; ++q1) {         // q1 >= q2 >= q3, weighted by orbit size
      int64_t q2_hi = std::min(q1, n - q1);
      for (int64_t q2 = 0; q2 <= q2_hi; ++q2) {
        int64_t base = n * n - q1 * q1 - q2 * q2;  // area when q3 = 0
        if (base < 1) break;                       // decreasing in q2
        // need base - q3^2 in [1, m_max]
        int64_t q3_hi = std::min(q2, isqrt_floor(base - 1));
        int64_t q3_lo = 0;
        if (base > m_max) {
          q3_lo = isqrt_floor(base - m_max);       // smallest q3 with q3^2 >= base - m_max
          if (q3_lo * q3_lo < base - m_max) ++q3_lo;
        }
        for (int64_t q3 = q3_lo; q3 <= q3_hi; ++q3) {
          int64_t m = base - q3 * q3;
          int mult = (q1 == q2 && q2 == q3) ? 1 : (q1 == q2 || q2 == q3) ? 3 : 6;
          int k = zero_side_count(n, q1, q2, q3);
          acc[m] += mult * (int64_t(8) >> k);
        }
      }
    }
  }
}

}  // namespace detail

// In the fundamental cone the largest circumscribed triangle for a given
// area comes from the long-and-skinny families, with n <= m/2 + 2.
inline int64_t hexagon_n_bound(int64_t m_max) { return m_max / 2 + 2; }

inline WeightedCounts enumerate_weighted(int64_t m_max, int jobs = 1) {
  if (m_max < 1) throw std::domain_error("m_max must be >= 1");
  WeightedCounts wc;
  wc.m_max = m_max;
  wc.eighths.assign(m_max + 1, 0);
  int64_t n_end = hexagon_n_bound(m_max) + 1;
  if (jobs <= 1) {
    detail::count_range(1, n_end, m_max, wc.eighths);
    return wc;
  }
  int64_t chunk = (n_end - 1 + jobs - 1) / jobs;
  std::vector<std::future<std::vector<int64_t>>> parts;
  for (int j = 0; j < jobs; ++j) {
    int64_t lo = 1 + j * chunk, hi = std::min<int64_t>(n_end, lo + chunk);
    if (lo >= hi) break;
    parts.push_back(std::async(std::launch::async, [=] {
      std::vector<int64_t> acc(m_max + 1, 0);
      detail::count_range(lo, hi, m_max, acc);
      return acc;
    }));
  }
  for (auto& p : parts) {
    auto acc = p.get();
    for (int64_t m = 0; m <= m_max; ++m) wc.eighths[m] += acc[m];
  }
  return wc;
}

// ---------------------------------------------------------------------------
// Hexagonal envelope: two copies of the hexagon glued along the boundary,
// a sphere triangulation with 2*area triangles.

inline Mesh envelope(const Hexagon& h) {
  if (!is_fundamental(h)) throw std::domain_error("envelope requires a fundamental hexagon");
  if (area(h) <= 0) throw std::domain_error("envelope requires positive area");
  auto inside_up = [&](int64_t a, int64_t b) {
    return a + b <= h.n - 1 && a + b + 1 > h.p1 && a < h.n - h.p2 && b < h.n - h.p3;
  };
  auto inside_down = [&](int64_t a, int64_t b) {
    return a + b <= h.n - 2 && a + b + 2 > h.p1 && a < h.n - h.p2 && b < h.n - h.p3;
  };
  std::vector<std::array<std::pair<int64_t, int64_t>, 3>> front;
  for (int64_t a = 0; a <= h.n; ++a)
    for (int64_t b = 0; a + b <= h.n; ++b) {
      if (inside_up(a, b)) front.push_back({{{a, b}, {a + 1, b}, {a, b + 1}}});
      if (inside_down(a, b)) front.push_back({{{a + 1, b}, {a + 1, b + 1}, {a, b + 1}}});
    }
  // Interior edges pair front-front (and their mirrors back-back); boundary
  // edges of face f pair with side 2-s of the reversed back copy F+f.
  int F = (int)front.size();
  std::map<std::pair<std::pair<int64_t, int64_t>, std::pair<int64_t, int64_t>>, Mesh::Half> dir;
  for (int f = 0; f < F; ++f)
    for (int s = 0; s < 3; ++s) dir[{front[f][s], front[f][(s + 1) % 3]}] = {f, s};
  std::vector<std::array<Mesh::Half, 3>> twin(2 * F);
  for (int f = 0; f < F; ++f)
    for (int s = 0; s < 3; ++s) {
      auto rev = dir.find({front[f][(s + 1) % 3], front[f][s]});
      if (rev != dir.end()) {
        twin[f][s] = rev->second;
        twin[F + f][2 - s] = {F + rev->second.face, 2 - rev->second.side};
      } else {
        twin[f][s] = {F + f, 2 - s};
        twin[F + f][2 - s] = {f, s};
      }
    }
  return mesh_from_pairing(2 * F, twin);
}

}  // namespace shapeslab
