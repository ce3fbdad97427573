#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shapeslab/numeric.hpp"

namespace shapeslab {

// Multiset of rational cone curvatures 2*pi*p_i/q summing to 4*pi, stored as
// the least common denominator q and the numerators sorted descending.
struct CurvatureTuple {
  int64_t q = 0;
  std::vector<int64_t> p;  // descending

  int n() const { return (int)p.size(); }

  void check() const {
    if (q < 2) throw std::domain_error("curvature denominator must be >= 2");
    int64_t sum = 0, g = q;
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i] <= 0 || p[i] >= q) throw std::domain_error("curvature numerator out of (0, q)");
      if (i && p[i] > p[i - 1]) throw std::domain_error("numerators must be sorted descending");
      sum += p[i];
      g = std::gcd(g, p[i]);
    }
    if (sum != 2 * q) throw std::domain_error("curvatures must sum to 4*pi");
    if (g != 1) throw std::domain_error("denominator is not least");
  }
};

enum class OrbifoldClass { not_orbifold, orbifold_pure, orbifold_interchange };

// Pair conditions for a colliding pair with curvature sum s = 2*pi*(pi+pj)/q
// below 2*pi: (i) the labelled collision angle 2*pi - s divides 2*pi, i.e.
// (q - pi - pj) | q; (ii) for an equal pair, the unlabelled angle pi - s/2
// divides 2*pi, i.e. (q - 2*pi_i) | 2q.  (i) on every pair keeps the pure
// (labelled) completion an orbifold; equal pairs that only satisfy (ii) need
// the interchange.
inline bool pair_condition_i(int64_t q, int64_t pi, int64_t pj) {
  return q % (q - pi - pj) == 0;
}

inline bool pair_condition_ii(int64_t q, int64_t pi, int64_t pj) {
  return pi == pj && (2 * q) % (q - 2 * pi) == 0;
}

inline OrbifoldClass classify(const CurvatureTuple& t) {
  t.check();
  bool pure = true;
  for (size_t i = 0; i < t.p.size(); ++i)
    for (size_t j = i + 1; j < t.p.size(); ++j) {
      if (t.p[i] + t.p[j] >= t.q) continue;
      if (pair_condition_i(t.q, t.p[i], t.p[j])) continue;
      if (pair_condition_ii(t.q, t.p[i], t.p[j])) pure = false;
      else return OrbifoldClass::not_orbifold;
    }
  return pure ? OrbifoldClass::orbifold_pure : OrbifoldClass::orbifold_interchange;
}

// The moduli space is noncompact iff the curvatures split into two subsets
// each summing to 2*pi, i.e. some sub-multiset of numerators sums to q.
inline bool is_compact(const CurvatureTuple& t) {
  std::vector<char> reach(t.q + 1, 0);
  reach[0] = 1;
  for (int64_t x : t.p)
    for (int64_t s = t.q; s >= x; --s)
      if (reach[s - x]) reach[s] = 1;
  return !reach[t.q];
}

inline int64_t euler_totient(int64_t q) {
  int64_t result = q, m = q;
  for (int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      result -= result / d;
      while (m % d == 0) m /= d;
    }
  if (m > 1) result -= result / m;
  return result;
}

// Degree of the cyclotomic field generated by the curvature roots of unity.
inline int64_t degree(const CurvatureTuple& t) { return euler_totient(t.q); }

// Galois test: conjugating the curvatures by t in (Z/q)^* (t != +-1) scales
// the numerators mod q; the conjugate Hermitian form is definite iff the
// rescaled curvatures sum to 2*pi or 2*pi*(n-1), i.e. s_t in {1, n-1}.
// Arithmetic iff every conjugate form is definite.
inline bool arithmetic(const CurvatureTuple& t) {
  int64_t q = t.q;
  int64_t n = t.n();
  for (int64_t u = 2; u <= q / 2; ++u) {
    if (std::gcd(u, q) != 1) continue;
    int64_t sum = 0;
    for (int64_t pi : t.p) sum += (u * pi) % q;
    if (sum % q != 0) throw std::logic_error("galois sum not divisible by q");
    int64_t s = sum / q;
    if (s != 1 && s != n - 1) return false;
  }
  return true;
}

struct OrbifoldRow {
  CurvatureTuple tuple;
  int64_t degree = 0;
  bool arithmetic = false;  // AR / NA
  bool pure = false;        // P / I
  bool compact = false;     // C / N
};

inline OrbifoldRow make_row(const CurvatureTuple& t, OrbifoldClass cls) {
  OrbifoldRow r;
  r.tuple = t;
  r.degree = degree(t);
  r.arithmetic = arithmetic(t);
  r.pure = cls == OrbifoldClass::orbifold_pure;
  r.compact = is_compact(t);
  return r;
}

namespace detail {

// Depth-first generation of numerators in ascending order.  Growing from the
// small end makes every committed pair immediately subject to the collision
// conditions, which prune the search to almost nothing; pairs with sum >= q
// are unconstrained and only appear near the top.
inline void orbifold_dfs(int64_t q, std::vector<int64_t>& cur, int64_t sum, int64_t g,
                         bool prune, std::vector<OrbifoldRow>& out) {
  if (sum == 2 * q) {
    if (cur.size() >= 5 && g == 1) {
      CurvatureTuple t;
      t.q = q;
      t.p.assign(cur.rbegin(), cur.rend());
      OrbifoldClass cls = classify(t);
      if (prune) {
        if (cls == OrbifoldClass::not_orbifold)
          throw std::logic_error("pruned search produced a non-orbifold");
      } else if (cls == OrbifoldClass::not_orbifold) {
        return;
      }
      out.push_back(make_row(t, cls));
    }
    return;
  }
  int64_t lo = cur.empty() ? 1 : cur.back();
  for (int64_t x = lo; x < q; ++x) {
    int64_t rest = 2 * q - sum - x;
    if (rest < 0) break;
    if (rest > 0 && rest < x) continue;  // remaining parts are >= x
    if (prune) {
      bool ok = true;
      for (int64_t y : cur) {
        if (y + x >= q) continue;
        if (!pair_condition_i(q, y, x) && !pair_condition_ii(q, y, x)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
    }
    cur.push_back(x);
    orbifold_dfs(q, cur, sum + x, std::gcd(g, x), prune, out);
    cur.pop_back();
  }
}

inline std::vector<OrbifoldRow> enumerate_q(int64_t q, bool prune) {
  std::vector<OrbifoldRow> rows;
  std::vector<int64_t> cur;
  orbifold_dfs(q, cur, 0, q, prune, rows);
  // Table order: numerators sorted ascending, compared lexicographically.
  std::sort(rows.begin(), rows.end(), [](const OrbifoldRow& a, const OrbifoldRow& b) {
    std::vector<int64_t> ra(a.tuple.p.rbegin(), a.tuple.p.rend());
    std::vector<int64_t> rb(b.tuple.p.rbegin(), b.tuple.p.rend());
    return ra < rb;
  });
  return rows;
}

}  // namespace detail

// All orbifold moduli of cone metrics with n >= 5 cone points and least
// denominator at most q_max, in table order.
inline std::vector<OrbifoldRow> enumerate_orbifolds(int64_t q_max, int jobs = 1,
                                                    bool prune = true) {
  if (q_max < 3) throw std::domain_error("q_max must be >= 3");
  std::vector<std::vector<OrbifoldRow>> per_q(q_max + 1);
  if (jobs <= 1) {
    for (int64_t q = 3; q <= q_max; ++q) per_q[q] = detail::enumerate_q(q, prune);
  } else {
    std::vector<std::future<void>> fs;
    std::atomic<int64_t> next{3};
    for (int j = 0; j < jobs; ++j)
      fs.push_back(std::async(std::launch::async, [&] {
        for (;;) {
          int64_t q = next.fetch_add(1);
          if (q > q_max) return;
          per_q[q] = detail::enumerate_q(q, prune);
        }
      }));
    for (auto& f : fs) f.get();
  }
  std::vector<OrbifoldRow> all;
  for (int64_t q = 3; q <= q_max; ++q)
    all.insert(all.end(), per_q[q].begin(), per_q[q].end());
  return all;
}

// ---------------------------------------------------------------------------
// Table output, column-compatible with the reference list.

inline std::string row_numerators(const OrbifoldRow& r) {
  std::string s;
  for (size_t i = 0; i < r.tuple.p.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(r.tuple.p[i]);
  }
  return s;
}

inline std::string table_markdown(const std::vector<OrbifoldRow>& rows) {
  std::ostringstream os;
  os << "| q | numerators | degree | arithmetic | pure | compact |\n";
  os << "|---|------------|--------|------------|------|---------|\n";
  for (auto& r : rows)
    os << "| " << r.tuple.q << " | " << row_numerators(r) << " | " << r.degree << " | "
       << (r.arithmetic ? "AR" : "NA") << " | " << (r.pure ? "P" : "I") << " | "
       << (r.compact ? "C" : "N") << " |\n";
  return os.str();
}

inline std::string table_csv(const std::vector<OrbifoldRow>& rows) {
  std::ostringstream os;
  os << "q,numerators,degree,arithmetic,pure,compact\n";
  for (auto& r : rows)
    os << r.tuple.q << "," << row_numerators(r) << "," << r.degree << ","
       << (r.arithmetic ? "AR" : "NA") << "," << (r.pure ? "P" : "I") << ","
       << (r.compact ? "C" : "N") << "\n";
  return os.str();
}

// Parses rows back out of the markdown table (used by --verify and tests).
inline std::vector<OrbifoldRow> parse_table_markdown(const std::string& text) {
  std::vector<OrbifoldRow> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] != '|') continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    std::getline(ls, cell, '|');  // leading empty
    while (std::getline(ls, cell, '|')) {
      // trim
      size_t a = cell.find_first_not_of(" \t");
      if (a == std::string::npos) { cells.push_back(""); continue; }
      size_t b = cell.find_last_not_of(" \t");
      cells.push_back(cell.substr(a, b - a + 1));
    }
    if (cells.size() < 6 || cells[0] == "q" || cells[0].find("---") != std::string::npos)
      continue;
    OrbifoldRow r;
    r.tuple.q = std::stoll(cells[0]);
    std::istringstream ns(cells[1]);
    int64_t v;
    while (ns >> v) r.tuple.p.push_back(v);
    r.degree = std::stoll(cells[2]);
    r.arithmetic = cells[3] == "AR";
    r.pure = cells[4] == "P";
    r.compact = cells[5] == "C";
    rows.push_back(r);
  }
  return rows;
}

inline bool rows_equal(const OrbifoldRow& a, const OrbifoldRow& b) {
  return a.tuple.q == b.tuple.q && a.tuple.p == b.tuple.p && a.degree == b.degree &&
         a.arithmetic == b.arithmetic && a.pure == b.pure && a.compact == b.compact;
}

}  // namespace shapeslab
