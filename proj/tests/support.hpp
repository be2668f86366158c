// Test helpers and brute-force oracles. The oracles deliberately avoid the
// library's hull, LP and elimination code.
#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pa/io.hpp"

namespace t {

using namespace pa;

inline Vec V(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Vec Vq(std::initializer_list<const char*> xs) {
  Vec v;
  for (auto x : xs) v.push_back(parse_rational(x));
  return v;
}

inline IntVec I(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<Vec> permutations_of(Vec base) {
  std::sort(base.begin(), base.end());
  std::vector<Vec> out;
  do out.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  return out;
}

inline std::set<Vec> as_set(const std::vector<Vec>& v) { return {v.begin(), v.end()}; }

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Beta chain(std::vector<Block> blocks, int n) { return beta_from_chain(std::move(blocks), n); }

// ---- elimination used only by the oracles ----

inline std::size_t orank(std::vector<Vec> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i][c] != 0) {
        Rat f = m[i][c] / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      }
    ++r;
  }
  return r;
}

inline Rat odet(std::vector<Vec> m) {
  const std::size_t k = m.size();
  Rat d = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && m[p][c] == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < k; ++i) {
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < k; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

struct OracleHull {
  std::size_t dim = 0;
  std::set<Vec> vertices;
  std::set<std::set<Vec>> facets;  // tight vertex sets
};

// Brute force: every dim-subset of the points spanning a hyperplane of the
// affine hull is tested by determinant signs against all points.
inline OracleHull oracle_hull(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  OracleHull out;
  std::vector<Vec> diffs;
  for (const auto& p : pts) diffs.push_back(sub(p, pts[0]));
  out.dim = orank(diffs);
  const std::size_t d = out.dim;
  if (d == 0) {
    out.vertices.insert(pts[0]);
    return out;
  }
  // Coordinates on which the projection of the affine hull is injective.
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < pts[0].size() && cols.size() < d; ++c) {
    std::vector<Vec> m;
    for (const auto& x : diffs) {
      Vec row;
      for (auto cc : cols) row.push_back(x[cc]);
      row.push_back(x[c]);
      m.push_back(row);
    }
    if (orank(m) == cols.size() + 1) cols.push_back(c);
  }
  auto proj = [&](const Vec& x) {
    Vec y;
    for (auto c : cols) y.push_back(x[c]);
    return y;
  };
  std::vector<Vec> y;
  for (const auto& p : pts) y.push_back(proj(p));

  std::vector<std::size_t> idx(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == d) {
      std::vector<Vec> base;
      for (std::size_t i = 1; i < d; ++i) base.push_back(sub(y[idx[i]], y[idx[0]]));
      if (orank(base) != d - 1) return;
      int pos = 0, neg = 0;
      std::set<Vec> tight;
      for (std::size_t q = 0; q < y.size(); ++q) {
        auto m = base;
        m.push_back(sub(y[q], y[idx[0]]));
        int s = sgn(odet(m));
        if (s > 0) ++pos;
        else if (s < 0) ++neg;
        else tight.insert(pts[q]);
      }
      if (pos == 0 || neg == 0) out.facets.insert(tight);
      return;
    }
    for (std::size_t i = start; i < y.size(); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  for (const auto& p : pts) {
    std::set<Vec> meet;
    bool first = true;
    for (const auto& f : out.facets) {
      if (!f.count(p)) continue;
      if (first) meet = f;
      else {
        std::set<Vec> tmp;
        std::set_intersection(meet.begin(), meet.end(), f.begin(), f.end(), std::inserter(tmp, tmp.end()));
        meet = tmp;
      }
      first = false;
    }
    if (!first && meet.size() == 1) out.vertices.insert(p);
  }
  // Drop non-vertices from the facet sets.
  std::set<std::set<Vec>> clean;
  for (const auto& f : out.facets) {
    std::set<Vec> g;
    for (const auto& p : f)
      if (out.vertices.count(p)) g.insert(p);
    clean.insert(g);
  }
  out.facets = clean;
  return out;
}

inline std::set<std::set<Vec>> facet_sets(const Polytope& p) {
  std::set<std::set<Vec>> out;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    auto vs = select_vertices(p, p.facet_vertices(f));
    out.insert(as_set(vs));
  }
  return out;
}

// Integer points of {x : sum = total, <a_i, x> >= b_i, x >= lo} by enumeration.
inline std::vector<Vec> integer_points(std::size_t dim, long total, long lo,
                                       const std::vector<std::pair<IntVec, long>>& ineqs) {
  std::vector<Vec> out;
  std::vector<long> x(dim);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i + 1 == dim) {
      if (left < lo) return;
      x[i] = left;
      for (const auto& [a, b] : ineqs) {
        long s = 0;
        for (std::size_t j = 0; j < dim; ++j) s += a[j].get_si() * x[j];
        if (s < b) return;
      }
      Vec v;
      for (long c : x) v.emplace_back(c);
      out.push_back(v);
      return;
    }
    for (long c = lo; c <= left; ++c) {
      x[i] = c;
      rec(i + 1, left - c);
    }
  };
  rec(0, total);
  return out;
}

// ---- combinatorial oracles ----

inline long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }
inline long binom(long n, long k) { return (k < 0 || k > n) ? 0 : factorial(n) / (factorial(k) * factorial(n - k)); }
inline long catalan(long n) { return binom(2 * n, n) / (n + 1); }

// |B_1|: choose beta_min (size l+1), then an ordered tail of k-1 further elements.
inline long b1_count(int n) {
  long total = 0;
  for (int k = 1; k <= n; ++k)
    for (int l = 0; k + l <= n; ++l)
      total += binom(n + 1, l + 1) * factorial(n - l) / factorial(n - l - (k - 1));
  return total;
}

// Maximal nested sets of a building set by subset scan: members pairwise
// nested or disjoint, and no union of two or more disjoint members in B.
inline long brute_max_nested(const std::vector<Block>& blocks, int n) {
  std::vector<Block> B;
  for (const auto& b : blocks)
    if (static_cast<int>(b.size()) != n + 1) B.push_back(b);
  std::set<Block> inB(blocks.begin(), blocks.end());
  const std::size_t m = B.size();
  auto disjoint = [](const Block& a, const Block& b) {
    for (int x : a)
      if (std::find(b.begin(), b.end(), x) != b.end()) return false;
    return true;
  };
  auto nested = [&](unsigned mask) {
    std::vector<Block> N;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) N.push_back(B[i]);
    for (std::size_t i = 0; i < N.size(); ++i)
      for (std::size_t j = i + 1; j < N.size(); ++j)
        if (!is_subset(N[i], N[j]) && !is_subset(N[j], N[i]) && !disjoint(N[i], N[j])) return false;
    // every family of >= 2 pairwise disjoint members
    const std::size_t q = N.size();
    for (unsigned s = 0; s < (1u << q); ++s) {
      if (__builtin_popcount(s) < 2) continue;
      std::vector<std::size_t> ids;
      for (std::size_t i = 0; i < q; ++i)
        if (s >> i & 1) ids.push_back(i);
      bool pairwise = true;
      for (std::size_t a = 0; a < ids.size() && pairwise; ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
          if (!disjoint(N[ids[a]], N[ids[b]])) pairwise = false;
      if (!pairwise) continue;
      Block u;
      for (auto i : ids) u = block_union(u, N[i]);
      if (inB.count(u)) return false;
    }
    return true;
  };
  std::vector<unsigned> good;
  for (unsigned mask = 0; mask < (1u << m); ++mask)
    if (nested(mask)) good.push_back(mask);
  long count = 0;
  for (auto a : good) {
    bool maximal = true;
    for (auto b : good)
      if (b != a && (a & b) == a) {
        maximal = false;
        break;
      }
    count += maximal;
  }
  return count;
}

inline Rat rand_rat(std::mt19937& rng, int lo, int hi, int den = 1) {
  std::uniform_int_distribution<int> d(lo * den, hi * den);
  Rat r(d(rng), den);
  r.canonicalize();
  return r;
}

// Random polytope in sum(x) = 0 of R^3 (or R^4), from a handful of points.
inline Polytope random_polytope(std::mt19937& rng, std::size_t ambient, int npts, int range = 6) {
  std::vector<Vec> pts;
  for (int i = 0; i < npts; ++i) {
    Vec v(ambient);
    Rat s = 0;
    for (std::size_t j = 0; j + 1 < ambient; ++j) {
      v[j] = rand_rat(rng, -range, range);
      s += v[j];
    }
    v[ambient - 1] = -s;
    pts.push_back(v);
  }
  return hull(pts);
}

}  // namespace t
