#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "hull_kernel.hpp"
#include "pa/exact.hpp"

namespace pa::detail {
namespace {

using i128 = __int128;

mpz_class to_mpz(const mpz_class& x) { return x; }
mpz_class to_mpz(i128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

template <class T>
T det(std::vector<std::vector<T>> m) {
  const std::size_t k = m.size();
  if (k == 0) return T(1);
  if (k == 1) return m[0][0];
  if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (k == 3)
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  // Bareiss fraction-free elimination.
  T sign = 1, prev = 1;
  for (std::size_t c = 0; c + 1 < k; ++c) {
    if (m[c][c] == 0) {
      std::size_t p = c + 1;
      while (p < k && m[p][c] == 0) ++p;
      if (p == k) return T(0);
      std::swap(m[c], m[p]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < k; ++i)
      for (std::size_t j = c + 1; j < k; ++j) m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
    prev = m[c][c];
  }
  return sign * m[k - 1][k - 1];
}

template <class T>
class Kernel {
 public:
  Kernel(std::vector<std::vector<T>> pts, std::vector<std::size_t> simplex)
      : d_(pts.front().size()), pts_(std::move(pts)), center_(d_, T(0)) {
    for (auto i : simplex)
      for (std::size_t j = 0; j < d_; ++j) center_[j] += pts_[i][j];
    scale_ = static_cast<long>(d_ + 1);
    for (std::size_t i = 0; i <= d_; ++i) {
      Facet f;
      for (std::size_t j = 0; j <= d_; ++j)
        if (j != i) f.v.push_back(static_cast<std::uint32_t>(simplex[j]));
      for (std::size_t j = 0; j <= d_; ++j)
        if (j != i) f.nb.push_back(static_cast<std::uint32_t>(j));
      orient(f);
      facets_.push_back(std::move(f));
    }
    for (std::uint32_t i = 0; i <= d_; ++i) alive_.push_back(i);

    // Conflict graph: every outside point knows every facet it sees.
    inserted_.assign(pts_.size(), false);
    for (auto i : simplex) inserted_[i] = true;
    pconf_.resize(pts_.size());
    pmark_.assign(pts_.size(), UINT32_MAX);
    for (std::uint32_t q = 0; q < pts_.size(); ++q) {
      if (inserted_[q]) continue;
      for (std::uint32_t f = 0; f <= d_; ++f)
        if (visible(facets_[f], q)) add_conflict(f, q);
    }
  }

  void insert(std::uint32_t p) {
    inserted_[p] = true;
    ++stamp_;
    seen_.resize(facets_.size(), 0);
    std::vector<std::uint32_t> region;
    for (auto f : pconf_[p])
      if (facets_[f].alive && seen_[f] != stamp_) {
        seen_[f] = stamp_;
        region.push_back(f);
      }
    pconf_[p].clear();
    pconf_[p].shrink_to_fit();
    if (region.empty()) return;  // p lies in the current hull
    auto is_visible = [&](std::uint32_t f) { return f < seen_.size() && seen_[f] == stamp_; };

    std::map<std::vector<std::uint32_t>, std::pair<std::uint32_t, std::uint32_t>> open;
    std::vector<std::uint32_t> created;
    for (auto fi : region) {
      for (std::size_t j = 0; j < d_; ++j) {
        std::uint32_t g = facets_[fi].nb[j];
        if (is_visible(g)) continue;
        Facet nf;
        for (std::size_t t = 0; t < d_; ++t)
          if (t != j) nf.v.push_back(facets_[fi].v[t]);
        nf.v.push_back(p);
        nf.nb.assign(d_, UINT32_MAX);
        nf.nb[d_ - 1] = g;
        orient(nf);
        auto id = static_cast<std::uint32_t>(facets_.size());
        for (auto& s : facets_[g].nb)
          if (s == fi) s = id;
        for (std::size_t t = 0; t + 1 < d_; ++t) {
          std::vector<std::uint32_t> key;
          for (std::size_t u = 0; u < d_; ++u)
            if (u != t) key.push_back(nf.v[u]);
          std::sort(key.begin(), key.end());
          auto it = open.find(key);
          if (it == open.end()) {
            open.emplace(std::move(key), std::make_pair(id, static_cast<std::uint32_t>(t)));
          } else {
            nf.nb[t] = it->second.first;
            facets_[it->second.first].nb[it->second.second] = id;
            open.erase(it);
          }
        }
        facets_.push_back(std::move(nf));
        created.push_back(id);
        // Anything beyond the new facet was beyond one of the two facets at the ridge.
        for (auto src : {fi, g})
          for (auto q : facets_[src].conf) {
            if (inserted_[q] || pmark_[q] == id) continue;
            pmark_[q] = id;
            if (visible(facets_[id], q)) add_conflict(id, q);
          }
      }
    }
    if (!open.empty()) throw std::logic_error("hull: unmatched horizon ridge");
    for (auto fi : region) {
      facets_[fi].alive = false;
      facets_[fi].conf.clear();
      facets_[fi].conf.shrink_to_fit();
    }
    std::vector<std::uint32_t> next;
    next.reserve(alive_.size() + created.size());
    for (auto f : alive_)
      if (facets_[f].alive) next.push_back(f);
    next.insert(next.end(), created.begin(), created.end());
    alive_ = std::move(next);
  }

  KernelResult result() const {
    KernelResult r;
    std::vector<bool> used(pts_.size(), false);
    for (auto f : alive_) {
      const auto& fc = facets_[f];
      KernelFacet kf;
      for (const auto& x : fc.n) kf.normal.push_back(to_mpz(x));
      kf.offset = to_mpz(fc.b);
      r.facets.push_back(std::move(kf));
      for (auto v : fc.v) used[v] = true;
    }
    for (std::size_t i = 0; i < used.size(); ++i)
      if (used[i]) r.used_points.push_back(i);
    return r;
  }

 private:
  struct Facet {
    std::vector<std::uint32_t> v;   // corners
    std::vector<std::uint32_t> nb;  // nb[j] is the facet across the ridge opposite v[j]
    std::vector<T> n;
    T b = 0;
    bool alive = true;
    std::vector<std::uint32_t> conf;  // outside points that see this facet
  };

  void add_conflict(std::uint32_t f, std::uint32_t q) {
    facets_[f].conf.push_back(q);
    pconf_[q].push_back(f);
  }

  T eval(const std::vector<T>& n, const std::vector<T>& y) const {
    T s = 0;
    for (std::size_t j = 0; j < d_; ++j) s += n[j] * y[j];
    return s;
  }

  bool visible(const Facet& f, std::uint32_t p) const { return eval(f.n, pts_[p]) < f.b; }

  void orient(Facet& f) const {
    const auto& q0 = pts_[f.v[0]];
    std::vector<std::vector<T>> rows;
    for (std::size_t i = 1; i < d_; ++i) {
      std::vector<T> r(d_);
      for (std::size_t j = 0; j < d_; ++j) r[j] = pts_[f.v[i]][j] - q0[j];
      rows.push_back(std::move(r));
    }
    f.n.assign(d_, T(0));
    for (std::size_t c = 0; c < d_; ++c) {
      std::vector<std::vector<T>> minor;
      for (const auto& r : rows) {
        std::vector<T> m;
        for (std::size_t j = 0; j < d_; ++j)
          if (j != c) m.push_back(r[j]);
        minor.push_back(std::move(m));
      }
      T v = det(std::move(minor));
      f.n[c] = (c % 2 == 0) ? v : T(-v);
    }
    f.b = eval(f.n, q0);
    T side = eval(f.n, center_) - scale_ * f.b;
    if (side == 0) throw std::logic_error("hull: degenerate facet");
    if (side < 0) {
      for (auto& x : f.n) x = -x;
      f.b = -f.b;
    }
  }

  std::size_t d_;
  std::vector<std::vector<T>> pts_;
  std::vector<T> center_;  // sum of the initial simplex corners
  T scale_;
  std::vector<Facet> facets_;
  std::vector<std::uint32_t> alive_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::vector<bool> inserted_;
  std::vector<std::vector<std::uint32_t>> pconf_;  // facets seen by each outside point
  std::vector<std::uint32_t> pmark_;
};

// Greedy choice of d+1 affinely independent points.
std::vector<std::size_t> initial_simplex(const std::vector<std::vector<mpz_class>>& pts) {
  const std::size_t d = pts.front().size();
  std::vector<std::size_t> chosen{0};
  std::vector<Vec> basis;  // echelon rows with recorded pivots
  std::vector<std::size_t> piv;
  for (std::size_t i = 1; i < pts.size() && chosen.size() <= d; ++i) {
    Vec r(d);
    for (std::size_t j = 0; j < d; ++j) r[j] = pts[i][j] - pts[0][j];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (sgn(r[piv[b]]) == 0) continue;
      Rat f = r[piv[b]] / basis[b][piv[b]];
      for (std::size_t j = 0; j < d; ++j) r[j] -= f * basis[b][j];
    }
    auto nz = std::find_if(r.begin(), r.end(), [](const Rat& x) { return sgn(x) != 0; });
    if (nz == r.end()) continue;
    piv.push_back(static_cast<std::size_t>(nz - r.begin()));
    basis.push_back(std::move(r));
    chosen.push_back(i);
  }
  if (chosen.size() != d + 1) throw std::logic_error("hull: points are not full-dimensional");
  return chosen;
}

template <class T>
KernelResult run(const std::vector<std::vector<T>>& pts, const std::vector<std::size_t>& simplex) {
  Kernel<T> k(pts, simplex);
  std::vector<std::uint32_t> order;
  std::vector<bool> in_simplex(pts.size(), false);
  for (auto i : simplex) in_simplex[i] = true;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!in_simplex[i]) order.push_back(static_cast<std::uint32_t>(i));
  std::mt19937 rng(0x5eed);
  std::shuffle(order.begin(), order.end(), rng);
  for (auto i : order) k.insert(i);
  return k.result();
}

}  // namespace

KernelResult incremental_hull(const std::vector<std::vector<mpz_class>>& points) {
  const std::size_t d = points.front().size();
  if (d == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (points[i][0] < points[lo][0]) lo = i;
      if (points[i][0] > points[hi][0]) hi = i;
    }
    KernelResult r;
    r.facets.push_back({{mpz_class(1)}, points[lo][0]});
    r.facets.push_back({{mpz_class(-1)}, -points[hi][0]});
    r.used_points = {std::min(lo, hi), std::max(lo, hi)};
    return r;
  }
  auto simplex = initial_simplex(points);

  // Machine integers are exact here: |coords| < 2^24 and d <= 4 keep every
  // cofactor and inner product far below 2^127.
  bool small = d <= 4;
  const mpz_class limit = mpz_class(1) << 24;
  for (const auto& p : points)
    for (const auto& x : p)
      if (abs(x) >= limit) small = false;
  if (small) {
    std::vector<std::vector<i128>> pts(points.size(), std::vector<i128>(d));
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = 0; j < d; ++j) pts[i][j] = points[i][j].get_si();
    return run(pts, simplex);
  }
  return run(points, simplex);
}

}  // namespace pa::detail
