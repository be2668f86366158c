#include "pa/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "hull_kernel.hpp"
#include "pa/lp.hpp"

namespace pa {

namespace {

bool is_sum_equality(const std::vector<Hyperplane>& eqs) {
  return eqs.size() == 1 && std::all_of(eqs[0].normal.begin(), eqs[0].normal.end(),
                                        [](const Int& x) { return x == 1; });
}

Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

}  // namespace

Halfspace canonical_halfspace(const std::vector<Hyperplane>& equalities, const IntVec& a, const Rat& b) {
  Vec av = to_vec(a);
  Rat off = b;
  for (const auto& e : equalities) {
    std::size_t p = pivot_column(e.normal);
    if (sgn(av[p]) == 0) continue;
    Rat f = av[p] / Rat(e.normal[p]);
    for (std::size_t j = 0; j < av.size(); ++j) av[j] -= f * e.normal[j];
    off -= f * e.offset;
  }
  if (is_sum_equality(equalities)) {
    Rat m = *std::min_element(av.begin(), av.end());
    for (auto& x : av) x -= m;
    off -= m * equalities[0].offset;
  }
  if (is_zero(av)) throw std::invalid_argument("half-space normal is constant on the affine hull");
  Rat s = primitive_scale(av);
  Halfspace h;
  h.normal = primitive_direction(av);
  h.offset = off * s;
  return h;
}

Halfspace Polytope::canonical(const IntVec& a, const Rat& b) const {
  return canonical_halfspace(equalities_, a, b);
}

std::optional<std::size_t> Polytope::vertex_index(const Vec& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Polytope::facet_index(const IntVec& normal) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), normal,
                             [](const Halfspace& h, const IntVec& n) { return h.normal < n; });
  if (it == facets_.end() || it->normal != normal) return std::nullopt;
  return static_cast<std::size_t>(it - facets_.begin());
}

long long FVector::euler_sum() const {
  long long s = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    s += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[i]);
  return s;
}

bool FVector::satisfies_euler(std::size_t dim) const {
  return counts.size() == dim && euler_sum() == (dim % 2 == 0 ? 0 : 2);
}

// ---------------------------------------------------------------------------

Polytope hull(const std::vector<Vec>& input) {
  if (input.empty()) throw std::invalid_argument("hull of an empty point set");
  const std::size_t n = input.front().size();
  for (const auto& p : input)
    if (p.size() != n) throw std::invalid_argument("mixed ambient dimensions");
  std::vector<Vec> pts(input);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope P;
  P.ambient_dim_ = n;
  AffineHull ah = affine_hull(pts);
  P.dim_ = ah.dim;
  P.equalities_ = std::move(ah.equalities);
  if (P.dim_ == 0) {
    P.vertices_ = {pts.front()};
    P.vertex_facets_ = {Bits(0)};
    return P;
  }

  std::vector<bool> pivot(n, false);
  for (const auto& e : P.equalities_) pivot[pivot_column(e.normal)] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!pivot[j]) free_cols.push_back(j);

  // Integer coordinates on the free columns: y = L * x_free.
  Int L = 1;
  for (const auto& p : pts)
    for (auto j : free_cols) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), p[j].get_den_mpz_t());
  std::vector<IntVec> ys;
  ys.reserve(pts.size());
  for (const auto& p : pts) {
    IntVec y;
    for (auto j : free_cols) y.push_back(p[j].get_num() * (L / p[j].get_den()));
    ys.push_back(std::move(y));
  }

  auto kr = detail::incremental_hull(ys);

  std::map<IntVec, Int> planes;
  for (auto& f : kr.facets) {
    Int g = gcd_of(f.normal);
    for (auto& x : f.normal) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(f.offset.get_mpz_t(), f.offset.get_mpz_t(), g.get_mpz_t());
    planes.emplace(std::move(f.normal), std::move(f.offset));
  }
  std::vector<std::pair<IntVec, Int>> plane_list(planes.begin(), planes.end());

  // Extreme points: simplex corners whose tight normals have full rank.
  std::vector<std::size_t> vert_ids;
  std::vector<std::vector<std::size_t>> tight_of;
  for (auto i : kr.used_points) {
    std::vector<std::size_t> tight;
    std::vector<IntVec> rows;
    for (std::size_t f = 0; f < plane_list.size(); ++f)
      if (dot(plane_list[f].first, ys[i]) == plane_list[f].second) {
        tight.push_back(f);
        rows.push_back(plane_list[f].first);
      }
    if (rows.size() >= P.dim_ && rank(rows) == P.dim_) {
      vert_ids.push_back(i);
      tight_of.push_back(std::move(tight));
    }
  }

  // Lift the planes back to the ambient space and canonicalize.
  std::vector<std::pair<Halfspace, std::size_t>> lifted;
  for (std::size_t f = 0; f < plane_list.size(); ++f) {
    IntVec a(n, Int(0));
    for (std::size_t c = 0; c < free_cols.size(); ++c) a[free_cols[c]] = plane_list[f].first[c];
    Rat off(plane_list[f].second, L);
    off.canonicalize();  // mpq_class(num, den) does not reduce
    lifted.emplace_back(canonical_halfspace(P.equalities_, a, off), f);
  }
  std::sort(lifted.begin(), lifted.end(),
            [](const auto& x, const auto& y) { return x.first.normal < y.first.normal; });
  std::vector<std::size_t> rank_of(plane_list.size());
  for (std::size_t r = 0; r < lifted.size(); ++r) {
    rank_of[lifted[r].second] = r;
    P.facets_.push_back(lifted[r].first);
  }

  const std::size_t V = vert_ids.size(), F = P.facets_.size();
  P.vertices_.reserve(V);
  for (auto i : vert_ids) P.vertices_.push_back(pts[i]);
  P.facet_vertices_.assign(F, Bits(V));
  P.vertex_facets_.assign(V, Bits(F));
  for (std::size_t v = 0; v < V; ++v)
    for (auto f : tight_of[v]) {
      P.facet_vertices_[rank_of[f]].set(v);
      P.vertex_facets_[v].set(rank_of[f]);
    }
  return P;
}

HRep facets_of(const Polytope& p) { return {p.equalities(), p.facets()}; }

// ---------------------------------------------------------------------------

namespace {

// Bounded iff the recession cone {y : E y = 0, H y >= 0} is {0}.
bool recession_cone_trivial(const std::vector<Hyperplane>& eqs, const std::vector<Halfspace>& hs,
                            std::size_t n) {
  // Variables: y+ (n), y- (n), slacks (|hs|). Rows: E y = 0, H y - s = 0, sign * y_i = 1.
  const std::size_t m = eqs.size() + hs.size() + 1;
  for (std::size_t i = 0; i < n; ++i)
    for (int sign : {1, -1}) {
      std::vector<Vec> cols(2 * n + hs.size(), Vec(m, Rat(0)));
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < eqs.size(); ++r) {
          cols[j][r] = eqs[r].normal[j];
          cols[n + j][r] = -eqs[r].normal[j];
        }
        for (std::size_t r = 0; r < hs.size(); ++r) {
          cols[j][eqs.size() + r] = hs[r].normal[j];
          cols[n + j][eqs.size() + r] = -hs[r].normal[j];
        }
      }
      for (std::size_t r = 0; r < hs.size(); ++r) cols[2 * n + r][eqs.size() + r] = -1;
      cols[i][m - 1] = sign;
      cols[n + i][m - 1] = -sign;
      Vec b(m, Rat(0));
      b[m - 1] = 1;
      if (has_nonnegative_solution(cols, b)) return false;
    }
  return true;
}

struct EchelonRow {
  Vec row;  // coefficients followed by the right-hand side
  std::size_t pivot;
};

// Reduces r against the echelon rows; returns false if r becomes zero on the
// coefficient part.
bool reduce_into(const std::vector<EchelonRow>& ech, Vec& r, std::size_t n, std::size_t& pivot) {
  for (const auto& e : ech) {
    if (sgn(r[e.pivot]) == 0) continue;
    Rat f = r[e.pivot];
    for (std::size_t j = 0; j <= n; ++j)
      if (sgn(e.row[j]) != 0) r[j] -= f * e.row[j];
  }
  for (std::size_t j = 0; j < n; ++j)
    if (sgn(r[j]) != 0) {
      pivot = j;
      Rat inv = 1 / r[j];
      for (auto& x : r) x *= inv;
      return true;
    }
  return false;
}

Vec back_substitute(const std::vector<EchelonRow>& ech, std::size_t n) {
  // Full rank: make the system reduced, then read the solution.
  std::vector<EchelonRow> rows(ech);
  for (std::size_t i = rows.size(); i-- > 0;)
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == i || sgn(rows[k].row[rows[i].pivot]) == 0) continue;
      Rat f = rows[k].row[rows[i].pivot];
      for (std::size_t j = 0; j <= n; ++j)
        if (sgn(rows[i].row[j]) != 0) rows[k].row[j] -= f * rows[i].row[j];
    }
  Vec x(n, Rat(0));
  for (const auto& r : rows) x[r.pivot] = r.row[n];
  return x;
}

}  // namespace

Polytope vertices_from_hrep(const std::vector<Hyperplane>& equalities,
                            const std::vector<Halfspace>& halfspaces, std::size_t n,
                            std::optional<std::chrono::steady_clock::time_point> deadline) {
  for (const auto& e : equalities)
    if (e.normal.size() != n) throw std::invalid_argument("equality dimension mismatch");
  for (const auto& h : halfspaces)
    if (h.normal.size() != n) throw std::invalid_argument("half-space dimension mismatch");

  std::vector<EchelonRow> base;
  for (const auto& e : equalities) {
    Vec r = to_vec(e.normal);
    r.push_back(e.offset);
    std::size_t piv;
    if (reduce_into(base, r, n, piv)) {
      base.push_back({std::move(r), piv});
    } else if (sgn(r[n]) != 0) {
      throw std::invalid_argument("infeasible system");
    }
  }
  if (!recession_cone_trivial(equalities, halfspaces, n)) throw std::invalid_argument("unbounded system");
  const std::size_t need = n - base.size();

  auto feasible = [&](const Vec& x) {
    for (const auto& h : halfspaces)
      if (!h.contains(x)) return false;
    return true;
  };

  std::set<Vec> found;
  std::size_t leaves = 0;
  std::vector<EchelonRow> ech(base);
  // Depth-first over increasing half-space indices, pruning dependent rows.
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (ech.size() == n) {
      if (deadline && (++leaves & 1023) == 0 && std::chrono::steady_clock::now() > *deadline)
        throw std::runtime_error("time budget exceeded");
      Vec x = back_substitute(ech, n);
      if (feasible(x)) found.insert(std::move(x));
      return;
    }
    const std::size_t remaining = n - ech.size();
    for (std::size_t i = start; i + remaining <= halfspaces.size(); ++i) {
      Vec r = to_vec(halfspaces[i].normal);
      r.push_back(halfspaces[i].offset);
      std::size_t piv;
      if (!reduce_into(ech, r, n, piv)) continue;
      ech.push_back({std::move(r), piv});
      self(self, i + 1);
      ech.pop_back();
    }
  };
  if (need == 0) {
    Vec x = back_substitute(ech, n);
    if (feasible(x)) found.insert(x);
  } else {
    dfs(dfs, 0);
  }
  if (found.empty()) throw std::invalid_argument("infeasible system");
  return hull(std::vector<Vec>(found.begin(), found.end()));
}

// ---------------------------------------------------------------------------

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  if (p.empty() || q.empty()) throw std::invalid_argument("empty summand");
  std::vector<Vec> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& v : p.vertices())
    for (const auto& w : q.vertices()) {
      Vec s(v);
      for (std::size_t j = 0; j < s.size(); ++j) s[j] += w[j];
      pts.push_back(std::move(s));
    }
  return hull(pts);
}

Polytope scale(const Rat& lambda, const Polytope& p) {
  if (sgn(lambda) <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Vec> pts(p.vertices());
  for (auto& v : pts)
    for (auto& x : v) x *= lambda;
  return hull(pts);
}

Polytope translate(const Vec& t, const Polytope& p) {
  if (t.size() != p.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<Vec> pts(p.vertices());
  for (auto& v : pts)
    for (std::size_t j = 0; j < t.size(); ++j) v[j] += t[j];
  return hull(pts);
}

Rat support_value(const Polytope& p, const Vec& direction) {
  if (p.empty()) throw std::invalid_argument("empty polytope");
  Rat best = dot(direction, p.vertices().front());
  for (const auto& v : p.vertices()) best = std::max(best, dot(direction, v));
  return best;
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const Polytope& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t V = p.vertices().size(), F = p.facets().size();
  const std::size_t need = p.dim() >= 1 ? p.dim() - 1 : 0;
  for (std::size_t u = 0; u < V; ++u)
    for (std::size_t v = u + 1; v < V; ++v) {
      Bits common = p.vertex_facets(u) & p.vertex_facets(v);
      if (common.count() < need) continue;
      Bits face(V);
      face.set();
      for (std::size_t f = 0; f < F; ++f)
        if (common.test(f)) face &= p.facet_vertices(f);
      if (face.count() == 2) out.emplace_back(u, v);
    }
  return out;
}

Polytope cut_with_halfspace(const Polytope& p, const Halfspace& h) {
  const auto& V = p.vertices();
  std::vector<Rat> val;
  val.reserve(V.size());
  for (const auto& v : V) val.push_back(h.evaluate(v) - h.offset);
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < V.size(); ++i)
    if (sgn(val[i]) >= 0) pts.push_back(V[i]);
  if (pts.empty()) throw std::invalid_argument("empty cut");
  if (pts.size() == V.size()) return p;
  for (auto [u, v] : edges(p)) {
    if (sgn(val[u]) * sgn(val[v]) >= 0) continue;
    Rat t = val[u] / (val[u] - val[v]);
    Vec x(V[u]);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += t * (V[v][j] - V[u][j]);
    pts.push_back(std::move(x));
  }
  return hull(pts);
}

Bits face_from_facets(const Polytope& p, const std::vector<std::size_t>& facet_ids) {
  Bits face(p.vertices().size());
  face.set();
  for (auto f : facet_ids) {
    if (f >= p.facets().size()) throw std::out_of_range("facet id out of range");
    face &= p.facet_vertices(f);
  }
  return face;
}

std::vector<std::size_t> facets_containing(const Polytope& p, const Bits& face) {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < p.facets().size(); ++f)
    if (face.is_subset_of(p.facet_vertices(f))) out.push_back(f);
  return out;
}

std::vector<Vec> select_vertices(const Polytope& p, const Bits& subset) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    if (subset.test(i)) out.push_back(p.vertices()[i]);
  return out;
}

Bits vertex_subset(const Polytope& p, const std::vector<Vec>& points) {
  Bits b(p.vertices().size());
  for (const auto& x : points) {
    auto i = p.vertex_index(x);
    if (!i) throw std::invalid_argument("point " + to_string(x) + " is not a vertex");
    b.set(*i);
  }
  return b;
}

Truncation truncate_at_face(const Polytope& p, const std::vector<std::size_t>& facet_ids, const Rat& c) {
  if (sgn(c) <= 0 || c >= 1) throw std::invalid_argument("truncation depth must lie in (0,1)");
  if (facet_ids.empty()) throw std::invalid_argument("no facets given");
  Bits face = face_from_facets(p, facet_ids);
  if (face.none()) throw std::invalid_argument("facets do not meet");
  if (face.count() == p.vertices().size()) throw std::invalid_argument("face is the whole polytope");
  for (std::size_t f = 0; f < p.facets().size(); ++f)
    if (p.facet_vertices(f) == face) throw std::invalid_argument("face is a facet");

  IntVec a(p.ambient_dim(), Int(0));
  for (auto f : facet_ids)
    for (std::size_t j = 0; j < a.size(); ++j) a[j] += p.facets()[f].normal[j];
  std::optional<Rat> m0, m1;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    Rat val = dot(a, p.vertices()[i]);
    if (face.test(i)) {
      if (m0 && *m0 != val) throw std::logic_error("truncation normal not constant on the face");
      m0 = val;
    } else if (!m1 || val < *m1) {
      m1 = val;
    }
  }
  if (*m1 <= *m0) throw std::invalid_argument("face is not the minimum of the truncation normal");
  Halfspace h{a, *m0 + c * (*m1 - *m0)};
  Polytope cut = cut_with_halfspace(p, h);
  return {std::move(cut), p.canonical(h.normal, h.offset)};
}

bool is_simple(const Polytope& p) {
  for (std::size_t v = 0; v < p.vertices().size(); ++v)
    if (p.vertex_facets(v).count() != p.dim()) return false;
  return true;
}

Cone normal_cone_at_vertex(const Polytope& p, const Vec& v) {
  auto i = p.vertex_index(v);
  if (!i) throw std::invalid_argument("not a vertex: " + to_string(v));
  std::vector<IntVec> gens;
  const Bits& tight = p.vertex_facets(*i);
  for (std::size_t f = 0; f < p.facets().size(); ++f)
    if (tight.test(f)) gens.push_back(negated(p.facets()[f].normal));
  return Cone(p.ambient_dim(), gens);
}

bool normally_equivalent(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim() || p.empty() || q.empty()) return false;
  if (p.equalities().size() != q.equalities().size()) return false;
  for (std::size_t i = 0; i < p.equalities().size(); ++i)
    if (p.equalities()[i].normal != q.equalities()[i].normal) return false;
  if (p.facets().size() != q.facets().size()) return false;
  for (std::size_t i = 0; i < p.facets().size(); ++i)
    if (p.facets()[i].normal != q.facets()[i].normal) return false;
  if (p.vertices().size() != q.vertices().size()) return false;
  // Facets are sorted by normal, so equal normal lists align the bit positions.
  std::vector<Bits> a, b;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) a.push_back(p.vertex_facets(v));
  for (std::size_t v = 0; v < q.vertices().size(); ++v) b.push_back(q.vertex_facets(v));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

FVector f_vector(const Polytope& p) {
  FVector fv;
  fv.counts.assign(p.dim(), 0);
  if (p.dim() == 0) return fv;
  const std::size_t F = p.facets().size();
  std::set<Bits> seen;
  std::vector<Bits> queue;
  for (std::size_t f = 0; f < F; ++f)
    if (seen.insert(p.facet_vertices(f)).second) queue.push_back(p.facet_vertices(f));
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t f = 0; f < F; ++f) {
      Bits x = queue[i] & p.facet_vertices(f);
      if (x.none() || x == queue[i]) continue;
      if (seen.insert(x).second) queue.push_back(std::move(x));
    }
  for (const auto& face : queue) {
    std::vector<IntVec> rows;
    for (const auto& e : p.equalities()) rows.push_back(e.normal);
    for (auto f : facets_containing(p, face)) rows.push_back(p.facets()[f].normal);
    std::size_t d = p.ambient_dim() - rank(rows);
    ++fv.counts.at(d);
  }
  return fv;
}

}  // namespace pa
