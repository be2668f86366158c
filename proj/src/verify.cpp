#include "pa/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pa/lp.hpp"

namespace pa {

namespace {

std::vector<std::vector<std::size_t>> neighbours(const Polytope& p) {
  std::vector<std::vector<std::size_t>> nb(p.vertices().size());
  for (auto [u, v] : edges(p)) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  return nb;
}

Vec diff(const Vec& a, const Vec& b) {
  Vec d(a);
  for (std::size_t j = 0; j < d.size(); ++j) d[j] -= b[j];
  return d;
}

// Edge directions v - u over the neighbours u of v: the inequalities of the
// normal cone at v.
std::vector<Vec> cone_rows(const Polytope& p, const std::vector<std::vector<std::size_t>>& nb, std::size_t v) {
  std::vector<Vec> rows;
  for (auto u : nb[v]) rows.push_back(diff(p.vertices()[v], p.vertices()[u]));
  return rows;
}

// Is {c : <r, c> > 0 for all rows r} nonempty? By Gordan's alternative this
// fails iff some nonzero nonnegative combination of the rows vanishes.
bool strictly_feasible(const std::vector<Vec>& rows, std::size_t n) {
  if (rows.empty()) return true;
  std::vector<Vec> cols;
  for (const auto& r : rows) {
    Vec c(r);
    c.push_back(1);
    cols.push_back(std::move(c));
  }
  Vec b(n + 1, Rat(0));
  b[n] = 1;
  return !has_nonnegative_solution(cols, b);
}

Polytope face_polytope(const Polytope& p, const IntVec& a) {
  std::optional<Rat> m;
  for (const auto& v : p.vertices()) {
    Rat x = dot(a, v);
    if (!m || x < *m) m = x;
  }
  std::vector<Vec> pts;
  for (const auto& v : p.vertices())
    if (dot(a, v) == *m) pts.push_back(v);
  return hull(pts);
}

std::string realises_C_witness(const LabeledPolytope& lp, int n) {
  const Polytope& P = lp.poly;
  std::vector<Beta> labs;
  for (std::size_t f = 0; f < P.facets().size(); ++f) labs.push_back(lp.label(f));
  auto b1 = enumerate_B1(n);
  if (labs.size() != b1.size())
    return "facet count " + std::to_string(labs.size()) + " != |B_1| = " + std::to_string(b1.size());
  {
    auto sorted = labs;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != b1) return "labels are not exactly B_1";
  }
  if (!is_simple(P)) return "polytope is not simple";

  std::vector<bool> hit(P.vertices().size(), false);
  std::size_t count = 0;
  for (const auto& N : enumerate_maximal_1_nested(n)) {
    std::vector<std::size_t> ids;
    for (const auto& b : N) ids.push_back(*lp.facet_of(b));
    Bits face = face_from_facets(P, ids);
    std::string name = "{";
    for (std::size_t i = 0; i < N.size(); ++i) name += (i ? "," : "") + to_string(N[i]);
    name += "}";
    if (face.count() != 1) return "maximal 1-nested set " + name + " meets " + std::to_string(face.count()) + " vertices";
    auto v = face.find_first();
    if (hit[v]) return "two maximal 1-nested sets share vertex " + to_string(P.vertices()[v]);
    hit[v] = true;
    ++count;
  }
  if (count != P.vertices().size())
    return std::to_string(count) + " maximal 1-nested sets for " + std::to_string(P.vertices().size()) + " vertices";

  for (std::size_t f = 0; f < labs.size(); ++f)
    for (std::size_t g = f + 1; g < labs.size(); ++g) {
      bool geometric = (P.facet_vertices(f) & P.facet_vertices(g)).any();
      if (geometric != labels_share_vertex(labs[f], labs[g], n))
        return "adjacency mismatch for " + to_string(labs[f]) + " and " + to_string(labs[g]);
    }
  return {};
}

}  // namespace

bool is_f_deformation(const Polytope& p2, const Polytope& p1, const Bits& face, const Halfspace& h) {
  if (p1.ambient_dim() != p2.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < p1.vertices().size(); ++i) {
    int s = sgn(h.evaluate(p1.vertices()[i]) - h.offset);
    if (face.test(i) ? s >= 0 : s <= 0)
      throw std::invalid_argument("half-space does not separate the face from the other vertices");
  }
  Polytope trunc = cut_with_halfspace(p1, h);
  if (p2.equalities().size() != trunc.equalities().size()) return false;
  for (std::size_t i = 0; i < p2.equalities().size(); ++i)
    if (p2.equalities()[i].normal != trunc.equalities()[i].normal) return false;

  // (i) facet directions of p2 come from trunc, and the faces in the cut
  // direction agree up to normal equivalence.
  for (const auto& f : p2.facets())
    if (!trunc.facet_index(f.normal)) return false;
  Halfspace cut = trunc.canonical(h.normal, h.offset);
  auto new_facet = trunc.facet_index(cut.normal);
  if (!new_facet) return false;
  Polytope tf = hull(select_vertices(trunc, trunc.facet_vertices(*new_facet)));
  if (!normally_equivalent(face_polytope(p2, cut.normal), tf)) return false;

  // (ii) each vertex of trunc has a counterpart in p2 on the same supporting hyperplanes.
  for (std::size_t u = 0; u < trunc.vertices().size(); ++u) {
    std::vector<Vec> rows;
    Vec rhs;
    for (const auto& e : p2.equalities()) {
      rows.push_back(to_vec(e.normal));
      rhs.push_back(e.offset);
    }
    for (std::size_t f = 0; f < trunc.facets().size(); ++f) {
      if (!trunc.vertex_facets(u).test(f)) continue;
      const IntVec& a = trunc.facets()[f].normal;
      rows.push_back(to_vec(a));
      rhs.push_back(-support_value(p2, to_vec(negated(a))));
    }
    Vec x;
    if (!solve_unique(rows, rhs, x)) return false;
    if (!p2.vertex_index(x)) return false;
  }
  return true;
}

bool check_truncator_step(const Polytope& s_prev, const Polytope& q, const Bits& face) {
  auto ids = facets_containing(s_prev, face);
  auto tr = truncate_at_face(s_prev, ids, Rat(1, 2));
  return normally_equivalent(minkowski_sum(s_prev, q), tr.poly);
}

bool vertex_trunc_identity(const Polytope& p, const Vec& v) {
  if (!is_simple(p)) throw std::invalid_argument("polytope is not simple");
  auto vi = p.vertex_index(v);
  if (!vi) throw std::invalid_argument("not a vertex: " + to_string(v));
  auto nb = neighbours(p);
  std::vector<Vec> mids;
  for (auto u : nb[*vi]) {
    Vec m(v);
    for (std::size_t j = 0; j < m.size(); ++j) m[j] = (m[j] + p.vertices()[u][j]) / 2;
    mids.push_back(std::move(m));
  }
  std::vector<Vec> rows;
  for (std::size_t i = 1; i < mids.size(); ++i) rows.push_back(diff(mids[i], mids[0]));
  std::optional<Vec> a;
  for (auto& cand : null_space(rows, p.ambient_dim()))
    if (sgn(dot(cand, diff(v, mids[0]))) != 0) {
      a = cand;
      break;
    }
  if (!a) throw std::logic_error("edge midpoints do not span a hyperplane");
  if (dot(*a, v) > dot(*a, mids[0]))
    for (auto& x : *a) x = -x;
  Halfspace h{primitive_direction(*a), dot(*a, mids[0]) * primitive_scale(*a)};
  Polytope tr = cut_with_halfspace(p, h);

  std::vector<Vec> rest;
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    if (i != *vi) rest.push_back(p.vertices()[i]);
  Polytope sum = minkowski_sum(p, hull(rest));
  Polytope twice = scale(Rat(2), tr);
  if (sum.vertices().size() != twice.vertices().size()) return false;
  Vec t = diff(sum.vertices()[0], twice.vertices()[0]);
  for (std::size_t i = 0; i < sum.vertices().size(); ++i)
    if (diff(sum.vertices()[i], twice.vertices()[i]) != t) return false;
  return true;
}

bool verify_fan_refinement(const Polytope& p, const Polytope& q) {
  const std::size_t n = p.ambient_dim();
  Polytope s = minkowski_sum(p, q);
  auto nbp = neighbours(p), nbq = neighbours(q), nbs = neighbours(s);

  // (i) every vertex cone of s is the intersection of the cones of its summands.
  for (std::size_t x = 0; x < s.vertices().size(); ++x) {
    std::optional<std::pair<std::size_t, std::size_t>> split;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      auto w = q.vertex_index(diff(s.vertices()[x], p.vertices()[v]));
      if (!w) continue;
      if (split) return false;  // a vertex of a sum decomposes uniquely
      split = std::make_pair(v, *w);
    }
    if (!split) return false;
    auto [v, w] = *split;
    // N_s(x) inside both cones: every outward facet normal at x is maximized at v and at w.
    for (std::size_t f = 0; f < s.facets().size(); ++f) {
      if (!s.vertex_facets(x).test(f)) continue;
      Vec g = to_vec(negated(s.facets()[f].normal));
      if (dot(g, p.vertices()[v]) != support_value(p, g)) return false;
      if (dot(g, q.vertices()[w]) != support_value(q, g)) return false;
    }
    // The intersection inside N_s(x), by Farkas on each edge inequality of s at x.
    auto rows = cone_rows(p, nbp, v);
    auto rq = cone_rows(q, nbq, w);
    rows.insert(rows.end(), rq.begin(), rq.end());
    for (const auto& d : cone_rows(s, nbs, x))
      if (!has_nonnegative_solution(rows, d)) return false;
  }

  // (ii) every full-dimensional intersection is the cone of a vertex of s.
  for (std::size_t v = 0; v < p.vertices().size(); ++v)
    for (std::size_t w = 0; w < q.vertices().size(); ++w) {
      auto rows = cone_rows(p, nbp, v);
      auto rq = cone_rows(q, nbq, w);
      rows.insert(rows.end(), rq.begin(), rq.end());
      if (!strictly_feasible(rows, n)) continue;
      Vec x(p.vertices()[v]);
      for (std::size_t j = 0; j < n; ++j) x[j] += q.vertices()[w][j];
      if (!s.vertex_index(x)) return false;
    }
  return true;
}

bool verify_realises_C(const LabeledPolytope& p, int n) { return realises_C_witness(p, n).empty(); }

bool VerificationReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

VerificationReport verify_minkowski_realisation(int n, const Rat& c, const VerifyOptions& opts) {
  VerificationReport rep;
  rep.n = n;
  rep.c = c;
  auto add = [&](std::string name, std::string witness) {
    bool ok = witness.empty();
    rep.checks.push_back({std::move(name), ok, std::move(witness)});
    return ok;
  };

  rep.partial = opts.partial;
  Assembly as;
  try {
    as = assemble_pa(n, c, true, opts.partial ? opts.max_steps : std::nullopt);
  } catch (const std::exception& e) {
    add("assembly", e.what());
    return rep;
  }
  add("assembly", "");
  const Polytope& P = as.result.poly;

  if (!opts.partial) rep.def_i = add("realises_C", realises_C_witness(as.result, n));

  // The same summands added in another order must give the same polytope.
  if (!opts.partial) {
    Block full;
    for (int i = 1; i <= n + 1; ++i) full.push_back(i);
    Polytope sum = standard_simplex(full, n);
    std::size_t summands = 1;
    for (auto it = as.log.steps.rbegin(); it != as.log.steps.rend(); ++it, ++summands)
      sum = minkowski_sum(sum, it->summand);
    for (const auto& b : enumerate_B1(n))
      if (b.k() == 1) {
        sum = minkowski_sum(sum, standard_simplex(b.min_block, n));
        ++summands;
      }
    std::string w;
    if (summands != enumerate_B1(n).size() + 1) w = "wrong number of summands";
    else if (!(sum == P)) w = "reordered sum differs from the assembled polytope";
    rep.def_ii = add("decomposition", w);
  }

  rep.def_iii = true;
  for (const auto& st : as.log.steps) {
    std::string w;
    try {
      auto tr = truncate_at_face(st.before, st.face_facets, Rat(1, 2));
      IntVec key = st.before.canonical(st.beta.kappa_normal(n), 0).normal;
      if (tr.cut.normal != key) w = "truncation normal " + to_string(tr.cut.normal) + " is not the kappa normal";
      else if (!normally_equivalent(st.after, tr.poly)) w = "sum is not normally equivalent to the truncation";
    } catch (const std::exception& e) {
      w = e.what();
    }
    rep.def_iii &= add("truncator_step " + to_string(st.beta), w);
    ++rep.truncator_steps;
  }

  if (opts.against_reference) {
    std::string w;
    try {
      auto ref = reference_pa(n, opts.deadline);
      if (!normally_equivalent(P, ref.poly)) w = "not normally equivalent to the reference polytope";
    } catch (const std::exception& e) {
      w = e.what();
    }
    add("reference_equivalence", w);
  }
  return rep;
}

}  // namespace pa
