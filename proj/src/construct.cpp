#include "pa/construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace pa {

namespace {

Block full_block(int n) {
  Block b;
  for (int i = 1; i <= n + 1; ++i) b.push_back(i);
  return b;
}

Polytope fold_simplices(const std::vector<Block>& blocks, int n) {
  Polytope sum = standard_simplex(blocks.front(), n);
  for (std::size_t i = 1; i < blocks.size(); ++i) sum = minkowski_sum(sum, standard_simplex(blocks[i], n));
  return sum;
}

// Attaches labels by matching canonical kappa normals to facets. Every label
// must hit a facet and every facet must receive exactly one label.
LabeledPolytope attach_labels(Polytope poly, const std::vector<Beta>& betas, int n) {
  LabeledPolytope lp{std::move(poly), {}};
  for (const auto& b : betas) {
    IntVec key = lp.poly.canonical(b.kappa_normal(n), 0).normal;
    if (!lp.poly.facet_index(key)) throw std::runtime_error("no facet for label " + to_string(b));
    if (!lp.labels.emplace(key, b).second) throw std::runtime_error("duplicate facet key for " + to_string(b));
  }
  if (lp.labels.size() != lp.poly.facets().size()) throw std::runtime_error("unlabeled facets remain");
  return lp;
}

void check_c(const Rat& c) {
  if (sgn(c) <= 0 || c > 1) throw std::invalid_argument("c must lie in (0,1]");
}

}  // namespace

const Beta& LabeledPolytope::label(std::size_t f) const {
  auto it = labels.find(poly.facets().at(f).normal);
  if (it == labels.end()) throw std::runtime_error("unlabeled facet " + to_string(poly.facets()[f].normal));
  return it->second;
}

std::optional<std::size_t> LabeledPolytope::facet_of(const Beta& b) const {
  for (const auto& [key, lab] : labels)
    if (lab == b) return poly.facet_index(key);
  return std::nullopt;
}

Polytope standard_simplex(const Block& I, int n) {
  if (I.empty()) throw std::invalid_argument("empty index set");
  std::vector<Vec> pts;
  for (int i : I) {
    if (i < 1 || i > n + 1) throw std::invalid_argument("index out of range");
    Vec e(static_cast<std::size_t>(n + 1), Rat(0));
    e[static_cast<std::size_t>(i - 1)] = 1;
    pts.push_back(std::move(e));
  }
  return hull(pts);
}

LabeledPolytope permutohedron(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Block> blocks{full_block(n)};
  std::vector<Beta> labels;
  for (const auto& b : enumerate_B1(n))
    if (b.k() == 1) {
      blocks.push_back(b.min_block);
      labels.push_back(b);
    }
  return attach_labels(fold_simplices(blocks, n), labels, n);
}

Polytope nestohedron(const BuildingSet& B) {
  if (!is_building_set(B.blocks, B.n)) throw std::invalid_argument("not a building set");
  auto full = full_block(B.n);
  if (std::find(B.blocks.begin(), B.blocks.end(), full) == B.blocks.end())
    throw std::invalid_argument("building set must contain the ground set");
  return fold_simplices(B.blocks, B.n);
}

HRep nestohedron_hrep(const Beta& beta, int n) {
  auto B = b_beta(beta, n);
  const auto full = full_block(n);
  HRep h;
  h.equalities.push_back({all_ones(static_cast<std::size_t>(n + 1)), Rat(static_cast<long>(B.blocks.size()))});
  for (const auto& A : B.blocks) {
    if (A == full) continue;
    long count = std::count_if(B.blocks.begin(), B.blocks.end(), [&](const Block& b) { return is_subset(b, A); });
    IntVec chi(static_cast<std::size_t>(n + 1), Int(0));
    for (int i : A) chi[static_cast<std::size_t>(i - 1)] = 1;
    h.facets.push_back({std::move(chi), Rat(count)});
  }
  return h;
}

Rat kappa_beta(const Beta& beta, const Vec& x) {
  return dot(beta.kappa_normal(static_cast<int>(x.size()) - 1), x);
}

FBeta f_beta_and_m(const Beta& beta, int n) {
  Polytope P = nestohedron(b_beta(beta, n));
  FBeta r;
  bool first = true;
  for (const auto& v : P.vertices()) {
    Rat k = kappa_beta(beta, v);
    if (first || k < r.m) {
      r.m = k;
      r.face.clear();
      first = false;
    }
    if (k == r.m) r.face.push_back(v);
  }
  return r;
}

Polytope n_beta(const Beta& beta, int n) {
  Polytope P = nestohedron(b_beta(beta, n));
  auto fb = f_beta_and_m(beta, n);
  std::vector<Vec> pts;
  for (const auto& v : P.vertices())
    if (kappa_beta(beta, v) > fb.m) pts.push_back(v);
  return hull(pts);
}

Polytope n_beta_c(const Beta& beta, int n, const Rat& c) {
  check_c(c);
  Polytope P = nestohedron(b_beta(beta, n));
  auto fb = f_beta_and_m(beta, n);
  return cut_with_halfspace(P, Halfspace{beta.kappa_normal(n), fb.m + c});
}

Polytope phi_2d(const Beta& beta, int n) {
  if (n != 2) throw std::invalid_argument("phi is defined for n = 2 only");
  validate_beta(beta, n);
  if (beta.k() != 2 || beta.l() != 0) throw std::invalid_argument("phi needs beta = {{i2,i1},{i2}}");
  int i2 = beta.min_block[0], i1 = beta.tail[0], i3 = 6 - i1 - i2;
  auto e = [](int i, int j) {
    Vec v(3, Rat(0));
    v[static_cast<std::size_t>(i - 1)] += 1;
    v[static_cast<std::size_t>(j - 1)] += 1;
    return v;
  };
  return hull({e(i1, i1), e(i2, i3), e(i2, i2)});
}

Rat reference_kappa(int n, int k, int l) {
  if (k < 1 || l < 0 || k + l > n) throw std::invalid_argument("need 1 <= k <= k+l <= n");
  auto p3 = [](int e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(e));
    return r;
  };
  Rat a(p3(k + l + 1) - p3(l + 1), 2);
  Rat b(p3(k) - 3 * k, p3(n) - n - 1);
  a.canonicalize();
  b.canonicalize();
  return a + b;
}

HRep reference_hrep(int n) {
  HRep h;
  Int total;
  mpz_ui_pow_ui(total.get_mpz_t(), 3, static_cast<unsigned long>(n + 1));
  h.equalities.push_back({all_ones(static_cast<std::size_t>(n + 1)), Rat(total)});
  for (const auto& b : enumerate_B1(n))
    h.facets.push_back({b.kappa_normal(n), reference_kappa(n, static_cast<int>(b.k()), static_cast<int>(b.l()))});
  return h;
}

LabeledPolytope reference_pa(int n, std::optional<std::chrono::steady_clock::time_point> deadline) {
  auto h = reference_hrep(n);
  Polytope P = vertices_from_hrep(h.equalities, h.facets, static_cast<std::size_t>(n + 1), deadline);
  return attach_labels(std::move(P), enumerate_B1(n), n);
}

std::vector<Beta> assembly_order(int n) {
  std::vector<Beta> out;
  for (auto& b : enumerate_B1(n))
    if (b.k() >= 2) out.push_back(b);
  std::stable_sort(out.begin(), out.end(), [](const Beta& a, const Beta& b) { return a.k() > b.k(); });
  return out;
}

Assembly assemble_pa(int n, const Rat& c, bool record, std::optional<std::size_t> max_steps) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  check_c(c);
  LabeledPolytope cur = permutohedron(n);
  Assembly out;
  std::size_t done = 0;
  for (const auto& beta : assembly_order(n)) {
    if (max_steps && done++ == *max_steps) break;
    Polytope q = n_beta_c(beta, n, c);
    AssemblyStep step{beta, {}, {}, {}, q, {}, {}};
    if (record) {
      for (const auto& B : beta.chain()) {
        auto f = cur.facet_of(singleton_beta(B));
        if (!f) throw std::runtime_error("missing facet {" + to_string(B) + "}");
        step.face_facets.push_back(*f);
      }
      std::sort(step.face_facets.begin(), step.face_facets.end());
      step.face = face_from_facets(cur.poly, step.face_facets);
      step.truncation = truncate_at_face(cur.poly, step.face_facets, Rat(1, 2)).cut;
    }
    Polytope next = minkowski_sum(cur.poly, q);

    IntVec key = next.canonical(beta.kappa_normal(n), 0).normal;
    if (next.facets().size() != cur.poly.facets().size() + 1)
      throw std::runtime_error("summand for " + to_string(beta) + " did not add exactly one facet");
    if (!next.facet_index(key)) throw std::runtime_error("no facet for label " + to_string(beta));
    for (const auto& [k, lab] : cur.labels)
      if (!next.facet_index(k)) throw std::runtime_error("facet " + to_string(lab) + " disappeared");
    if (!cur.labels.emplace(key, beta).second) throw std::runtime_error("duplicate facet key for " + to_string(beta));

    if (record) {
      step.before = std::move(cur.poly);
      step.after = next;
      out.log.steps.push_back(std::move(step));
    }
    cur.poly = std::move(next);
  }
  out.result = std::move(cur);
  return out;
}

}  // namespace pa
