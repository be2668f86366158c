#include <doctest.h>

#include "support.hpp"

using namespace t;

namespace {

const std::vector<Vec> kTrapezoid{V({1, 3, 1}), V({3, 1, 1}), V({2, 1, 2}), V({1, 2, 2})};

// Vertices of the nestohedron for {{1,2,4},{1,2},{1}} and {{1,2,4},{1,2}}.
const Vec A = V({1, 3, 2, 1}), B = V({3, 1, 2, 1}), C = V({2, 1, 2, 2}), D = V({1, 2, 2, 2}),
          E = V({1, 4, 1, 1}), F = V({4, 1, 1, 1}), G = V({2, 1, 1, 3}), H = V({1, 2, 1, 3});

// The twenty vertices listed for {{1,2,3},{1,2}}, n = 4.
const std::vector<Vec> kN4 = {
    V({6, 1, 1, 1, 1}), V({1, 6, 1, 1, 1}), V({2, 1, 5, 1, 1}), V({1, 2, 5, 1, 1}), V({1, 2, 3, 3, 1}),
    V({4, 1, 1, 3, 1}), V({3, 1, 1, 3, 2}), V({1, 4, 1, 3, 1}), V({2, 1, 3, 3, 1}), V({1, 2, 3, 1, 3}),
    V({2, 1, 2, 3, 2}), V({1, 2, 2, 3, 2}), V({4, 1, 1, 1, 3}), V({1, 4, 1, 1, 3}), V({1, 3, 1, 2, 3}),
    V({2, 1, 3, 1, 3}), V({3, 1, 1, 2, 3}), V({2, 1, 2, 2, 3}), V({1, 2, 2, 2, 3}), V({1, 3, 1, 3, 2})};

std::vector<Beta> non_singletons(int n) {
  std::vector<Beta> out;
  for (const auto& b : enumerate_B1(n))
    if (b.k() >= 2) out.push_back(b);
  return out;
}

}  // namespace

TEST_CASE("standard_simplex") {
  CHECK(standard_simplex({1}, 2).vertices() == std::vector<Vec>{V({1, 0, 0})});
  auto tri = standard_simplex({1, 2, 3}, 2);
  CHECK(tri.dim() == 2);
  CHECK(as_set(tri.vertices()) == as_set({V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})}));
  auto seg = standard_simplex({1, 2}, 2);
  CHECK(seg.dim() == 1);
  CHECK(seg.facets().size() == 2);
}

TEST_CASE("permutohedron") {
  auto p2 = permutohedron(2);
  CHECK(as_set(p2.poly.vertices()) == as_set(permutations_of(V({1, 2, 4}))));
  auto p3 = permutohedron(3);
  CHECK(p3.poly.vertices().size() == 24);
  CHECK(p3.poly.facets().size() == 14);
  CHECK(p3.poly.equalities()[0].offset == 15);
  for (int n = 2; n <= 3; ++n) {
    auto p = permutohedron(n);
    CHECK(p.labels.size() == p.poly.facets().size());
    for (std::size_t f = 0; f < p.poly.facets().size(); ++f) {
      const Beta& b = p.label(f);
      CHECK(b.k() == 1);
      // x_B >= 2^|B| - 1
      CHECK(p.poly.facets()[f].offset == (1 << b.min_block.size()) - 1);
      IntVec a(n + 1, 0);
      for (int i : b.min_block) a[i - 1] = 1;
      CHECK(p.poly.facets()[f].normal == p.poly.canonical(a, 0).normal);
    }
  }
}

TEST_CASE("nestohedra of small chains") {
  CHECK(as_set(nestohedron(b_beta(chain({{1, 2}, {1}}, 2), 2)).vertices()) == as_set(kTrapezoid));
  auto p8 = nestohedron(b_beta(chain({{1, 2, 4}, {1, 2}, {1}}, 3), 3));
  CHECK(as_set(p8.vertices()) == as_set({A, B, C, D, E, F, G, H}));
  auto p10 = nestohedron(b_beta(chain({{1, 2}, {1}}, 3), 3));
  CHECK(as_set(p10.vertices()) ==
        as_set({V({1, 3, 3, 1}), V({3, 1, 3, 1}), V({2, 1, 3, 2}), V({1, 2, 3, 2}), V({1, 5, 1, 1}),
                V({5, 1, 1, 1}), V({3, 1, 1, 3}), V({1, 3, 1, 3}), V({2, 1, 2, 3}), V({1, 2, 2, 3})}));
  auto p20 = nestohedron(b_beta(chain({{1, 2, 3}, {1, 2}}, 4), 4));
  CHECK(as_set(p20.vertices()) == as_set(kN4));
  CHECK(nestohedron(BuildingSet{2, {{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}}}).vertices().size() == 5);
  CHECK_THROWS_AS(nestohedron(BuildingSet{3, {{1}, {2}, {3}, {4}, {1, 2}, {2, 3}, {1, 2, 3, 4}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(nestohedron(BuildingSet{2, {{1}, {2}, {3}, {1, 2}}}), std::invalid_argument);
}

TEST_CASE("nestohedron_hrep") {
  auto h = nestohedron_hrep(chain({{1, 2}, {1}}, 2), 2);
  REQUIRE(h.equalities.size() == 1);
  CHECK(h.equalities[0].offset == 5);
  std::set<std::pair<IntVec, Rat>> rows;
  for (const auto& f : h.facets) rows.insert({f.normal, f.offset});
  CHECK(rows.count({I({1, 0, 0}), 1}));
  CHECK(rows.count({I({1, 1, 0}), 3}));
  CHECK(nestohedron_hrep(chain({{1, 2, 4}, {1, 2}, {1}}, 3), 3).equalities[0].offset == 7);
  CHECK(nestohedron_hrep(chain({{1, 2, 3}, {1, 2}}, 4), 4).equalities[0].offset == 10);

  for (int n = 2; n <= 3; ++n)
    for (const auto& b : non_singletons(n)) {
      auto hr = nestohedron_hrep(b, n);
      auto P = nestohedron(b_beta(b, n));
      CHECK(vertices_from_hrep(hr.equalities, hr.facets, static_cast<std::size_t>(n + 1)) == P);
    }
  auto b4 = chain({{1, 2, 3}, {1, 2}}, 4);
  auto h4 = nestohedron_hrep(b4, 4);
  CHECK(as_set(vertices_from_hrep(h4.equalities, h4.facets, 5).vertices()) == as_set(kN4));
}

TEST_CASE("nestohedron vertex invariants") {
  auto run = [](const Beta& b, int n) {
    auto Bb = b_beta(b, n);
    auto P = nestohedron(Bb);
    CHECK(P.vertices().size() == maximal_nested_sets(Bb).size());
    for (const auto& v : P.vertices()) {
      Rat s = 0;
      for (const auto& x : v) {
        CHECK(x.get_den() == 1);
        CHECK(x > 0);
        s += x;
      }
      CHECK(s == static_cast<long>(Bb.blocks.size()));
      CHECK(kappa_beta(b, v).get_den() == 1);
    }
    // vertices next to F_beta sit exactly one above the minimum
    auto fb = f_beta_and_m(b, n);
    Bits face = vertex_subset(P, fb.face);
    for (auto [u, w] : edges(P)) {
      if (face.test(u) == face.test(w)) continue;
      std::size_t out = face.test(u) ? w : u;
      CHECK(kappa_beta(b, P.vertices()[out]) == fb.m + 1);
    }
  };
  for (int n = 2; n <= 3; ++n)
    for (const auto& b : non_singletons(n)) run(b, n);
  run(chain({{1, 2, 3}, {1, 2}}, 4), 4);
}

TEST_CASE("kappa_beta") {
  CHECK(kappa_beta(chain({{1, 2}, {1}}, 2), V({1, 2, 2})) == 4);
  CHECK(kappa_beta(chain({{1, 2, 4}, {1, 2}, {1}}, 3), D) == 9);
  CHECK(kappa_beta(chain({{1, 2, 4}, {1, 2}}, 3), C) == 8);
}

TEST_CASE("f_beta_and_m") {
  auto a = f_beta_and_m(chain({{1, 2}, {1}}, 2), 2);
  CHECK(a.m == 4);
  CHECK(a.face == std::vector<Vec>{V({1, 2, 2})});

  auto b = f_beta_and_m(chain({{1, 2}, {1}}, 3), 3);
  CHECK(b.m == 4);
  CHECK(b.face.size() == 2);

  auto c = f_beta_and_m(chain({{1, 2, 4}, {1, 2}, {1}}, 3), 3);
  CHECK(c.m == 9);
  CHECK(c.face == std::vector<Vec>{D});

  auto d = f_beta_and_m(chain({{1, 2, 4}, {1, 2}}, 3), 3);
  CHECK(d.m == 8);
  CHECK(as_set(d.face) == as_set({C, D}));

  // n = 4: the minimum is 8 on four vertices; the next level, 9, holds the
  // four below.
  auto e = f_beta_and_m(chain({{1, 2, 3}, {1, 2}}, 4), 4);
  CHECK(e.m == 8);
  CHECK(as_set(e.face) ==
        as_set({V({2, 1, 2, 3, 2}), V({1, 2, 2, 3, 2}), V({2, 1, 2, 2, 3}), V({1, 2, 2, 2, 3})}));
  for (const auto& v : {V({1, 2, 3, 3, 1}), V({1, 2, 3, 1, 3}), V({1, 3, 1, 2, 3}), V({1, 3, 1, 3, 2})})
    CHECK(kappa_beta(chain({{1, 2, 3}, {1, 2}}, 4), v) == 9);
}

TEST_CASE("F_beta is the face cut out by the blocks of beta") {
  auto check = [](const Beta& b, int n) {
    auto P = nestohedron(b_beta(b, n));
    auto hr = nestohedron_hrep(b, n);
    std::vector<std::size_t> ids;
    for (const auto& blk : b.chain()) {
      IntVec a(n + 1, 0);
      for (int i : blk) a[i - 1] = 1;
      Rat off;
      for (const auto& f : hr.facets)
        if (f.normal == a) off = f.offset;
      auto idx = P.facet_index(P.canonical(a, off).normal);
      REQUIRE(idx);
      ids.push_back(*idx);
    }
    auto fb = f_beta_and_m(b, n);
    CHECK(face_from_facets(P, ids) == vertex_subset(P, fb.face));
  };
  for (int n = 2; n <= 3; ++n)
    for (const auto& b : non_singletons(n)) check(b, n);
  check(chain({{1, 2, 3}, {1, 2}}, 4), 4);
}

TEST_CASE("nested sets at F_beta are full flags containing beta") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& b : non_singletons(n)) {
      auto Bb = b_beta(b, n);
      auto hr = nestohedron_hrep(b, n);
      auto fb = f_beta_and_m(b, n);
      auto face = as_set(fb.face);
      auto P = nestohedron(Bb);
      for (const auto& N : maximal_nested_sets(Bb)) {
        // the vertex of N: tight on sum_{i in A} x_i >= |B|A| for A in N
        std::vector<Vec> tight;
        for (const auto& v : P.vertices()) {
          bool ok = true;
          for (const auto& blk : N) {
            Rat s = 0;
            for (int i : blk) s += v[i - 1];
            long cnt = 0;
            for (const auto& c : Bb.blocks) cnt += is_subset(c, blk);
            ok &= s == cnt;
          }
          if (ok) tight.push_back(v);
        }
        REQUIRE(tight.size() == 1);
        if (!face.count(tight[0])) continue;
        std::vector<std::size_t> sizes;
        for (const auto& blk : N) sizes.push_back(blk.size());
        std::sort(sizes.begin(), sizes.end());
        std::vector<std::size_t> flag(n);
        std::iota(flag.begin(), flag.end(), 1);
        CHECK(sizes == flag);
        for (std::size_t i = 0; i + 1 < N.size(); ++i)
          for (std::size_t j = i + 1; j < N.size(); ++j) CHECK((is_subset(N[i], N[j]) || is_subset(N[j], N[i])));
        for (const auto& blk : b.chain()) CHECK(std::find(N.begin(), N.end(), blk) != N.end());
      }
    }
}

TEST_CASE("n_beta") {
  CHECK(as_set(n_beta(chain({{1, 2}, {1}}, 2), 2).vertices()) ==
        as_set({V({1, 3, 1}), V({3, 1, 1}), V({2, 1, 2})}));
  auto n7 = n_beta(chain({{1, 2, 4}, {1, 2}, {1}}, 3), 3);
  CHECK(as_set(n7.vertices()) == as_set({A, B, C, E, F, G, H}));
  auto n8 = n_beta(chain({{1, 2}, {1}}, 3), 3);
  CHECK(as_set(n8.vertices()) ==
        as_set({V({1, 3, 1, 3}), V({2, 1, 2, 3}), V({1, 3, 3, 1}), V({2, 1, 3, 2}), V({3, 1, 3, 1}),
                V({1, 5, 1, 1}), V({5, 1, 1, 1}), V({3, 1, 1, 3})}));
  CHECK_FALSE(is_simple(n8));
  for (int n = 2; n <= 3; ++n)
    for (const auto& b : non_singletons(n)) {
      auto N = n_beta(b, n);
      CHECK(N.dim() == static_cast<std::size_t>(n));
      CHECK(N == n_beta_c(b, n, 1));
    }
}

TEST_CASE("n_beta_c") {
  auto b = chain({{1, 2}, {1}}, 2);
  auto pent = n_beta_c(b, 2, Rat(1, 2));
  CHECK(pent.vertices().size() == 5);
  CHECK(pent.facets().size() == 5);
  CHECK_THROWS_AS(n_beta_c(b, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(n_beta_c(b, 2, Rat(3, 2)), std::invalid_argument);
  for (int n = 2; n <= 3; ++n)
    for (const auto& bb : non_singletons(n)) {
      auto x = n_beta_c(bb, n, Rat(1, 3)), y = n_beta_c(bb, n, Rat(3, 4));
      CHECK(normally_equivalent(x, y));
      auto P = nestohedron(b_beta(bb, n));
      if (f_beta_and_m(bb, n).face.size() == 1 && is_simple(P))
        CHECK(x.facets().size() == P.facets().size() + 1);
    }
}

TEST_CASE("phi_2d") {
  auto b = chain({{1, 2}, {1}}, 2);
  auto phi = phi_2d(b, 2);
  CHECK(as_set(phi.vertices()) == as_set({V({0, 2, 0}), V({1, 0, 1}), V({2, 0, 0})}));
  for (const auto& bb : non_singletons(2)) CHECK(translate(V({1, 1, 1}), phi_2d(bb, 2)) == n_beta(bb, 2));
  CHECK_THROWS_AS(phi_2d(chain({{1, 2}, {1}}, 3), 3), std::invalid_argument);
}

TEST_CASE("nestohedron plus N_beta") {
  auto b = chain({{1, 2, 4}, {1, 2}, {1}}, 3);
  auto S = minkowski_sum(nestohedron(b_beta(b, 3)), n_beta(b, 3));
  for (const auto& v : {V({2, 4, 2, 6}), V({2, 5, 4, 3}), V({2, 4, 3, 5}), V({3, 3, 4, 4}), V({2, 6, 4, 2}),
                        V({6, 2, 4, 2})})
    CHECK(S.vertex_index(v));

  // truncating at the edge CD matches the sum
  auto b2 = chain({{1, 2, 4}, {1, 2}}, 3);
  auto P = nestohedron(b_beta(b2, 3));
  auto face = vertex_subset(P, {C, D});
  auto tr = truncate_at_face(P, facets_containing(P, face), Rat(1, 2));
  CHECK(normally_equivalent(minkowski_sum(P, n_beta(b2, 3)), tr.poly));
}

TEST_CASE("reference_kappa") {
  CHECK(reference_kappa(2, 1, 0) == 3);
  CHECK(reference_kappa(2, 1, 1) == 9);
  CHECK(reference_kappa(2, 2, 0) == Rat(25, 2));
  CHECK(reference_kappa(3, 2, 0) == 12 + Rat(3, 23));
  for (int n = 2; n <= 5; ++n) CHECK(reference_kappa(n, 1, 0) == 3);
  CHECK_THROWS_AS(reference_kappa(2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(reference_kappa(2, 2, 1), std::invalid_argument);
}

TEST_CASE("reference_pa") {
  auto r2 = reference_pa(2);
  CHECK(r2.poly.vertices().size() == 12);
  CHECK(r2.poly.facets().size() == 12);
  CHECK(r2.labels.size() == 12);
  CHECK(r2.poly.equalities()[0].offset == 27);
  auto r3 = reference_pa(3);
  CHECK(f_vector(r3.poly).counts == std::vector<std::size_t>{120, 180, 62});
  CHECK(is_simple(r3.poly));
  CHECK(r3.labels.size() == 62);
}

TEST_CASE("assembly order") {
  for (int n = 2; n <= 4; ++n) {
    auto order = assembly_order(n);
    CHECK(static_cast<long>(order.size()) == b1_count(n) - ((1L << (n + 1)) - 2));
    for (std::size_t i = 1; i < order.size(); ++i) CHECK(order[i - 1].k() >= order[i].k());
  }
  CHECK(assembly_order(2).size() == 6);
  CHECK(assembly_order(3).size() == 48);
}

TEST_CASE("dodecagon") {
  auto P = assemble_pa(2, 1, false).result;
  std::set<Vec> want;
  for (const auto& base : {V({1, 5, 13}), V({2, 3, 14})})
    for (const auto& p : permutations_of(base)) want.insert(add(p, V({6, 6, 6})));
  CHECK(as_set(P.poly.vertices()) == want);
  CHECK(P.labels.size() == 12);

  // the same polygon from the simplex, the singleton simplices and the phi triangles
  Polytope M = standard_simplex({1, 2, 3}, 2);
  for (const auto& b : enumerate_B1(2))
    M = minkowski_sum(M, b.k() == 1 ? standard_simplex(b.min_block, 2) : phi_2d(b, 2));
  CHECK(translate(V({6, 6, 6}), M) == P.poly);
}

TEST_CASE("assembly at n = 3 and the c family") {
  auto as = assemble_pa(3, 1, true);
  const auto& P = as.result;
  CHECK(f_vector(P.poly).counts == std::vector<std::size_t>{120, 180, 62});
  CHECK(is_simple(P.poly));
  CHECK(P.labels.size() == 62);
  for (const auto& b : enumerate_B1(3)) CHECK(P.facet_of(b));
  REQUIRE(as.log.steps.size() == 48);
  for (std::size_t i = 0; i < as.log.steps.size(); ++i) {
    const auto& st = as.log.steps[i];
    if (i) CHECK(as.log.steps[i - 1].beta.k() >= st.beta.k());
    CHECK(st.after.facets().size() == st.before.facets().size() + 1);
    CHECK(is_simple(st.after));
    CHECK(st.face == face_from_facets(st.before, st.face_facets));
    CHECK(st.face.any());
  }
  CHECK(normally_equivalent(assemble_pa(3, Rat(1, 2), false).result.poly, P.poly));
  CHECK_THROWS_AS(assemble_pa(1, 1, false), std::invalid_argument);
  CHECK_THROWS_AS(assemble_pa(2, 0, false), std::invalid_argument);
}

TEST_CASE("partial assembly") {
  auto as = assemble_pa(3, 1, true, 5);
  CHECK(as.log.steps.size() == 5);
  CHECK(as.result.poly.facets().size() == 14 + 5);
}

TEST_CASE("order spot check at n = 2") {
  auto P = assemble_pa(2, 1, false).result.poly;
  // equal-|beta| summands in reverse order
  Polytope S = permutohedron(2).poly;
  auto order = assembly_order(2);
  std::reverse(order.begin(), order.end());
  for (const auto& b : order) S = minkowski_sum(S, n_beta_c(b, 2, 1));
  CHECK(S == P);
}
