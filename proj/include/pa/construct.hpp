// Simplices, permutohedra, nestohedra, the kappa_beta summands, the reference
// half-space model PA_n and the Minkowski assembly of PA_{n,c}.
#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <vector>

#include "pa/nestedsets.hpp"
#include "pa/polytope.hpp"

namespace pa {

/// A polytope whose facets carry B_1 labels, keyed by canonical facet normal.
struct LabeledPolytope {
  Polytope poly;
  std::map<IntVec, Beta> labels;

  /// Label of facet f; throws if the facet is unlabeled.
  const Beta& label(std::size_t f) const;
  /// Facet carrying the given label, if any.
  std::optional<std::size_t> facet_of(const Beta& b) const;
};

struct AssemblyStep {
  Beta beta;
  Bits face;               // vertices of the partial sum lying on the truncated face
  std::vector<std::size_t> face_facets;  // facets labelled {B} for B in beta
  Halfspace truncation;    // depth-1/2 cut, normal equal to the kappa_beta normal
  Polytope summand;
  Polytope before;
  Polytope after;
};

struct AssemblyLog {
  std::vector<AssemblyStep> steps;
};

Polytope standard_simplex(const Block& I, int n);

LabeledPolytope permutohedron(int n);

/// Minkowski sum of the simplices of a connected building set containing [n+1].
Polytope nestohedron(const BuildingSet& B);

/// sum(x) = |B_beta| and sum_{i in A} x_i >= |{B in B_beta : B subset of A}|.
HRep nestohedron_hrep(const Beta& beta, int n);

Rat kappa_beta(const Beta& beta, const Vec& x);

struct FBeta {
  Rat m;
  std::vector<Vec> face;  // argmin of kappa_beta over the nestohedron vertices
};

FBeta f_beta_and_m(const Beta& beta, int n);

/// Hull of the nestohedron vertices with kappa_beta > m_beta.
Polytope n_beta(const Beta& beta, int n);

/// Nestohedron cut by kappa_beta >= m_beta + c, for c in (0,1].
Polytope n_beta_c(const Beta& beta, int n, const Rat& c);

/// conv{2e_{i1}, e_{i2} + e_{i3}, 2e_{i2}} for beta = {{i2,i1},{i2}}, n = 2.
Polytope phi_2d(const Beta& beta, int n);

Rat reference_kappa(int n, int k, int l);

/// The kappa(k,l) half-space system on sum(x) = 3^{n+1}.
HRep reference_hrep(int n);

LabeledPolytope reference_pa(int n, std::optional<std::chrono::steady_clock::time_point> deadline = {});

/// Non-singleton elements of B_1 in assembly order: non-increasing k, then canonical.
std::vector<Beta> assembly_order(int n);

struct Assembly {
  LabeledPolytope result;
  AssemblyLog log;
};

/// max_steps stops after that many truncation summands (partial assembly).
Assembly assemble_pa(int n, const Rat& c, bool record, std::optional<std::size_t> max_steps = {});

}  // namespace pa
