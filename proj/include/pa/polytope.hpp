// Exact polytopes: V-representation with eagerly computed affine hull, facets
// and vertex-facet incidence.
#pragma once

#include <boost/dynamic_bitset.hpp>

#include <chrono>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pa/exact.hpp"

namespace pa {

using Bits = boost::dynamic_bitset<>;

class Polytope {
 public:
  Polytope() = default;

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return vertices_.empty(); }

  /// Extreme points, sorted lexicographically.
  const std::vector<Vec>& vertices() const { return vertices_; }
  /// Canonical equality system of the affine hull.
  const std::vector<Hyperplane>& equalities() const { return equalities_; }
  /// Facet half-spaces with canonical normals, sorted by normal.
  const std::vector<Halfspace>& facets() const { return facets_; }

  /// Vertices tight on facet f, and facets tight at vertex v.
  const Bits& facet_vertices(std::size_t f) const { return facet_vertices_.at(f); }
  const Bits& vertex_facets(std::size_t v) const { return vertex_facets_.at(v); }

  std::optional<std::size_t> vertex_index(const Vec& v) const;
  /// Index of the facet whose canonical normal is `normal` (already canonical).
  std::optional<std::size_t> facet_index(const IntVec& normal) const;

  /// Canonical form of the half-space <a, x> >= b relative to this polytope's
  /// equalities. Facet normals are stored in this form.
  Halfspace canonical(const IntVec& a, const Rat& b) const;

  friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices_ == b.vertices_; }

 private:
  friend Polytope hull(const std::vector<Vec>& points);

  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  std::vector<Vec> vertices_;
  std::vector<Hyperplane> equalities_;
  std::vector<Halfspace> facets_;
  std::vector<Bits> facet_vertices_;
  std::vector<Bits> vertex_facets_;
};

/// Canonical half-space relative to an equality system: the normal is reduced
/// to zero on each equality's pivot column, shifted to minimum 0 when the only
/// equality is sum(x) = const, and made primitive.
Halfspace canonical_halfspace(const std::vector<Hyperplane>& equalities, const IntVec& a, const Rat& b);

struct HRep {
  std::vector<Hyperplane> equalities;
  std::vector<Halfspace> facets;
};

struct FVector {
  std::vector<std::size_t> counts;  // counts[i] = number of i-faces, i < dim

  /// Alternating sum of the counts, 1 - (-1)^dim for a polytope of dimension dim.
  long long euler_sum() const;
  bool satisfies_euler(std::size_t dim) const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Convex hull with exact extreme-point filtering. Throws on empty input or
/// mixed ambient dimensions.
Polytope hull(const std::vector<Vec>& points);

HRep facets_of(const Polytope& p);

/// Vertices of a bounded system by tight-subset enumeration. Throws
/// std::invalid_argument on an infeasible or unbounded system and
/// std::runtime_error when the optional deadline passes.
Polytope vertices_from_hrep(const std::vector<Hyperplane>& equalities,
                            const std::vector<Halfspace>& halfspaces, std::size_t ambient_dim,
                            std::optional<std::chrono::steady_clock::time_point> deadline = {});

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope scale(const Rat& lambda, const Polytope& p);
Polytope translate(const Vec& t, const Polytope& p);

Rat support_value(const Polytope& p, const Vec& direction);

/// Index pairs (u < v) of the edges of p, from the incidence data.
std::vector<std::pair<std::size_t, std::size_t>> edges(const Polytope& p);

/// Keeps the vertices inside h (touching ones included) and adds the points
/// where crossing edges meet the boundary. Throws "empty cut" when nothing is inside.
Polytope cut_with_halfspace(const Polytope& p, const Halfspace& h);

struct Truncation {
  Polytope poly;
  Halfspace cut;
};

/// Parallel truncation at the face cut out by the given facets, at relative
/// depth c in (0,1) between the face and the nearest other vertex.
Truncation truncate_at_face(const Polytope& p, const std::vector<std::size_t>& facet_ids, const Rat& c);

bool is_simple(const Polytope& p);

/// Cone of outward facet normals at v, in the quotient by the all-ones direction.
Cone normal_cone_at_vertex(const Polytope& p, const Vec& v);

bool normally_equivalent(const Polytope& p, const Polytope& q);

FVector f_vector(const Polytope& p);

/// Vertices tight on every listed facet.
Bits face_from_facets(const Polytope& p, const std::vector<std::size_t>& facet_ids);

/// Facets containing every vertex of the face.
std::vector<std::size_t> facets_containing(const Polytope& p, const Bits& face);

std::vector<Vec> select_vertices(const Polytope& p, const Bits& subset);

/// Bitset over p's vertices marking the given points (each must be a vertex).
Bits vertex_subset(const Polytope& p, const std::vector<Vec>& points);

}  // namespace pa
