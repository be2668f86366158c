// Incremental beneath-beyond hull on full-dimensional integer points.
// Internal to the library; callers go through pa::hull().
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pa::detail {

struct KernelFacet {
  std::vector<mpz_class> normal;  // inward: <normal, y> >= offset on the hull
  mpz_class offset;
};

struct KernelResult {
  std::vector<KernelFacet> facets;         // one per simplex, not yet grouped
  std::vector<std::size_t> used_points;    // every point that is a simplex corner
};

/// Points must be distinct and affinely span R^d with d = points[0].size() >= 1.
KernelResult incremental_hull(const std::vector<std::vector<mpz_class>>& points);

}  // namespace pa::detail
