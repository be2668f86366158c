// Exact feasibility of { lambda >= 0 : sum_j lambda_j * columns[j] = b }.
#pragma once

#include <optional>
#include <vector>

#include "pa/exact.hpp"

namespace pa {

/// Phase-1 simplex over the rationals with Bland's rule (terminates, no cycling).
/// Returns a nonnegative solution when one exists.
std::optional<Vec> find_nonnegative_solution(const std::vector<Vec>& columns, const Vec& b);

inline bool has_nonnegative_solution(const std::vector<Vec>& columns, const Vec& b) {
  return find_nonnegative_solution(columns, b).has_value();
}

}  // namespace pa
