#include "pa/lp.hpp"

#include <stdexcept>

namespace pa {

std::optional<Vec> find_nonnegative_solution(const std::vector<Vec>& columns, const Vec& b) {
  const std::size_t m = b.size();
  const std::size_t n = columns.size();
  for (const auto& c : columns)
    if (c.size() != m) throw std::invalid_argument("column dimension mismatch");
  if (m == 0) return Vec(n, Rat(0));

  // Tableau rows: [A | I | rhs], rows flipped so that rhs >= 0.
  const std::size_t width = n + m;
  std::vector<Vec> t(m, Vec(width + 1, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rat(-columns[j][i]) : columns[j][i];
    t[i][n + i] = 1;
    t[i][width] = flip ? Rat(-b[i]) : b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs of the phase-1 objective (sum of artificials).
  Vec cost(width + 1, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= width; ++j)
      if (j < n || j == width) cost[j] -= t[i][j];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rat ratio = t[i][width] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // cannot happen for a phase-1 problem (bounded below by 0)
    Rat inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j <= width; ++j)
        if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      Rat f = cost[enter];
      for (std::size_t j = 0; j <= width; ++j)
        if (sgn(t[leave][j]) != 0) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (sgn(cost[width]) != 0) return std::nullopt;  // -(sum of artificials) < 0
  Vec x(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][width];
  return x;
}

}  // namespace pa
