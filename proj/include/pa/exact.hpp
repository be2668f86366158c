// Exact rational scalars, vectors, half-spaces, affine hulls and cones.
//
// Everything here is exact: scalars are GMP rationals, normals are primitive
// integer vectors. Points of R^{n+1} are plain coordinate vectors; the ambient
// dimension is the vector length.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pa {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;
using IntVec = std::vector<Int>;

Rat dot(const IntVec& a, const Vec& x);
Rat dot(const Vec& a, const Vec& x);
Int dot(const IntVec& a, const IntVec& x);

IntVec all_ones(std::size_t n);
IntVec negated(IntVec v);
Vec to_vec(const IntVec& v);
bool is_zero(const IntVec& v);
bool is_zero(const Vec& v);

/// The set {x : <normal, x> >= offset}. Its outward normal is -normal.
struct Halfspace {
  IntVec normal;
  Rat offset;

  Rat evaluate(const Vec& x) const { return dot(normal, x); }
  bool contains(const Vec& x) const { return evaluate(x) >= offset; }
  bool is_tight(const Vec& x) const { return evaluate(x) == offset; }

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// The set {x : <normal, x> = offset}.
struct Hyperplane {
  IntVec normal;
  Rat offset;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Positive rational multiple of v with coprime integer entries.
/// Throws std::invalid_argument("zero direction") for v = 0.
IntVec primitive_direction(const Vec& v);
IntVec primitive_direction(const IntVec& v);

/// The positive scalar lambda with lambda * v == primitive_direction(v).
Rat primitive_scale(const Vec& v);

/// Representative of v modulo span(1,...,1): primitive_direction(v - min(v) * 1).
/// Throws std::invalid_argument("lineality direction") when v is a multiple of 1.
IntVec canonical_quotient_key(const IntVec& v);

bool is_lineality(const IntVec& v);

/// Rank of a list of rows (exact Gaussian elimination).
std::size_t rank(std::vector<Vec> rows);
std::size_t rank(const std::vector<IntVec>& rows);

/// Canonical integer basis of the row space of `rows`: reduced row echelon
/// form with pivots taken from the last columns, every row scaled to a
/// primitive integer vector whose first nonzero entry is positive.
std::vector<IntVec> canonical_row_basis(std::vector<Vec> rows, std::size_t width);

/// Column index of the pivot of a canonical row (its last nonzero entry).
std::size_t pivot_column(const IntVec& row);

/// Basis of {a : <a, r> = 0 for every row r}.
std::vector<Vec> null_space(std::vector<Vec> rows, std::size_t width);

struct AffineHull {
  std::size_t dim = 0;
  std::vector<Hyperplane> equalities;
};

/// Dimension and canonical irredundant equality system of the affine hull.
/// Throws std::invalid_argument on an empty list or mixed ambient dimensions.
AffineHull affine_hull(const std::vector<Vec>& points);

/// Solves the square-or-tall system rows * x = rhs. Returns false when the
/// system is inconsistent or its solution is not unique.
bool solve_unique(std::vector<Vec> rows, Vec rhs, Vec& solution);

/// Finitely generated cone in the quotient Z^{n+1} / Z(1,...,1).
///
/// Generators are stored as canonical quotient keys, deduplicated and
/// irredundant. The zero class is not an admissible generator.
class Cone {
 public:
  explicit Cone(std::size_t ambient_dim, const std::vector<IntVec>& generators = {});

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<IntVec>& generators() const { return generators_; }

  /// Rank of the generators in the quotient.
  std::size_t dim() const;

  /// True iff `ray` is a nonnegative combination of the generators modulo
  /// the all-ones direction. The zero class is always contained.
  bool contains(const IntVec& ray) const;

 private:
  std::size_t ambient_dim_;
  std::vector<IntVec> generators_;
};

inline bool cone_contains(const Cone& c, const IntVec& ray) { return c.contains(ray); }
inline std::size_t cone_dim(const Cone& c) { return c.dim(); }

/// "p/q", or "p" when q = 1.
std::string to_string(const Rat& r);
std::string to_string(const IntVec& v);
std::string to_string(const Vec& v);

/// Parses "p", "-p" or "p/q" exactly. No decimal or floating input.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rat parse_rational(std::string_view text);

}  // namespace pa
