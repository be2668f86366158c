#include "pa/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "pa/lp.hpp"

namespace pa {

Rat dot(const IntVec& a, const Vec& x) {
  if (a.size() != x.size()) throw std::invalid_argument("dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) s += Rat(a[i]) * x[i];
  return s;
}

Rat dot(const Vec& a, const Vec& x) {
  if (a.size() != x.size()) throw std::invalid_argument("dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) s += a[i] * x[i];
  return s;
}

Int dot(const IntVec& a, const IntVec& x) {
  if (a.size() != x.size()) throw std::invalid_argument("dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

IntVec all_ones(std::size_t n) { return IntVec(n, Int(1)); }

IntVec negated(IntVec v) {
  for (auto& x : v) x = -x;
  return v;
}

Vec to_vec(const IntVec& v) { return Vec(v.begin(), v.end()); }

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Rat primitive_scale(const Vec& v) {
  if (is_zero(v)) throw std::invalid_argument("zero direction");
  Int den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  Int g = 0;
  for (const auto& x : v) {
    Int num = x.get_num() * (den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Rat s(den, g);
  s.canonicalize();
  return s;
}

IntVec primitive_direction(const Vec& v) {
  Rat s = primitive_scale(v);
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Rat y = x * s;
    out.push_back(y.get_num());  // denominator is 1 by construction
  }
  return out;
}

IntVec primitive_direction(const IntVec& v) {
  if (is_zero(v)) throw std::invalid_argument("zero direction");
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  IntVec out(v);
  if (g != 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

bool is_lineality(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [&](const Int& x) { return x == v.front(); });
}

IntVec canonical_quotient_key(const IntVec& v) {
  if (v.empty() || is_lineality(v)) throw std::invalid_argument("lineality direction");
  Int m = *std::min_element(v.begin(), v.end());
  IntVec w(v);
  for (auto& x : w) x -= m;
  return primitive_direction(w);
}

namespace {

// In-place reduced row echelon form. Columns are visited in the given order.
// Returns the pivot column of each of the leading rows.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t width, bool from_last) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t step = 0; step < width && r < rows.size(); ++step) {
    std::size_t col = from_last ? width - 1 - step : step;
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][col]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][col]) == 0) continue;
      Rat f = rows[i][col];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

std::size_t rank(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows.front().size(), false).size();
}

std::size_t rank(const std::vector<IntVec>& rows) {
  std::vector<Vec> r;
  r.reserve(rows.size());
  for (const auto& v : rows) r.push_back(to_vec(v));
  return rank(std::move(r));
}

std::vector<IntVec> canonical_row_basis(std::vector<Vec> rows, std::size_t width) {
  rref(rows, width, true);
  std::vector<IntVec> out;
  for (const auto& r : rows) {
    IntVec p = primitive_direction(r);
    auto first = std::find_if(p.begin(), p.end(), [](const Int& x) { return sgn(x) != 0; });
    if (sgn(*first) < 0) p = negated(std::move(p));
    out.push_back(std::move(p));
  }
  return out;
}

std::size_t pivot_column(const IntVec& row) {
  for (std::size_t j = row.size(); j-- > 0;)
    if (sgn(row[j]) != 0) return j;
  throw std::invalid_argument("zero row");
}

std::vector<Vec> null_space(std::vector<Vec> rows, std::size_t width) {
  auto pivots = rref(rows, width, false);
  std::vector<bool> is_pivot(width, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < width; ++f) {
    if (is_pivot[f]) continue;
    Vec v(width, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

AffineHull affine_hull(const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("affine hull of an empty point set");
  const std::size_t n = points.front().size();
  std::vector<Vec> diffs;
  for (const auto& p : points) {
    if (p.size() != n) throw std::invalid_argument("mixed ambient dimensions");
    Vec d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = p[j] - points.front()[j];
    if (!is_zero(d)) diffs.push_back(std::move(d));
  }
  AffineHull h;
  h.dim = rank(diffs);
  auto normals = canonical_row_basis(null_space(diffs, n), n);
  for (auto& a : normals) {
    Rat b = dot(a, points.front());
    h.equalities.push_back({std::move(a), b});
  }
  return h;
}

bool solve_unique(std::vector<Vec> rows, Vec rhs, Vec& solution) {
  if (rows.empty()) return false;
  const std::size_t n = rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(rhs[i]);
  auto pivots = rref(rows, n + 1, false);
  if (!pivots.empty() && pivots.back() == n) return false;  // inconsistent
  if (pivots.size() != n) return false;
  solution.assign(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) solution[pivots[i]] = rows[i][n];
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// Is `ray` a nonnegative combination of `gens` plus any multiple of 1?
bool in_quotient_cone(const std::vector<IntVec>& gens, const IntVec& ray) {
  if (is_zero(ray) || is_lineality(ray)) return true;
  const std::size_t n = ray.size();
  std::vector<Vec> cols;
  for (const auto& g : gens) cols.push_back(to_vec(g));
  cols.push_back(Vec(n, Rat(1)));
  cols.push_back(Vec(n, Rat(-1)));
  return has_nonnegative_solution(cols, to_vec(ray));
}

}  // namespace

Cone::Cone(std::size_t ambient_dim, const std::vector<IntVec>& generators)
    : ambient_dim_(ambient_dim) {
  std::vector<IntVec> keys;
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw std::invalid_argument("generator dimension mismatch");
    if (is_zero(g) || is_lineality(g)) throw std::invalid_argument("zero class generator");
    keys.push_back(canonical_quotient_key(g));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  // Drop generators that the remaining ones already produce.
  for (std::size_t i = 0; i < keys.size();) {
    std::vector<IntVec> others;
    for (std::size_t j = 0; j < keys.size(); ++j)
      if (j != i) others.push_back(keys[j]);
    if (!others.empty() && in_quotient_cone(others, keys[i]))
      keys.erase(keys.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  generators_ = std::move(keys);
}

std::size_t Cone::dim() const {
  if (generators_.empty()) return 0;
  std::vector<IntVec> rows(generators_);
  rows.push_back(all_ones(ambient_dim_));
  return rank(rows) - 1;
}

bool Cone::contains(const IntVec& ray) const {
  if (ray.size() != ambient_dim_) throw std::invalid_argument("ray dimension mismatch");
  return in_quotient_cone(generators_, ray);
}

// ---------------------------------------------------------------------------

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

Rat parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && body.front() == '-') {
    neg = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw bad();
  Int p(std::string(num), 10), q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rat r(neg ? Int(-p) : p, q);
  r.canonicalize();
  return r;
}

}  // namespace pa
