// Serialization: JSON polytopes, chains, reports and assembly logs; OFF and
// plain-text inequality export.
#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "pa/verify.hpp"

namespace pa {

using Json = nlohmann::json;

Json to_json(const Rat& r);
Json to_json(const IntVec& v);
Json to_json(const Vec& v);
Json to_json(const Halfspace& h);
Json to_json(const Hyperplane& h);
Json to_json(const Polytope& p);
Json to_json(const LabeledPolytope& p);
Json to_json(const Beta& b);
Json to_json(const FVector& f);
Json to_json(const VerificationReport& r);
Json to_json(const AssemblyLog& log);

/// Rationals are accepted as strings "p/q" or as JSON integers.
Rat rat_from_json(const Json& j);
/// Rebuilds the polytope from its vertex list; any facet data is recomputed.
Polytope polytope_from_json(const Json& j);
/// Nested arrays from beta_max down to beta_min, e.g. [[1,2,4],[1,2],[1]].
Beta beta_from_json(const Json& j, int n);
Beta parse_beta(const std::string& text, int n);

/// OFF file of a 3-dimensional polytope in sum(x) = const, R^4, projected by
/// (x1 - x4, x2 - x4, x3 - x4). Faces are oriented outward.
std::string to_off(const Polytope& p);

/// One line per equality ("= ") and facet (">= "): coefficients then offset.
std::string to_ineq(const Polytope& p);

}  // namespace pa
