// Mechanical checks: F-deformations, truncator steps, fan refinement of a
// Minkowski sum, realisation of the complex C, and the end-to-end report.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pa/construct.hpp"

namespace pa {

/// p2 is an F-deformation of p1, where the truncation of p1 at the face is
/// given by trunc_halfspace.
bool is_f_deformation(const Polytope& p2, const Polytope& p1, const Bits& face, const Halfspace& trunc_halfspace);

/// s_prev + q is normally equivalent to the depth-1/2 truncation of s_prev at the face.
bool check_truncator_step(const Polytope& s_prev, const Polytope& q, const Bits& face);

/// p + conv(V(p) - {v}) equals twice the midpoint truncation at v, up to translation.
bool vertex_trunc_identity(const Polytope& p, const Vec& v);

/// Vertex cones of p + q are exactly the full-dimensional intersections of a
/// vertex cone of p with one of q.
bool verify_fan_refinement(const Polytope& p, const Polytope& q);

bool verify_realises_C(const LabeledPolytope& p, int n);

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on success
};

struct VerificationReport {
  int n = 0;
  Rat c;
  std::vector<Check> checks;
  bool def_i = false;    // realises C
  bool def_ii = false;   // simplex plus summands decomposition
  bool def_iii = false;  // every non-singleton summand is a truncator summand
  std::size_t truncator_steps = 0;
  bool partial = false;  // only truncator steps were checked

  bool pass() const;
};

struct VerifyOptions {
  bool against_reference = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;  // reference enumeration only
  // Check only the truncator steps, stopping after max_steps of them if set.
  bool partial = false;
  std::optional<std::size_t> max_steps;
};

VerificationReport verify_minkowski_realisation(int n, const Rat& c, const VerifyOptions& opts = {});

}  // namespace pa
