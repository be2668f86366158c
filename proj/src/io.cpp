#include "pa/io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace pa {

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) a.push_back(x.get_si());
    else a.push_back(x.get_str());
  }
  return a;
}

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const Halfspace& h) { return {{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}}; }
Json to_json(const Hyperplane& h) { return {{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}}; }

Json to_json(const Polytope& p) {
  Json j;
  j["ambient_dim"] = p.ambient_dim();
  j["dim"] = p.dim();
  j["vertices"] = Json::array();
  for (const auto& v : p.vertices()) j["vertices"].push_back(to_json(v));
  j["equalities"] = Json::array();
  for (const auto& e : p.equalities()) j["equalities"].push_back(to_json(e));
  j["facets"] = Json::array();
  for (const auto& f : p.facets()) j["facets"].push_back(to_json(f));
  return j;
}

Json to_json(const LabeledPolytope& p) {
  Json j = to_json(p.poly);
  for (std::size_t f = 0; f < p.poly.facets().size(); ++f) {
    auto it = p.labels.find(p.poly.facets()[f].normal);
    if (it != p.labels.end()) j["facets"][f]["label"] = to_json(it->second);
  }
  return j;
}

Json to_json(const Beta& b) {
  Json a = Json::array();
  for (const auto& blk : b.chain()) a.push_back(blk);
  return a;
}

Json to_json(const FVector& f) { return f.counts; }

Json to_json(const VerificationReport& r) {
  Json j;
  j["n"] = r.n;
  j["c"] = to_json(r.c);
  j["pass"] = r.pass();
  j["summary"] = {{"realises_C", r.def_i}, {"decomposition", r.def_ii}, {"truncator_set", r.def_iii}};
  if (r.partial) j["summary"]["realises_C"] = j["summary"]["decomposition"] = nullptr;  // not checked
  j["truncator_steps"] = r.truncator_steps;
  if (r.partial) j["partial"] = true;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

Json to_json(const AssemblyLog& log) {
  Json a = Json::array();
  for (const auto& s : log.steps) {
    Json face = Json::array();
    for (auto i = s.face.find_first(); i != Bits::npos; i = s.face.find_next(i)) face.push_back(i);
    a.push_back({{"beta", to_json(s.beta)},
                 {"face", face},
                 {"halfspace", to_json(s.truncation)},
                 {"f_vector_before", to_json(f_vector(s.before))},
                 {"f_vector_after", to_json(f_vector(s.after))}});
  }
  return a;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  throw std::invalid_argument("expected a rational string or an integer");
}

Polytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("polytope JSON needs a vertex array");
  std::vector<Vec> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array()) throw std::invalid_argument("vertex must be an array");
    Vec x;
    for (const auto& c : v) x.push_back(rat_from_json(c));
    pts.push_back(std::move(x));
  }
  if (pts.empty()) throw std::invalid_argument("polytope JSON has no vertices");
  Polytope p = hull(pts);
  if (j.contains("ambient_dim") && j["ambient_dim"].get<std::size_t>() != p.ambient_dim())
    throw std::invalid_argument("ambient_dim does not match the vertices");
  return p;
}

Beta beta_from_json(const Json& j, int n) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("chain must be a nonempty array of arrays");
  std::vector<Block> blocks;
  for (const auto& b : j) {
    if (!b.is_array() || b.empty()) throw std::invalid_argument("chain member must be a nonempty array");
    Block blk;
    for (const auto& x : b) {
      if (!x.is_number_integer()) throw std::invalid_argument("chain elements must be integers");
      blk.push_back(x.get<int>());
    }
    if (!blocks.empty() && blk.size() >= blocks.back().size())
      throw std::invalid_argument("chain must be listed from the largest block down");
    blocks.push_back(std::move(blk));
  }
  return beta_from_chain(std::move(blocks), n);
}

Beta parse_beta(const std::string& text, int n) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed chain: ") + e.what());
  }
  return beta_from_json(j, n);
}

namespace {

using P3 = std::array<Rat, 3>;

P3 project(const Vec& x) { return {x[0] - x[3], x[1] - x[3], x[2] - x[3]}; }

}  // namespace

std::string to_off(const Polytope& p) {
  if (p.ambient_dim() != 4 || p.dim() != 3) throw std::invalid_argument("OFF export needs a 3-polytope in R^4");
  const auto& V = p.vertices();
  std::vector<P3> y;
  for (const auto& v : V) y.push_back(project(v));
  P3 centre{0, 0, 0};
  for (const auto& q : y)
    for (int k = 0; k < 3; ++k) centre[k] += q[k];
  for (auto& c : centre) c /= static_cast<long>(y.size());

  auto es = edges(p);
  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    const Bits& fv = p.facet_vertices(f);
    std::vector<std::vector<std::size_t>> nb(V.size());
    for (auto [u, v] : es)
      if (fv.test(u) && fv.test(v)) {
        nb[u].push_back(v);
        nb[v].push_back(u);
      }
    std::vector<std::size_t> cyc{fv.find_first()};
    std::size_t prev = Bits::npos;
    while (true) {
      std::size_t cur = cyc.back();
      std::size_t next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
      if (next == cyc.front()) break;
      prev = cur;
      cyc.push_back(next);
    }
    // Newell normal of the cycle; flip when it points towards the centre.
    P3 nrm{0, 0, 0};
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const P3& a = y[cyc[i]];
      const P3& b = y[cyc[(i + 1) % cyc.size()]];
      nrm[0] += (a[1] - b[1]) * (a[2] + b[2]);
      nrm[1] += (a[2] - b[2]) * (a[0] + b[0]);
      nrm[2] += (a[0] - b[0]) * (a[1] + b[1]);
    }
    Rat side = 0;
    for (int k = 0; k < 3; ++k) side += nrm[k] * (centre[k] - y[cyc[0]][k]);
    if (sgn(side) > 0) std::reverse(cyc.begin(), cyc.end());
    faces.push_back(std::move(cyc));
  }

  std::ostringstream out;
  out << "OFF\n" << V.size() << ' ' << faces.size() << ' ' << es.size() << '\n';
  char buf[64];
  for (const auto& q : y) {
    for (int k = 0; k < 3; ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", q[k].get_d());
      out << (k ? " " : "") << buf;
    }
    out << '\n';
  }
  for (const auto& f : faces) {
    out << f.size();
    for (auto i : f) out << ' ' << i;
    out << '\n';
  }
  return out.str();
}

std::string to_ineq(const Polytope& p) {
  std::ostringstream out;
  auto row = [&](const char* rel, const IntVec& a, const Rat& b) {
    out << rel;
    for (const auto& x : a) out << ' ' << x.get_str();
    out << ' ' << to_string(b) << '\n';
  };
  for (const auto& e : p.equalities()) row("=", e.normal, e.offset);
  for (const auto& f : p.facets()) row(">=", f.normal, f.offset);
  return out.str();
}

}  // namespace pa
