#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pa/io.hpp"

using namespace pa;

namespace {

// Bad user input; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat parse_c(const std::string& text) {
  Rat c;
  try {
    c = parse_rational(text);
  } catch (const std::exception& e) {
    throw InputError("--c: " + std::string(e.what()));
  }
  if (sgn(c) <= 0 || c > 1) throw InputError("--c must lie in (0,1], got " + text);
  return c;
}

void check_n(int n) {
  if (n < 2 || n > 4) throw InputError("--n must be 2, 3 or 4");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write " + out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Polytope read_polytope(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return polytope_from_json(Json::parse(ss.str()));
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string render(const Polytope& p, const Json& as_json, const std::string& format) {
  if (format == "off") return to_off(p);
  if (format == "ineq") return to_ineq(p);
  return dump(as_json);
}

// Deadline for the reference enumeration. n = 4 only runs when a budget is set.
std::optional<std::chrono::steady_clock::time_point> reference_deadline(int n, bool& allowed) {
  allowed = true;
  const char* env = std::getenv("PA_TIME_BUDGET_SECS");
  if (!env || !*env) {
    if (n >= 4) {
      std::cerr << "warning: reference comparison at n = 4 needs PA_TIME_BUDGET_SECS; skipped\n";
      allowed = false;
    }
    return std::nullopt;
  }
  char* end = nullptr;
  double secs = std::strtod(env, &end);
  if (*end || !(secs > 0)) throw InputError("PA_TIME_BUDGET_SECS must be a positive number of seconds");
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(secs));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and checking of permutoassociahedra"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "off", "ineq"};

  int n = 0;
  std::string c_text = "1", format = "json", out, record, beta_text, in_path, file_a, file_b;
  bool against_reference = false, partial = false;
  std::size_t steps = 0;

  auto* build = app.add_subcommand("build", "Assemble PA_{n,c} as a Minkowski sum");
  build->add_option("--n", n, "Dimension")->required();
  build->add_option("--c", c_text, "Cut depth p/q in (0,1]");
  build->add_option("--format", format)->check(CLI::IsMember(formats));
  build->add_option("--out", out, "Output file (default stdout)");
  build->add_option("--record", record, "Write the assembly log as JSON");
  build->add_flag("--against-reference", against_reference, "Also compare with the half-space model");

  auto* verify = app.add_subcommand("verify", "Check the Minkowski realisation and print a JSON report");
  verify->add_option("--n", n)->required();
  verify->add_option("--c", c_text);
  verify->add_flag("--against-reference", against_reference);
  verify->add_flag("--partial", partial, "Only check truncator steps (required at n = 4)");
  auto* steps_opt = verify->add_option("--steps", steps, "With --partial: stop after this many steps");
  verify->add_option("--out", out);

  auto* nesto = app.add_subcommand("nestohedron", "Nestohedron of B_beta with m_beta, F_beta and N_beta");
  nesto->add_option("--n", n)->required();
  nesto->add_option("--beta", beta_text, "Chain as JSON, largest block first")->required();
  nesto->add_option("--out", out);

  auto* fvec = app.add_subcommand("fvector", "f-vector of PA_{n,c} or of a polytope file");
  fvec->add_option("--n", n);
  fvec->add_option("--c", c_text);
  fvec->add_option("--in", in_path, "Polytope JSON");

  auto* exp = app.add_subcommand("export", "Convert a polytope JSON file");
  exp->add_option("--in", in_path)->required();
  exp->add_option("--format", format)->check(CLI::IsMember(formats));
  exp->add_option("--out", out);

  auto* equiv = app.add_subcommand("check-equiv", "Exit 0 iff the two polytopes are normally equivalent");
  equiv->add_option("a", file_a)->required();
  equiv->add_option("b", file_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*build) {
      check_n(n);
      Rat c = parse_c(c_text);
      if (format == "off" && n != 3) throw InputError("OFF output is only available for n = 3");
      auto as = assemble_pa(n, c, !record.empty());
      if (!record.empty()) emit(dump(to_json(as.log)), record);
      emit(render(as.result.poly, to_json(as.result), format), out);
      if (against_reference) {
        bool allowed;
        auto deadline = reference_deadline(n, allowed);
        if (allowed) {
          try {
            auto ref = reference_pa(n, deadline);
            if (!normally_equivalent(as.result.poly, ref.poly)) {
              std::cerr << "not normally equivalent to the reference polytope\n";
              return 1;
            }
          } catch (const std::runtime_error& e) {
            std::cerr << "warning: reference comparison skipped: " << e.what() << "\n";
          }
        }
      }
      return 0;
    }

    if (*verify) {
      check_n(n);
      Rat c = parse_c(c_text);
      if (n == 4 && !partial) throw InputError("verification at n = 4 needs --partial");
      if (steps_opt->count() && !partial) throw InputError("--steps needs --partial");
      VerifyOptions opts;
      opts.partial = partial;
      if (steps_opt->count()) opts.max_steps = steps;
      if (against_reference) {
        bool allowed;
        opts.deadline = reference_deadline(n, allowed);
        opts.against_reference = allowed;
      }
      auto rep = verify_minkowski_realisation(n, c, opts);
      emit(dump(to_json(rep)), out);
      return rep.pass() ? 0 : 1;
    }

    if (*nesto) {
      check_n(n);
      Beta beta = [&] {
        try {
          return parse_beta(beta_text, n);
        } catch (const std::exception& e) {
          throw InputError(std::string("--beta: ") + e.what());
        }
      }();
      if (beta.k() < 2) throw InputError("--beta must have at least two blocks");
      Polytope P = nestohedron(b_beta(beta, n));
      auto fb = f_beta_and_m(beta, n);
      Polytope N = n_beta(beta, n);
      Json j;
      j["beta"] = to_json(beta);
      j["n"] = n;
      j["nestohedron"] = to_json(P);
      j["m_beta"] = to_json(fb.m);
      j["F_beta"] = Json::array();
      for (const auto& v : fb.face) j["F_beta"].push_back(to_json(v));
      j["N_beta"] = to_json(N);
      j["N_beta_simple"] = is_simple(N);
      emit(dump(j), out);
      return 0;
    }

    if (*fvec) {
      Polytope P;
      if (!in_path.empty()) {
        P = read_polytope(in_path);
      } else {
        check_n(n);
        P = assemble_pa(n, parse_c(c_text), false).result.poly;
      }
      std::cout << to_json(f_vector(P)).dump() << "\n";
      return 0;
    }

    if (*exp) {
      Polytope P = read_polytope(in_path);
      if (format == "off" && (P.ambient_dim() != 4 || P.dim() != 3))
        throw InputError("OFF output needs a 3-polytope in R^4");
      emit(render(P, to_json(P), format), out);
      return 0;
    }

    if (*equiv) {
      Polytope A = read_polytope(file_a), B = read_polytope(file_b);
      bool eq = normally_equivalent(A, B);
      std::cout << (eq ? "normally equivalent" : "not normally equivalent") << "\n";
      return eq ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
