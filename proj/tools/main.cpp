// hkdisc command-line front end. JSON in, JSON (or text) out.

#include "hkdisc/arrangement.hpp"
#include "hkdisc/degree.hpp"
#include "hkdisc/discop.hpp"
#include "hkdisc/error.hpp"
#include "hkdisc/io.hpp"
#include "hkdisc/lattice.hpp"
#include "hkdisc/staircase.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace hkdisc;
using io::json;

namespace {

struct RunConfig {
  std::uint64_t seed = 0;
  int trials = kDefaultTrials;
  bool text = false;
  std::vector<std::string> inputs;
};

std::string point_text(const std::vector<Rat>& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ":" : "") + to_string(p[i]);
  return out + ")";
}

std::string vanishing_text(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + 1);
  return out + "}";
}

IntMatrix load_matrix(const std::string& path) { return io::matrix_from_json(io::read_json_file(path)); }
MPoly load_poly(const std::string& path) { return io::poly_from_json(io::read_json_file(path)); }

std::string poly_text(const MPoly& p) { return p.to_string(default_var_names(p.nvars())); }

std::string cmd_analyze(const RunConfig& cfg) {
  const auto c = load_matrix(cfg.inputs[0]);
  const auto spec = ParamSpec::build(c);
  json out;
  out["n"] = spec.n();
  out["m"] = spec.m();
  out["regular"] = true;
  out["g"] = to_string(gcd_maximal_minors(c));
  out["d"] = spec.degree();
  out["defect"] = to_string(defect_test(spec, cfg.trials, cfg.seed));
  auto merged = merge_proportional_rows(c);
  out["merged"] = {{"matrix", io::matrix_to_json(merged.matrix)},
                   {"lambda", io::rat_vector_to_json(merged.lambda.values())}};
  if (spec.m() == 3) {
    out["uniform"] = is_uniform(c);
    try {
      json pts = json::array();
      for (const auto& p : base_points(spec)) pts.push_back(io::base_point_to_json(p, localize(spec, p).monomial));
      out["base_points"] = std::move(pts);
    } catch (const DomainError& e) {
      out["base_points_error"] = e.what();
    }
  }
  if (!cfg.text) return out.dump(2);

  std::ostringstream os;
  os << "n = " << spec.n() << ", m = " << spec.m() << "\n"
     << "g = " << out["g"].get<std::string>() << "\n"
     << "d = " << spec.degree() << "\n"
     << "defect test: " << out["defect"].get<std::string>() << "\n";
  if (spec.m() == 3) {
    os << "uniform: " << (out["uniform"].get<bool>() ? "yes" : "no") << "\n";
    if (out.contains("base_points_error")) {
      os << "base points: " << out["base_points_error"].get<std::string>() << "\n";
    } else {
      for (const auto& p : base_points(spec))
        os << "base point " << point_text(p.coords) << " vanishing " << vanishing_text(p.vanishing)
           << (localize(spec, p).monomial ? " monomial" : " non-monomial") << "\n";
    }
  }
  os << "merged rows:\n" << merged.matrix << "lambda = " << point_text(merged.lambda.values()) << "\n";
  return os.str();
}

std::string cmd_degree(const RunConfig& cfg) {
  auto r = degree_uniform(load_matrix(cfg.inputs[0]), cfg.seed, cfg.trials);
  if (!cfg.text) return io::degree_report_to_json(r).dump(2);
  std::ostringstream os;
  os << "d = " << r.d << "\n";
  long sum = 0;
  for (const auto& e : r.points) {
    os << "base point " << point_text(e.point.coords) << " vanishing " << vanishing_text(e.point.vanishing)
       << " e = " << e.multiplicity << "\n";
    sum += e.multiplicity;
  }
  os << "degree = " << r.d << "^2 - " << sum << " = " << r.degree << "\n";
  return os.str();
}

std::string cmd_implicitize(const RunConfig& cfg) {
  auto p = implicitize_m2(ParamSpec::build(load_matrix(cfg.inputs[0])), cfg.seed);
  return cfg.text ? poly_text(p) + "\n" : io::poly_to_json(p).dump(2);
}

std::string cmd_transfer(const RunConfig& cfg) {
  auto r = transfer(load_poly(cfg.inputs[0]), load_matrix(cfg.inputs[1]));
  if (cfg.text) {
    std::ostringstream os;
    os << poly_text(r.delta) << "\nv = (";
    for (std::size_t i = 0; i < r.v.size(); ++i) os << (i ? "," : "") << r.v[i];
    os << ")\nsign = " << r.sign << "\n";
    return os.str();
  }
  json out{{"polynomial", io::poly_to_json(r.delta)}, {"v", io::int_vector_to_json(r.v)}, {"sign", r.sign}};
  return out.dump(2);
}

std::string cmd_group_product(const RunConfig& cfg) {
  auto p = group_product(load_poly(cfg.inputs[0]), load_matrix(cfg.inputs[1]));
  return cfg.text ? poly_text(p) + "\n" : io::poly_to_json(p).dump(2);
}

std::string cmd_multiplicity(const RunConfig& cfg) {
  Staircase2 s(io::points_from_json(io::read_json_file(cfg.inputs[0]), "gens"));
  long e = staircase_multiplicity(s);
  long len = colength(s);
  if (cfg.text) return "e = " + std::to_string(e) + "\ncolength = " + std::to_string(len) + "\n";
  return json{{"e", e}, {"colength", len}}.dump(2);
}

std::string cmd_sparse_mult(const RunConfig& cfg) {
  long e = sparse_origin_multiplicity(io::points_from_json(io::read_json_file(cfg.inputs[0]), "exponents"));
  return cfg.text ? "e = " + std::to_string(e) + "\n" : json{{"e", e}}.dump(2);
}

std::string cmd_gauss_check(const RunConfig& cfg) {
  auto spec = ParamSpec::build(load_matrix(cfg.inputs[0]));
  bool pass = gauss_inverse_check(spec, load_poly(cfg.inputs[1]), cfg.trials, cfg.seed);
  if (cfg.text) return std::string(pass ? "pass" : "fail") + "\n";
  return json{{"pass", pass}, {"trials", cfg.trials}, {"seed", cfg.seed}}.dump(2);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discriminants of Horn-Kapranov parametrizations"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Random trials for probabilistic checks")->capture_default_str()
      ->check(CLI::PositiveNumber);
  auto* json_flag = app.add_flag("--json", "JSON output (default)");
  app.add_flag("--text", cfg.text, "Human-readable output")->excludes(json_flag);

  using Handler = std::string (*)(const RunConfig&);
  struct Command {
    const char* name;
    const char* help;
    std::vector<const char*> args;
    Handler run;
  };
  const std::vector<Command> commands{
      {"analyze", "Diagnostics for a matrix", {"matrix"}, cmd_analyze},
      {"degree", "Degree of the discriminant (uniform n x 3)", {"matrix"}, cmd_degree},
      {"implicitize", "Discriminant polynomial for m = 2", {"matrix"}, cmd_implicitize},
      {"transfer", "Discriminant for C * M from that of C", {"poly", "M"}, cmd_transfer},
      {"multiplicity", "Multiplicity and colength of a monomial ideal", {"staircase"}, cmd_multiplicity},
      {"sparse-mult", "Origin multiplicity of a generic sparse system", {"exponents"}, cmd_sparse_mult},
      {"gauss-check", "Check that the Gauss map inverts the parametrization", {"matrix", "poly"}, cmd_gauss_check},
      {"group-product", "Product of a polynomial over ker of y -> y^M", {"poly", "M"}, cmd_group_product},
  };
  std::vector<std::vector<std::string>> paths(commands.size());
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    auto* sub = app.add_subcommand(commands[i].name, commands[i].help);
    sub->fallthrough();  // global flags may follow the subcommand
    paths[i].resize(commands[i].args.size());
    for (std::size_t a = 0; a < commands[i].args.size(); ++a)
      sub->add_option(commands[i].args[a], paths[i][a], "input file")->required();
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (std::size_t i = 0; i < commands.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    cfg.inputs = paths[i];
    try {
      std::cout << commands[i].run(cfg);
      if (!cfg.text) std::cout << "\n";
      return 0;
    } catch (const ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const DomainError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    } catch (const std::exception& e) {
      std::cerr << "internal error: " << e.what() << "\n";
      return 1;
    }
  }
  return 2;
}
