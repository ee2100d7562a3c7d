// projgraft: command-line front end.
//
// Exit codes: 0 success, 1 domain error, 2 input error, 3 verification failure.
// Set PROJGRAFT_LOG=debug for diagnostics on standard error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "projgraft/projgraft.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

bool debug_enabled() {
  const char* v = std::getenv("PROJGRAFT_LOG");
  return v != nullptr && std::string(v) == "debug";
}

void debug(const std::string& line) {
  if (debug_enabled()) std::cerr << "[debug] " << line << "\n";
}

projgraft::TorusClass parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw projgraft::SchemaError("expected p,q but got '" + text + "'");
  try {
    std::size_t used_p = 0, used_q = 0;
    const std::string ps = text.substr(0, comma), qs = text.substr(comma + 1);
    const long long p = std::stoll(ps, &used_p);
    const long long q = std::stoll(qs, &used_q);
    if (used_p != ps.size() || used_q != qs.size()) throw std::invalid_argument("pair");
    return {p, q};
  } catch (const std::exception&) {
    throw projgraft::SchemaError("expected p,q but got '" + text + "'");
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw projgraft::SchemaError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multicurve calculus and grafting-complex enumeration for projective structures with real holonomy"};
  app.require_subcommand(1);

  // torus
  auto* torus = app.add_subcommand("torus", "Exact arithmetic of torus homology classes (p,q)");
  torus->require_subcommand(1);
  std::string ta, tb, mode_name = "sharp", about = "0,1";
  long long twist_k = 1;

  auto* t_int = torus->add_subcommand("intersect", "Geometric and algebraic intersection of A and B");
  t_int->add_option("A", ta, "class p,q")->required();
  t_int->add_option("B", tb, "class p,q")->required();

  auto* t_res = torus->add_subcommand("resolve", "Sharp or flat surgery of A with B");
  t_res->add_option("--mode", mode_name, "sharp or flat")->check(CLI::IsMember({"sharp", "flat"}));
  t_res->add_option("A", ta, "first class p,q")->required();
  t_res->add_option("B", tb, "second class p,q")->required();

  auto* t_tw = torus->add_subcommand("twist", "k-fold Dehn twist of B about a class");
  t_tw->add_option("--about", about, "twisting class p,q (default: the meridian 0,1)");
  t_tw->add_option("-k", twist_k, "number of twists (negative for inverse)");
  t_tw->add_option("B", tb, "class p,q to twist")->required();

  auto* t_norm = torus->add_subcommand("normalize", "Split a class into multiplicity and sign-normalized primitive");
  t_norm->add_option("A", ta, "class p,q")->required();

  // graft
  auto* graft = app.add_subcommand("graft", "Graft the configuration's structure along a curve");
  std::string config_path, curve_text, out_path;
  graft->add_option("config", config_path, "configuration JSON (schema 1)")->required();
  graft->add_option("--curve", curve_text,
                    "curve spec label[@chart=p,q]...[:mult], e.g. gam@b1=1,-1 or delta:1; defaults to gamma");
  graft->add_option("--out", out_path, "write the structure JSON here instead of standard output");

  // twist
  auto* twist = app.add_subcommand("twist", "Twist the configuration's real curves about a meridian");
  std::string chart;
  long long twist_n = 1;
  twist->add_option("config", config_path, "configuration JSON (schema 1)")->required();
  twist->add_option("--chart", chart, "meridian chart name")->required();
  twist->add_option("-n", twist_n, "number of twists");
  twist->add_option("--out", out_path, "output path");

  // complex
  auto* complex = app.add_subcommand("complex", "Enumerate the grafting complex to a bounded depth");
  int depth = 1;
  long long twist_bound = 1;
  unsigned threads = 1;
  std::string format = "json";
  complex->add_option("config", config_path, "configuration JSON (schema 1)")->required();
  complex->add_option("--depth", depth, "BFS depth d")->check(CLI::NonNegativeNumber);
  complex->add_option("--twist-bound", twist_bound, "twist bound M for grafting curves")->check(CLI::NonNegativeNumber);
  complex->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  complex->add_option("--out", out_path, "write the graph here (default: no graph output)");
  complex->add_option("--threads", threads, "worker threads for frontier expansion")->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "Run an identity sweep");
  std::string suite, json_path, reading = "literal";
  projgraft::SuiteParams params;
  verify->add_option("--suite", suite, "one of: flatsharp sharp_flat dehn_twist goldman iterated two_meridian oracle fan twist_formula")
      ->required();
  verify->add_option("--k-max", params.k_max, "twist range for k-indexed suites (suite default if omitted)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--range", params.range, "entry bound for class sweeps")->check(CLI::NonNegativeNumber);
  verify->add_option("--trials", params.trials, "random trials (goldman)")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", params.seed, "random seed (goldman)");
  verify->add_option("--m", params.m, "common exponent m (fan)");
  verify->add_option("--fan-length", params.fan_length, "largest l in the fan")->check(CLI::NonNegativeNumber);
  verify->add_option("--l0", params.l0, "fixed twist of lambda for the witness count (iterated)");
  verify->add_option("--reading", reading, "literal or corrected form of the identities")
      ->check(CLI::IsMember({"literal", "corrected"}));
  verify->add_option("--json", json_path, "also write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    const CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) {
      failing = sub;
      for (auto* inner : sub->get_subcommands()) failing = inner;
    }
    std::cerr << failing->help();
    return kExitInput;
  }

  try {
    using namespace projgraft;
    if (torus->parsed()) {
      if (t_int->parsed()) {
        const TorusClass a = parse_pair(ta), b = parse_pair(tb);
        std::cout << "geometric=" << geometric_intersection(a, b) << " algebraic=" << algebraic_intersection(a, b) << "\n";
      } else if (t_res->parsed()) {
        const Surgery mode = mode_name == "flat" ? Surgery::Flat : Surgery::Sharp;
        std::cout << resolve(parse_pair(ta), parse_pair(tb), mode).str() << "\n";
      } else if (t_tw->parsed()) {
        std::cout << dehn_twist(parse_pair(tb), parse_pair(about), twist_k).str() << "\n";
      } else if (t_norm->parsed()) {
        const TorusMulticurve m = normalize(parse_pair(ta));
        std::cout << "multiplicity=" << m.multiplicity << " primitive=" << m.primitive.str() << "\n";
      }
      return 0;
    }

    if (graft->parsed()) {
      const CheckedConfiguration cfg = load_config(config_path);
      const CurveComponent curve = curve_text.empty() ? cfg.gamma() : parse_curve_spec(curve_text);
      const Structure seed = cfg.seed();
      const Admissibility a = is_admissible(cfg.model(), seed, curve);
      debug("seed " + seed.key());
      debug("curve " + curve_spec(curve) + " route " + to_string(a.route) + (a.reason.empty() ? "" : ": " + a.reason));
      const Structure result = graft_along(cfg.model(), seed, curve);
      nlohmann::json j = structure_to_json(result);
      j["route"] = to_string(a.route);
      j["curve"] = curve_spec(curve);
      write_output(out_path, j.dump(2) + "\n");
      return 0;
    }

    if (twist->parsed()) {
      const CheckedConfiguration cfg = load_config(config_path);
      const Structure result = twist_about_meridian(cfg.model(), cfg.seed(), chart, twist_n);
      write_output(out_path, structure_to_json(result).dump(2) + "\n");
      return 0;
    }

    if (complex->parsed()) {
      const CheckedConfiguration cfg = load_config(config_path);
      BuildOptions opts;
      opts.threads = threads;
      if (debug_enabled()) opts.log = debug;
      const ComplexGraph g = build_complex(cfg, cfg.seed(), twist_bound, depth, opts);
      if (!out_path.empty()) write_output(out_path, format == "dot" ? to_dot(g) : to_json(g).dump(2) + "\n");
      std::cout << "vertices=" << g.vertices.size() << " edges=" << g.edges.size()
                << " cycle_rank=" << cycle_rank(g, EdgeSet::All) << " graft_rank=" << cycle_rank(g, EdgeSet::GraftOnly)
                << " elementary_rank=" << cycle_rank(g, EdgeSet::ElementaryOnly) << " (at M=" << twist_bound
                << ", d=" << depth << ")\n";
      return 0;
    }

    if (verify->parsed()) {
      params.reading = reading == "corrected" ? Reading::Corrected : Reading::Literal;
      const SuiteReport report = verify_suite(suite, params);
      std::cout << report.text();
      if (!json_path.empty()) write_output(json_path, report.to_json().dump(2) + "\n");
      return report.passed() ? 0 : kExitVerify;
    }
  } catch (const projgraft::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const projgraft::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
