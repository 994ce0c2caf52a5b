// Command-line front end: graph generation, bound tables, certificate
// checks on dependency-graph JSON, resampling solves, and verification.
// Exit codes: 0 success/pass, 2 property fail or solver failure, 1 usage
// or I/O error.

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lllcolor/bounds.hpp"
#include "lllcolor/dimacs.hpp"
#include "lllcolor/events.hpp"
#include "lllcolor/generate.hpp"
#include "lllcolor/lll.hpp"
#include "lllcolor/solver.hpp"
#include "lllcolor/verify.hpp"

namespace {

using nlohmann::ordered_json;

// Round a double through a 10-significant-digit decimal representation so
// machine-readable output is byte-stable and digit-bounded.
double round10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return std::strtod(buf, nullptr);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

// ---- gen ----

struct GenOpts {
  std::string family = "random-regular";
  int n = 10;
  int degree = 3;
  int dim = 3;
  std::uint64_t seed = 0;
  int subdivide_k = 0;
  std::string output = "-";
};

int run_gen(const GenOpts& o) {
  lllcolor::Graph g;
  if (o.family == "complete") g = lllcolor::complete_graph(o.n);
  else if (o.family == "cycle") g = lllcolor::cycle_graph(o.n);
  else if (o.family == "path") g = lllcolor::path_graph(o.n);
  else if (o.family == "petersen") g = lllcolor::petersen_graph();
  else if (o.family == "hypercube") g = lllcolor::hypercube_graph(o.dim);
  else if (o.family == "random-regular")
    g = lllcolor::random_regular_graph(o.n, o.degree, o.seed);
  else throw CLI::ValidationError("--family", "unknown family: " + o.family);
  if (o.subdivide_k > 0) g = lllcolor::subdivide(g, o.subdivide_k);
  write_output(o.output, lllcolor::write_dimacs(g));
  return 0;
}

// ---- bounds ----

struct BoundsOpts {
  std::vector<std::string> variants;
  int delta = 3;
  int girth = 5;
  int eta = 2;
  int beta = 2;
  std::string ratio = "cap";
  std::string format = "text";
  std::string output = "-";
};

ordered_json bound_to_json(const lllcolor::BoundResult& b) {
  ordered_json j;
  j["variant"] = b.variant;
  j["delta"] = b.delta ? ordered_json(*b.delta) : ordered_json(nullptr);
  j["girth"] = b.girth ? ordered_json(*b.girth) : ordered_json(nullptr);
  j["eta"] = b.eta ? ordered_json(*b.eta) : ordered_json(nullptr);
  j["beta"] = b.beta ? ordered_json(*b.beta) : ordered_json(nullptr);
  j["alpha"] = round10(b.alpha);
  j["constant"] = round10(b.constant);
  if (b.constant2) j["constant2"] = round10(*b.constant2);
  j["colors"] = b.colors;
  if (b.stage_colors) j["stage_colors"] = *b.stage_colors;
  if (!b.notes.empty()) j["notes"] = b.notes;
  return j;
}

int run_bounds(const BoundsOpts& o) {
  std::vector<lllcolor::BoundResult> rows;
  auto all = o.variants.empty() ||
             (o.variants.size() == 1 && o.variants[0] == "all");
  std::vector<std::string> want = all
      ? std::vector<std::string>{"proper-edge", "acyclic-edge", "girth-acyclic-edge",
                                 "girth-threshold", "acyclic-vertex", "star", "frugal"}
      : o.variants;
  for (const auto& v : want) {
    if (v == "proper-edge") rows.push_back(lllcolor::proper_edge_constant(o.delta));
    else if (v == "acyclic-edge") rows.push_back(lllcolor::bound_acyclic_edge(o.delta));
    else if (v == "girth-acyclic-edge") {
      lllcolor::GirthRatio mode = o.ratio == "cap" ? lllcolor::GirthRatio::cap_3_2
                                : o.ratio == "exact" ? lllcolor::GirthRatio::exact
                                : lllcolor::GirthRatio::limit;
      if (o.ratio != "cap" && o.ratio != "exact" && o.ratio != "limit")
        throw CLI::ValidationError("--ratio", "must be cap, exact, or limit");
      rows.push_back(lllcolor::bound_girth_acyclic_edge(o.delta, o.girth, o.eta, mode));
    } else if (v == "girth-threshold")
      rows.push_back(lllcolor::girth_threshold_delta_plus_2(o.delta));
    else if (v == "acyclic-vertex") rows.push_back(lllcolor::bound_acyclic_vertex(o.delta));
    else if (v == "star") rows.push_back(lllcolor::bound_star(o.delta));
    else if (v == "frugal") rows.push_back(lllcolor::bound_frugal(o.delta, o.beta));
    else throw CLI::ValidationError("--variant", "unknown variant: " + v);
  }

  std::ostringstream out;
  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& b : rows) arr.push_back(bound_to_json(b));
    out << arr.dump(2) << '\n';
  } else if (o.format == "text") {
    char line[256];
    std::snprintf(line, sizeof(line), "%-20s %5s %5s %4s %4s %12s %12s %10s\n",
                  "variant", "delta", "g", "eta", "beta", "alpha", "constant", "N");
    out << line;
    for (const auto& b : rows) {
      auto opt = [](const std::optional<int>& x) {
        return x ? std::to_string(*x) : std::string("-");
      };
      std::snprintf(line, sizeof(line), "%-20s %5s %5s %4s %4s %12.6g %12.8g %10lld\n",
                    b.variant.c_str(), opt(b.delta).c_str(), opt(b.girth).c_str(),
                    opt(b.eta).c_str(), opt(b.beta).c_str(), b.alpha, b.constant, b.colors);
      out << line;
    }
  } else {
    throw CLI::ValidationError("--format", "must be json or text");
  }
  write_output(o.output, out.str());
  return 0;
}

// ---- lll-check ----

struct LllCheckOpts {
  std::string input = "-";
  std::string mode = "improved-exact";
  std::string format = "json";
  std::string output = "-";
};

int run_lll_check(const LllCheckOpts& o) {
  auto j = nlohmann::json::parse(read_input(o.input));
  auto d = lllcolor::dependency_graph_from_json(j);
  lllcolor::LllMode mode;
  if (o.mode == "classic") mode = lllcolor::LllMode::classic;
  else if (o.mode == "improved-exact") mode = lllcolor::LllMode::improved_exact;
  else if (o.mode == "improved-clique") mode = lllcolor::LllMode::improved_clique;
  else throw CLI::ValidationError("--mode", "must be classic, improved-exact, or improved-clique");
  auto rep = lllcolor::check_condition(d, mode);

  std::ostringstream out;
  if (o.format == "json") {
    ordered_json jr;
    jr["mode"] = to_string(rep.mode);
    jr["pass"] = rep.pass;
    jr["events"] = ordered_json::array();
    for (const auto& e : rep.events)
      jr["events"].push_back({{"p", round10(e.p)},
                              {"bound", round10(e.bound)},
                              {"pass", e.pass},
                              {"margin", round10(e.margin)}});
    out << jr.dump(2) << '\n';
  } else {
    out << "mode " << to_string(rep.mode) << " overall "
        << (rep.pass ? "pass" : "FAIL") << '\n';
    for (std::size_t i = 0; i < rep.events.size(); ++i) {
      char line[160];
      std::snprintf(line, sizeof(line), "event %4zu  p=%.10g  bound=%.10g  %s\n", i,
                    rep.events[i].p, rep.events[i].bound, rep.events[i].pass ? "pass" : "FAIL");
      out << line;
    }
  }
  write_output(o.output, out.str());
  return rep.pass ? 0 : 2;
}

// ---- color ----

struct ColorOpts {
  std::string graph = "-";
  std::string variant = "acyclic-edge";
  long long colors = 0;
  int eta = 2;
  int beta = 2;
  std::uint64_t seed = 0;
  std::string seeds;  // "a..b" inclusive
  long long max_resamples = lllcolor::kDefaultMaxResamples;
  int max_cycle_len = -1;
  std::string output = "-";
};

int run_color(const ColorOpts& o) {
  auto g = lllcolor::parse_dimacs(read_input(o.graph));
  lllcolor::Variant variant;
  if (o.variant == "acyclic-edge") variant = lllcolor::Variant::acyclic_edge;
  else if (o.variant == "girth-eta") variant = lllcolor::Variant::girth_eta;
  else if (o.variant == "delta-plus-2") variant = lllcolor::Variant::delta_plus_2;
  else if (o.variant == "acyclic-vertex") variant = lllcolor::Variant::acyclic_vertex;
  else if (o.variant == "star") variant = lllcolor::Variant::star;
  else if (o.variant == "frugal") variant = lllcolor::Variant::frugal;
  else throw CLI::ValidationError("--variant", "unknown variant: " + o.variant);
  if (o.colors < 1 && variant != lllcolor::Variant::delta_plus_2)
    throw CLI::ValidationError("--colors", "a positive palette size is required");

  std::vector<std::uint64_t> seeds{o.seed};
  if (!o.seeds.empty()) {
    auto sep = o.seeds.find("..");
    if (sep == std::string::npos)
      throw CLI::ValidationError("--seeds", "expected the form a..b");
    std::uint64_t a = std::stoull(o.seeds.substr(0, sep));
    std::uint64_t b = std::stoull(o.seeds.substr(sep + 2));
    if (b < a) throw CLI::ValidationError("--seeds", "range end before start");
    seeds.clear();
    for (std::uint64_t s = a; s <= b; ++s) seeds.push_back(s);
  }

  // fan out, then emit in seed order
  std::vector<std::future<lllcolor::SolveReport>> futures;
  for (auto s : seeds)
    futures.push_back(std::async(std::launch::async, [&, s] {
      return lllcolor::solve_variant(g, variant, o.colors, s, o.eta, o.beta,
                                     o.max_resamples, o.max_cycle_len);
    }));
  std::ostringstream out;
  bool all_valid = true;
  for (auto& f : futures) {
    auto rep = f.get();
    all_valid = all_valid && rep.valid;
    out << to_json(rep).dump() << '\n';
  }
  write_output(o.output, out.str());
  return all_valid ? 0 : 2;
}

// ---- verify ----

struct VerifyOpts {
  std::string graph;
  std::string report = "-";
  std::string variant;  // override; defaults to the report's variant
  int eta = 2;
  int beta = 2;
};

int run_verify(const VerifyOpts& o) {
  auto g = lllcolor::parse_dimacs(read_input(o.graph));
  auto j = nlohmann::json::parse(read_input(o.report));
  std::string variant = o.variant.empty() ? j.at("variant").get<std::string>() : o.variant;
  // solver variants map onto verifier properties
  if (variant == "girth-eta" || variant == "delta-plus-2") variant = "acyclic-edge";
  auto vv = lllcolor::verify_variant_from_string(variant);
  if (!vv) throw CLI::ValidationError("--variant", "unknown variant: " + variant);

  bool edge_target = *vv == lllcolor::VerifyVariant::proper_edge ||
                     *vv == lllcolor::VerifyVariant::acyclic_edge ||
                     *vv == lllcolor::VerifyVariant::eta_stage;
  lllcolor::Coloring c;
  c.target = edge_target ? lllcolor::ColoringTarget::edges : lllcolor::ColoringTarget::vertices;
  c.assignment = j.at("assignment").get<std::vector<int>>();
  c.palette = j.value("colors", 0LL);
  lllcolor::VerifyParams params;
  params.eta = o.eta;
  params.beta = o.beta;
  auto violation = lllcolor::verify(g, c, *vv, params);
  if (!violation) {
    std::cout << "ok\n";
    return 0;
  }
  std::cout << "violation " << violation->kind << " [";
  for (std::size_t i = 0; i < violation->scope.size(); ++i)
    std::cout << (i ? "," : "") << violation->scope[i];
  std::cout << "] " << violation->description << '\n';
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph coloring toolkit: certificates, bounds, resampling solver", "lllcolor"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* cgen = app.add_subcommand("gen", "generate a graph and write DIMACS edge format");
  cgen->add_option("--family", gen.family,
                   "complete|cycle|path|petersen|hypercube|random-regular")
      ->capture_default_str();
  cgen->add_option("--n", gen.n, "vertex count")->capture_default_str();
  cgen->add_option("--degree", gen.degree, "degree (random-regular)")->capture_default_str();
  cgen->add_option("--dim", gen.dim, "dimension (hypercube)")->capture_default_str();
  cgen->add_option("--seed", gen.seed, "generator seed")->capture_default_str();
  cgen->add_option("--subdivide", gen.subdivide_k, "subdivide every edge k times")
      ->capture_default_str();
  cgen->add_option("--output", gen.output, "output path, - for stdout")->capture_default_str();

  BoundsOpts bounds;
  auto* cbounds = app.add_subcommand("bounds", "print guaranteed color counts per variant");
  cbounds->add_option("--variant", bounds.variants,
                      "proper-edge|acyclic-edge|girth-acyclic-edge|girth-threshold|"
                      "acyclic-vertex|star|frugal|all (repeatable)");
  cbounds->add_option("--delta", bounds.delta, "maximum degree")->capture_default_str();
  cbounds->add_option("--girth", bounds.girth, "girth (girth-acyclic-edge)")
      ->capture_default_str();
  cbounds->add_option("--eta", bounds.eta, "per-vertex multiplicity eta")->capture_default_str();
  cbounds->add_option("--beta", bounds.beta, "frugality beta")->capture_default_str();
  cbounds->add_option("--ratio", bounds.ratio, "cap|exact|limit (girth-acyclic-edge)")
      ->capture_default_str();
  cbounds->add_option("--format", bounds.format, "text|json")->capture_default_str();
  cbounds->add_option("--output", bounds.output, "output path, - for stdout")
      ->capture_default_str();

  LllCheckOpts lc;
  auto* clc = app.add_subcommand("lll-check", "check the per-event condition on a "
                                              "dependency-graph JSON file");
  clc->add_option("--input", lc.input, "dependency-graph JSON, - for stdin")
      ->capture_default_str();
  clc->add_option("--mode", lc.mode, "classic|improved-exact|improved-clique")
      ->capture_default_str();
  clc->add_option("--format", lc.format, "json|text")->capture_default_str();
  clc->add_option("--output", lc.output, "output path, - for stdout")->capture_default_str();

  ColorOpts color;
  auto* ccolor = app.add_subcommand("color", "find a coloring by resampling; emits one "
                                             "JSON report per seed");
  ccolor->add_option("--graph", color.graph, "DIMACS input, - for stdin")->capture_default_str();
  ccolor->add_option("--variant", color.variant,
                     "acyclic-edge|girth-eta|delta-plus-2|acyclic-vertex|star|frugal")
      ->capture_default_str();
  ccolor->add_option("--colors", color.colors,
                     "palette size N (stage palette for girth-eta; ignored for delta-plus-2)");
  ccolor->add_option("--eta", color.eta, "eta (girth-eta)")->capture_default_str();
  ccolor->add_option("--beta", color.beta, "beta (frugal)")->capture_default_str();
  ccolor->add_option("--seed", color.seed, "single seed")->capture_default_str();
  ccolor->add_option("--seeds", color.seeds, "seed range a..b, run concurrently");
  ccolor->add_option("--max-resamples", color.max_resamples, "resample budget")
      ->capture_default_str();
  ccolor->add_option("--max-cycle-len", color.max_cycle_len,
                     "cycle-event length cap (-1 = all lengths)")
      ->capture_default_str();
  ccolor->add_option("--output", color.output, "output path, - for stdout")
      ->capture_default_str();

  VerifyOpts verify;
  auto* cverify = app.add_subcommand("verify", "validate a solve report against its graph");
  cverify->add_option("--graph", verify.graph, "DIMACS input, - for stdin")->required();
  cverify->add_option("--report", verify.report, "solve-report JSON, - for stdin")
      ->capture_default_str();
  cverify->add_option("--variant", verify.variant,
                      "property override: proper-edge|acyclic-edge|proper-vertex|"
                      "acyclic-vertex|star|frugal|eta-stage");
  cverify->add_option("--eta", verify.eta, "eta (eta-stage)")->capture_default_str();
  cverify->add_option("--beta", verify.beta, "beta (frugal)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cgen->parsed()) return run_gen(gen);
    if (cbounds->parsed()) return run_bounds(bounds);
    if (clc->parsed()) return run_lll_check(lc);
    if (ccolor->parsed()) return run_color(color);
    if (cverify->parsed()) return run_verify(verify);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
