// split_circle: recognition, witnesses, chord models, rendering, catalog access
// and the acceptance self-check.
//
// Exit codes: 0 circle or success, 2 not circle, 3 not split, 1 error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "splitcircle/acceptance.hpp"
#include "splitcircle/catalog.hpp"
#include "splitcircle/chord.hpp"
#include "splitcircle/error.hpp"
#include "splitcircle/graph.hpp"
#include "splitcircle/oracle.hpp"
#include "splitcircle/recognize.hpp"

namespace sc = splitcircle;

namespace {

constexpr int kExitCircle = 0;
constexpr int kExitError = 1;
constexpr int kExitNotCircle = 2;
constexpr int kExitNotSplit = 3;

int exit_code(sc::Status s) {
  switch (s) {
    case sc::Status::Circle: return kExitCircle;
    case sc::Status::NotCircle: return kExitNotCircle;
    case sc::Status::NotSplit: return kExitNotSplit;
  }
  return kExitError;
}

int cap_from_env(int fallback) {
  const char* v = std::getenv("SPLIT_CIRCLE_CAP");
  if (!v || !*v) return fallback;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw sc::Error(sc::ErrorKind::ParseError, std::string("bad SPLIT_CIRCLE_CAP: ") + v);
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sc::Error(sc::ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::ordered_json witness_json(const sc::FscWitness& w) {
  nlohmann::ordered_json j;
  j["family"] = sc::to_string(w.family);
  j["k"] = w.k;
  j["vertices"] = w.vertices;
  return j;
}

int run_recognize(const std::string& path) {
  sc::Verdict v = sc::recognize(sc::read_graph_file(path));
  std::cout << sc::verdict_to_json(v) << "\n";
  return exit_code(v.status);
}

int run_witness(const std::string& path, int cap) {
  sc::Graph g = sc::read_graph_file(path);
  sc::RecognizeOptions opt;
  opt.build_model = false;
  sc::Verdict v = sc::recognize(g, opt);
  if (v.status != sc::Status::NotCircle) {
    std::cerr << "graph is " << sc::to_string(v.status) << "; no witness\n";
    return exit_code(v.status);
  }
  nlohmann::ordered_json j = witness_json(*v.witness);
  if (static_cast<int>(v.witness->vertices.size()) <= cap) {
    sc::OracleConfig oc;
    oc.circle_cap = cap;
    sc::Graph h = sc::induced_subgraph(g, v.witness->vertices);
    j["oracleNonCircle"] = !sc::oracle_is_circle(h, oc);
  }
  std::cout << j.dump() << "\n";
  return kExitNotCircle;
}

int run_model(const std::string& path) {
  sc::Verdict v = sc::recognize(sc::read_graph_file(path));
  if (v.status != sc::Status::Circle) {
    std::cerr << "graph is " << sc::to_string(v.status) << "; no model\n";
    return exit_code(v.status);
  }
  std::cout << sc::format_model(*v.model);
  return kExitCircle;
}

int run_render(const std::string& path) {
  sc::ChordModel m = sc::parse_model(read_text(path));
  sc::validate_model(m);
  std::cout << sc::render_svg(m);
  return kExitCircle;
}

int run_catalog(const std::string& family, int k, const std::string& sidecar) {
  sc::FscFamily f = sc::parse_fsc_family(family);
  sc::FscMember m = sc::make_fsc(f, k);
  nlohmann::ordered_json j;
  j["family"] = sc::to_string(m.family);
  j["k"] = m.k;
  j["clique"] = m.clique;
  j["stable"] = m.stable;
  std::cout << sc::format_graph(m.graph);
  if (sidecar.empty()) {
    std::cerr << j.dump() << "\n";
  } else {
    std::ofstream out(sidecar);
    if (!out) throw sc::Error(sc::ErrorKind::ParseError, "cannot write " + sidecar);
    out << j.dump() << "\n";
  }
  return kExitCircle;
}

int run_selfcheck(int cap, std::uint64_t seed) {
  sc::AcceptanceConfig cfg;
  cfg.circle_cap = cap;
  cfg.seed = seed;
  auto results = sc::run_acceptance(cfg, &std::cout);
  sc::print_report(std::cout, results);
  for (const auto& r : results) {
    if (!r.passed()) return kExitError;
  }
  return kExitCircle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circle recognition for split graphs"};
  app.require_subcommand(1);

  std::string file;
  int k = 0;
  std::string sidecar;
  int cap = sc::AcceptanceConfig{}.circle_cap;
  std::uint64_t seed = sc::AcceptanceConfig{}.seed;

  auto* recognize = app.add_subcommand("recognize", "print the verdict as JSON");
  recognize->add_option("file", file, "graph file")->required();
  auto* witness = app.add_subcommand("witness", "print a forbidden induced subgraph");
  witness->add_option("file", file, "graph file")->required();
  auto* model = app.add_subcommand("model", "print a chord model");
  model->add_option("file", file, "graph file")->required();
  auto* render = app.add_subcommand("render", "render a chord model as SVG");
  render->add_option("model-file", file, "model file")->required();
  auto* catalog = app.add_subcommand("catalog", "print a member of the obstruction catalog");
  catalog->add_option("family", file, "family name")->required();
  catalog->add_option("k", k, "family parameter (0 for sporadic members)");
  catalog->add_option("--json", sidecar, "write the JSON sidecar here instead of stderr");
  auto* selfcheck = app.add_subcommand("selfcheck", "run the acceptance suite");
  selfcheck->add_option("--cap", cap, "largest graph handed to the circle oracle");
  selfcheck->add_option("--seed", seed, "seed for the random suites");

  CLI11_PARSE(app, argc, argv);

  try {
    int env_cap = cap_from_env(cap);
    if (selfcheck->count("--cap") == 0) cap = env_cap;
    if (*recognize) return run_recognize(file);
    if (*witness) return run_witness(file, env_cap);
    if (*model) return run_model(file);
    if (*render) return run_render(file);
    if (*catalog) return run_catalog(file, k, sidecar);
    if (*selfcheck) return run_selfcheck(cap, seed);
  } catch (const sc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
