// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is nonzero when any criterion fails.
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "splitcircle/acceptance.hpp"

int main(int argc, char** argv) {
  splitcircle::AcceptanceConfig cfg;
  CLI::App app{"split circle acceptance run"};
  app.add_option("--cap", cfg.circle_cap, "largest graph handed to the circle oracle");
  app.add_option("--seed", cfg.seed, "seed for the random suites");
  app.add_option("--random-graphs", cfg.random_graphs, "random split graphs on 8 and 9 vertices");
  app.add_option("--random-matrices", cfg.random_matrices, "random matrices for the engines");
  app.add_option("--exhaustive", cfg.exhaustive_max_n, "all split graphs up to this size");
  CLI11_PARSE(app, argc, argv);

  auto results = splitcircle::run_acceptance(cfg, &std::cout);
  splitcircle::print_report(std::cout, results);
  for (const auto& r : results) {
    if (!r.passed()) return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
