// qwalk: continuous-time quantum walks on circulant and Abelian group
// circulant graphs — spectra, instantaneous and time-averaged distributions,
// uniform-mixing search, and number-theoretic non-mixing certificates.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qwalk/graph_io.hpp"
#include "qwalk/mixing.hpp"
#include "qwalk/numtheory.hpp"
#include "qwalk/report.hpp"
#include "qwalk/verify.hpp"
#include "qwalk/walk.hpp"

namespace {

using namespace qwalk;

OutputFormat parse_format(const std::string& s) {
  return s == "csv" ? OutputFormat::Csv : OutputFormat::Json;
}

TvConvention parse_convention(const std::string& s) {
  return s == "half" ? TvConvention::Half : TvConvention::L1;
}

void add_format_option(CLI::App* cmd, std::string& fmt) {
  cmd->add_option("--format", fmt, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

void add_convention_option(CLI::App* cmd, std::string& conv) {
  cmd->add_option("--tv-convention", conv,
                  "Total-variation convention: 'l1' reports sum|p-q|, "
                  "'half' reports half of that")
      ->check(CLI::IsMember({"l1", "half"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Continuous-time quantum walks on circulant and Abelian group "
      "circulant graphs"};
  app.set_version_flag("--version", "qwalk 1.0.0");
  app.require_subcommand(1);

  // Shared option storage (each subcommand binds the ones it uses).
  std::string graph_arg;
  std::string format = "json";
  std::string convention = "l1";
  double collision_tol = default_collision_tol;
  double uniform_tol = 1e-9;
  double t = 0.0;
  double t_max = 0.0;
  index_t grid = 2001;
  int refine = 40;
  index_t classify_n = 0;
  std::string family = "all";
  index_t range_min = -1;
  index_t range_max = -1;

  const char* graph_help =
      "Graph description: inline JSON, a path to a JSON file, or '-' for "
      "standard input";
  const char* tol_help = "Eigenvalue collision tolerance";

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Eigenvalues and collision classes of the walk Hamiltonian");
  spectrum->add_option("--graph", graph_arg, graph_help)->required();
  spectrum->add_option("--tol", collision_tol, tol_help)->capture_default_str();
  add_format_option(spectrum, format);

  CLI::App* evolve_cmd = app.add_subcommand(
      "evolve", "Amplitudes and distribution of the walk from vertex 0 at time t");
  evolve_cmd->add_option("--graph", graph_arg, graph_help)->required();
  evolve_cmd->add_option("--t", t, "Evolution time")->required();
  evolve_cmd->add_option("--tol", collision_tol, tol_help)->capture_default_str();
  add_convention_option(evolve_cmd, convention);
  add_format_option(evolve_cmd, format);

  CLI::App* average = app.add_subcommand(
      "average", "Limiting time-averaged distribution from vertex 0");
  average->add_option("--graph", graph_arg, graph_help)->required();
  average->add_option("--tol", collision_tol, tol_help)->capture_default_str();
  average
      ->add_option("--uniform-tol", uniform_tol,
                   "Pointwise tolerance for the uniformity flag")
      ->capture_default_str();
  add_convention_option(average, convention);
  add_format_option(average, format);

  CLI::App* search = app.add_subcommand(
      "search", "Minimize TV distance to uniform over t in [0, t-max]");
  search->add_option("--graph", graph_arg, graph_help)->required();
  search->add_option("--t-max", t_max, "Upper end of the search window")
      ->required();
  search->add_option("--grid", grid, "Number of uniform grid points")
      ->capture_default_str();
  search
      ->add_option("--refine", refine,
                   "Golden-section refinement iterations around the best "
                   "grid point")
      ->capture_default_str();
  search->add_option("--tol", collision_tol, tol_help)->capture_default_str();
  add_convention_option(search, convention);
  add_format_option(search, format);

  CLI::App* classify = app.add_subcommand(
      "classify", "Uniform-mixing verdict for the cycle C_n from its "
                  "two-adic split and Diophantine certificate");
  classify->add_option("--n", classify_n, "Cycle order (n >= 2)")->required();
  add_format_option(classify, format);

  CLI::App* verify = app.add_subcommand(
      "verify", "Numerically verify the spectral identities on graph families");
  verify
      ->add_option("--family", family,
                   "Family to check (default: all at desk-scale ranges)")
      ->check(CLI::IsMember({"cycles", "complete", "hypercubes", "all"}))
      ->capture_default_str();
  verify->add_option("--min", range_min, "Smallest order / dimension");
  verify->add_option("--max", range_max, "Largest order / dimension");
  add_format_option(verify, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    const OutputFormat fmt = parse_format(format);
    const TvConvention conv = parse_convention(convention);

    if (spectrum->parsed()) {
      const GraphSpec g = load_graph_argument(graph_arg);
      const Spectrum spec = std::visit(
          [&](const auto& s) { return Engine(s, collision_tol).spectrum(); }, g);
      std::cout << report_spectrum(g, spec, fmt);
      return 0;
    }

    if (evolve_cmd->parsed()) {
      const GraphSpec g = load_graph_argument(graph_arg);
      const AmplitudeVector state = std::visit(
          [&](const auto& s) { return Engine(s, collision_tol).amplitudes(t); },
          g);
      std::cout << report_evolve(g, state, conv, fmt);
      return 0;
    }

    if (average->parsed()) {
      const GraphSpec g = load_graph_argument(graph_arg);
      const AverageDistribution avg = std::visit(
          [&](const auto& s) { return average_distribution(s, collision_tol); },
          g);
      std::cout << report_average(g, avg, collision_tol, uniform_tol, conv, fmt);
      return 0;
    }

    if (search->parsed()) {
      const GraphSpec g = load_graph_argument(graph_arg);
      const MixingSearchResult result = std::visit(
          [&](const auto& s) { return search_min_tv(s, t_max, grid, refine); },
          g);
      std::cout << report_search(g, t_max, result, conv, fmt);
      return 0;
    }

    if (classify->parsed()) {
      std::cout << report_classify(classify_cycle(classify_n), fmt);
      return 0;
    }

    if (verify->parsed()) {
      SuiteResult suite;
      if (family == "all") {
        if (range_min >= 0 || range_max >= 0)
          throw std::invalid_argument(
              "verify: --min/--max require a specific --family");
        suite = verify_all();
      } else {
        index_t lo = range_min, hi = range_max;
        if (family == "cycles") {
          if (lo < 0) lo = 2;
          if (hi < 0) hi = 32;
          suite = verify_cycles(lo, hi);
        } else if (family == "complete") {
          if (lo < 0) lo = 2;
          if (hi < 0) hi = 24;
          suite = verify_complete(lo, hi);
        } else {
          if (lo < 0) lo = 1;
          if (hi < 0) hi = 8;
          suite = verify_hypercubes(lo, hi);
        }
      }
      std::cout << report_verify(suite, fmt);
      return suite.all_passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}
