// Command-line front end. Every subcommand fills an ExperimentConfig and hands it to kopt::run.

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kopt/app.hpp"
#include "kopt/error.hpp"
#include "kopt/io.hpp"

namespace {

void add_common(CLI::App* cmd, kopt::ExperimentConfig& c) {
  cmd->add_option("--k", c.k, "Neighbourhood size k")->capture_default_str();
  cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  cmd->add_option("--budget", c.budget, "Search budget for certificates");
  cmd->add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

void add_instance_source(CLI::App* cmd, kopt::ExperimentConfig& c) {
  cmd->add_option("--instance", c.instance_path, "Instance file");
  cmd->add_option("--instance-format", c.instance_format,
                  "full-matrix | edge-list | unit-edge-list")
      ->capture_default_str();
  cmd->add_option("--tour", c.tour_path, "Tour file (TSPLIB, 1-based)");
  cmd->add_option("--random", c.random_kind, "Random instance kind")
      ->check(CLI::IsMember({"metric", "clustered", "one-two", "graph"}))
      ->capture_default_str();
  cmd->add_option("--n", c.n, "Vertices per random instance")->capture_default_str();
  cmd->add_option("--count", c.count, "Number of random instances")->capture_default_str();
  cmd->add_option("--max-weight", c.max_weight, "Largest random metric weight")
      ->capture_default_str();
  cmd->add_option("--clusters", c.clusters, "Clusters for clustered instances")
      ->capture_default_str();
  cmd->add_option("--percent", c.percent, "Edge density for one-two and graph instances")
      ->capture_default_str();
}

void add_construction(CLI::App* cmd, kopt::ExperimentConfig& c, bool required) {
  auto* opt = cmd->add_option("--construction", c.construction, "graph-tsp | one-two-tsp")
                  ->check(CLI::IsMember({"graph-tsp", "one-two-tsp"}));
  if (required) opt->required();
  cmd->add_option("--cage-degree", c.cage_degree, "Degree of the base graph");
  cmd->add_option("--cage-girth", c.cage_girth, "Girth of the base graph");
  cmd->add_option("--graph", c.graph_path, "Base graph edge-list file");
  cmd->add_option("--f", c.f, "Graph TSP: traversals per base edge")->capture_default_str();
  cmd->add_option("--g", c.g, "(1,2)-TSP: girth parameter (default: base girth)");
}

}  // namespace

int main(int argc, char** argv) {
  kopt::ExperimentConfig c;
  std::string config_path;
  std::string timings_path;
  std::string report_path;

  CLI::App app{"Local search worst cases, certificates and constructions for the TSP"};
  app.require_subcommand(0, 1);
  app.add_option("--config", config_path, "Run a JSON experiment config");
  app.add_option("--timings", timings_path, "Write wall-clock phase timings to this file");
  app.add_option("--report", report_path, "Write the report to this file instead of stdout");

  auto* construct = app.add_subcommand("construct", "Build a lower-bound construction");
  add_construction(construct, c, true);
  construct->add_option("--k", c.k, "Neighbourhood size k")->capture_default_str();
  construct->add_option("--a", c.a, "Graph TSP: copies")->capture_default_str();
  construct->add_option("--b", c.b, "Graph TSP: extra vertices")->capture_default_str();
  construct->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  construct->add_option("--out", c.out_dir, "Write the bundle to this directory");

  auto* solve = app.add_subcommand("solve", "Run a local search and compare with a reference");
  add_common(solve, c);
  add_instance_source(solve, c);
  solve->add_option("--algorithm", c.algorithm, "k-opt | lin-kernighan | k-improv")
      ->check(CLI::IsMember({"k-opt", "lin-kernighan", "k-improv"}))
      ->capture_default_str();
  solve->add_option("--p1", c.p1, "LK backtracking depth (default 2k-1)");
  solve->add_option("--p2", c.p2, "LK infeasibility depth (default 2k-4)");
  solve->add_flag("--verify", c.verify, "Certify every local optimum");

  auto* certify = app.add_subcommand("certify", "Certify local optimality of a tour");
  add_common(certify, c);
  certify->add_option("--bundle", c.bundle_path, "Bundle directory");
  certify->add_option("--instance", c.instance_path, "Instance file");
  certify->add_option("--instance-format", c.instance_format,
                      "full-matrix | edge-list | unit-edge-list")
      ->capture_default_str();
  certify->add_option("--tour", c.tour_path, "Tour file");
  add_construction(certify, c, false);
  certify->add_option("--certificate", c.certificate, "k-opt | alternating | k-improv | subedge")
      ->check(CLI::IsMember({"k-opt", "alternating", "k-improv", "subedge"}))
      ->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Length classes and short-cycle certificates");
  add_common(analyze, c);
  add_instance_source(analyze, c);
  analyze->add_option("--reference", c.reference_path, "Reference tour file");
  analyze->add_option("--perturb", c.perturb,
                      "Analyze the reference after this many random reversals instead of k-opt");
  analyze->add_flag("--extract", c.extract, "Extract an improving move from every short cycle");

  auto* sweep = app.add_subcommand("ratio-sweep", "Tabulate construction ratios");
  add_common(sweep, c);
  add_construction(sweep, c, true);
  sweep->add_option("--a", c.a_values, "Graph TSP: values of a");
  sweep->add_option("--b", c.b_values, "Graph TSP: values of b");
  sweep->add_option("--girths", c.girths, "(1,2)-TSP: base girths");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kopt::kExitOk : kopt::kExitUsage;
  }

  try {
    if (!config_path.empty()) {
      if (app.get_subcommands().size() > 0) {
        std::cerr << "error: --config cannot be combined with a subcommand\n";
        return kopt::kExitUsage;
      }
      c = kopt::config_from_json(kopt::read_text_file(config_path));
    } else if (construct->parsed()) {
      c.task = kopt::Task::Construct;
    } else if (solve->parsed()) {
      c.task = kopt::Task::Solve;
    } else if (certify->parsed()) {
      c.task = kopt::Task::Certify;
    } else if (analyze->parsed()) {
      c.task = kopt::Task::Analyze;
    } else if (sweep->parsed()) {
      c.task = kopt::Task::RatioSweep;
    } else {
      std::cerr << app.help();
      return kopt::kExitUsage;
    }

    const kopt::RunResult result = kopt::run(c);
    if (report_path.empty()) {
      std::cout << result.report;
    } else {
      kopt::write_text_file(report_path, result.report);
    }
    if (!timings_path.empty()) {
      std::ostringstream t;
      for (const auto& [phase, seconds] : result.timings) t << phase << ' ' << seconds << '\n';
      kopt::write_text_file(timings_path, t.str());
    }
    return result.exit_code;
  } catch (const kopt::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kopt::kExitUsage;
  } catch (const kopt::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kopt::kExitUsage;
  } catch (const kopt::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kopt::kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kopt::kExitInternal;
  }
}
