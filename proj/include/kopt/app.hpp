#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kopt/certify.hpp"
#include "kopt/instance.hpp"

namespace kopt {

enum class Task { Construct, Solve, Certify, Analyze, RatioSweep };

std::string task_name(Task task);
Task parse_task(std::string_view name);

// Everything a run depends on. Serializes to JSON; the same config gives the same report bytes.
struct ExperimentConfig {
  Task task = Task::Solve;

  // Instance source: a file, a bundle directory, a construction, or the random generator.
  std::string instance_path;
  std::string instance_format = "full-matrix";
  std::string tour_path;
  std::string reference_path;
  std::string bundle_path;
  std::string random_kind = "metric";  // metric | clustered | one-two | graph
  int n = 12;
  int count = 1;
  Cost max_weight = 100;
  int clusters = 3;
  int percent = 30;

  // Constructions.
  std::string construction;  // graph-tsp | one-two-tsp
  int cage_degree = 0;       // 0: derived from the construction
  int cage_girth = 0;
  std::string graph_path;
  int f = 2;
  int g = 0;  // 0: the base girth
  int a = 1;
  int b = 0;
  std::vector<int> a_values;
  std::vector<int> b_values;
  std::vector<int> girths;

  // Algorithms and certificates.
  std::string algorithm = "k-opt";  // k-opt | lin-kernighan | k-improv
  int k = 2;
  int p1 = -1;  // -1: the k-Lin-Kernighan parameters
  int p2 = -1;
  std::string certificate = "k-opt";  // k-opt | k-improv | alternating | subedge
  bool verify = false;
  bool extract = false;
  int perturb = 0;

  std::uint64_t seed = 1;
  std::uint64_t budget = kUnlimitedBudget;
  std::string format = "json";  // json | csv
  std::string out_dir;
};

std::string config_to_json(const ExperimentConfig& config);
// Missing keys keep their defaults; unknown keys throw InvalidInput.
ExperimentConfig config_from_json(std::string_view text);

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotCertified = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

struct RunResult {
  std::string report;
  int exit_code = kExitOk;
  std::vector<std::pair<std::string, double>> timings;  // wall seconds per phase, kept out of the report
};

// Throws InvalidInput / ParseError on a bad config or input file.
RunResult run(const ExperimentConfig& config);

// n/d rendered with six decimals, rounded half up, computed exactly.
std::string decimal6(std::int64_t numerator, std::int64_t denominator);

}  // namespace kopt
