#include "kopt/app.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <type_traits>
#include <variant>

#include <json.hpp>

#include "kopt/adversarial.hpp"
#include "kopt/analyzer.hpp"
#include "kopt/error.hpp"
#include "kopt/exact.hpp"
#include "kopt/extremal.hpp"
#include "kopt/io.hpp"
#include "kopt/kimprov.hpp"
#include "kopt/kopt.hpp"
#include "kopt/lin_kernighan.hpp"
#include "kopt/random_instances.hpp"

namespace kopt {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::pair<Task, std::string>>& task_names() {
  static const std::vector<std::pair<Task, std::string>> names = {
      {Task::Construct, "construct"}, {Task::Solve, "solve"},        {Task::Certify, "certify"},
      {Task::Analyze, "analyze"},     {Task::RatioSweep, "ratio-sweep"}};
  return names;
}

class PhaseTimer {
 public:
  PhaseTimer(RunResult& result, std::string name)
      : result_(result), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~PhaseTimer() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    result_.timings.emplace_back(name_, std::chrono::duration<double>(elapsed).count());
  }
  PhaseTimer(const PhaseTimer&) = delete;
  PhaseTimer& operator=(const PhaseTimer&) = delete;

 private:
  RunResult& result_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

json ratio_json(std::int64_t num, std::int64_t den) {
  const Ratio r(num, den);
  return json{{"exact", r.to_string()}, {"decimal", decimal6(r.numerator(), r.denominator())}};
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(json::array({e.u, e.v}));
  return out;
}

json move_json(const KMove& move) {
  return json{{"removed", edges_json(move.removed)}, {"added", edges_json(move.added)},
              {"delta", move.delta}};
}

std::string instance_kind(const AnyInstance& inst) {
  return std::visit(
      [](const auto& i) -> std::string {
        using I = std::decay_t<decltype(i)>;
        if constexpr (std::is_same_v<I, MetricInstance>) return "metric";
        if constexpr (std::is_same_v<I, GraphInstance>) return "graph";
        return "one-two";
      },
      inst);
}

// ---- instance sources ----

SimpleGraph base_graph(const ExperimentConfig& c, int degree, int girth) {
  if (!c.graph_path.empty()) return read_edge_list(read_text_file(c.graph_path));
  return regular_high_girth(degree, girth, c.seed);
}

GraphBundle graph_bundle_from_config(const ExperimentConfig& c) {
  const int degree = c.cage_degree > 0 ? c.cage_degree : 2 * c.f;
  const int girth = c.cage_girth > 0 ? c.cage_girth : 2 * c.k * c.f;
  GraphBundle bundle = build_graph_tsp_lower(c.f, c.k, base_graph(c, degree, girth));
  if (c.a != 1 || c.b != 0) bundle = extend_graph_tsp(bundle, c.a, c.b);
  return bundle;
}

OneTwoBundle one_two_bundle_from_config(const ExperimentConfig& c) {
  const int girth = c.cage_girth > 0 ? c.cage_girth : 2 * c.k + 1;
  const SimpleGraph base = base_graph(c, c.cage_degree > 0 ? c.cage_degree : 4, girth);
  int g = c.g;
  if (g == 0) {
    const std::optional<int> actual = kopt::girth(base);
    if (!actual) throw InvalidInput("base graph is a forest");
    g = *actual;
  }
  return build_12tsp_lower(c.k, g, base);
}

std::string bundle_kind(const std::string& directory) {
  std::istringstream params(read_text_file((std::filesystem::path(directory) / "params.txt").string()));
  std::string line;
  while (std::getline(params, line)) {
    if (line.rfind("kind=", 0) == 0) return line.substr(5);
  }
  throw InvalidInput("bundle " + directory + " has no kind in params.txt");
}

// Instance plus engineered tour from a bundle directory, a construction or explicit files.
struct Subject {
  AnyInstance instance;
  Tour tour;
  std::string source;
};

Subject subject_from_config(const ExperimentConfig& c) {
  if (!c.bundle_path.empty()) {
    if (bundle_kind(c.bundle_path) == "graph-tsp") {
      GraphBundle b = read_graph_bundle(c.bundle_path);
      return {b.instance, b.engineered_tour, "bundle " + c.bundle_path};
    }
    OneTwoBundle b = read_one_two_bundle(c.bundle_path);
    return {b.instance, b.engineered_tour, "bundle " + c.bundle_path};
  }
  if (c.construction == "graph-tsp") {
    GraphBundle b = graph_bundle_from_config(c);
    return {b.instance, b.engineered_tour, "graph-tsp construction: " + b.provenance};
  }
  if (c.construction == "one-two-tsp") {
    OneTwoBundle b = one_two_bundle_from_config(c);
    return {b.instance, b.engineered_tour, "one-two-tsp construction: " + b.provenance};
  }
  if (!c.construction.empty()) throw InvalidInput("unknown construction '" + c.construction + "'");
  if (c.instance_path.empty() || c.tour_path.empty()) {
    throw InvalidInput("need --bundle, --construction, or --instance with --tour");
  }
  AnyInstance inst =
      read_instance(read_text_file(c.instance_path), parse_instance_format(c.instance_format));
  Tour tour = read_tour(read_text_file(c.tour_path));
  return {std::move(inst), std::move(tour), "files " + c.instance_path + ", " + c.tour_path};
}

AnyInstance random_instance(const ExperimentConfig& c, Rng& rng) {
  if (c.random_kind == "metric") return random_metric_instance(c.n, c.max_weight, rng);
  if (c.random_kind == "clustered") return clustered_metric_instance(c.n, c.clusters, rng);
  if (c.random_kind == "one-two") return random_one_two_instance(c.n, c.percent, rng);
  if (c.random_kind == "graph") return graph_metric(random_connected_graph(c.n, c.percent, rng));
  throw InvalidInput("unknown random instance kind '" + c.random_kind + "'");
}

Tour reverse_random_segment(const Tour& tour, Rng& rng) {
  std::vector<int> order = tour.order();
  const int n = static_cast<int>(order.size());
  int i = static_cast<int>(rng() % n);
  int j = static_cast<int>(rng() % n);
  if (i > j) std::swap(i, j);
  std::reverse(order.begin() + i, order.begin() + j + 1);
  return Tour(order);
}

std::pair<int, int> lk_parameters(const ExperimentConfig& c) {
  const LkParameters def = k_lin_kernighan_parameters(c.k);
  return {c.p1 >= 0 ? c.p1 : def.p1, c.p2 >= 0 ? c.p2 : std::max(def.p2, 0)};
}

// ---- construct ----

template <class I>
json bundle_json(const ConstructionBundle<I>& b) {
  json params = json::object();
  for (const auto& [key, value] : b.params) params[key] = value;
  json out{{"params", params},
           {"provenance", b.provenance},
           {"vertices", b.instance.size()},
           {"engineered_cost", b.engineered_cost()},
           {"witness_cost", b.witness_cost()},
           {"ratio_floor", ratio_json(b.engineered_cost(), b.witness_cost())}};
  return out;
}

RunResult run_construct(const ExperimentConfig& c) {
  RunResult result;
  json report{{"task", "construct"}, {"construction", c.construction}};
  json checks = json::array();
  auto check = [&](const std::string& name, bool pass) {
    checks.push_back(json{{"name", name}, {"pass", pass}});
    if (!pass) result.exit_code = kExitNotCertified;
  };
  if (c.construction == "graph-tsp") {
    const GraphBundle b = [&] {
      PhaseTimer t(result, "build");
      return graph_bundle_from_config(c);
    }();
    report["bundle"] = bundle_json(b);
    const Cost base_cost = static_cast<Cost>(c.f) * b.param("base_vertices");
    const Cost expected = c.a * base_cost + 2 * static_cast<Cost>(c.a + c.b - 1);
    check("engineered cost = a*f*|V(base)| + 2(a+b-1) = " + std::to_string(expected),
          b.engineered_cost() == expected);
    check("|V(G')| < 2|V(base)|", b.param("vertices") < 2 * b.param("base_vertices"));
    check("witness cost <= 2(n-1)", b.witness_cost() <= 2 * static_cast<Cost>(b.instance.size() - 1));
    if (!c.out_dir.empty()) write_bundle(c.out_dir, b);
  } else if (c.construction == "one-two-tsp") {
    const OneTwoBundle b = [&] {
      PhaseTimer t(result, "build");
      return one_two_bundle_from_config(c);
    }();
    report["bundle"] = bundle_json(b);
    const Cost s = b.param("s");
    const Cost g = b.param("g");
    check("engineered cost = 11s = " + std::to_string(11 * s), b.engineered_cost() == 11 * s);
    check("witness cost <= 10s + floor(10s/g) = " + std::to_string(10 * s + 10 * s / g),
          b.witness_cost() <= 10 * s + 10 * s / g);
    check("ratio floor >= 11/(10(1+1/g))",
          Ratio(b.engineered_cost(), b.witness_cost()) >= Ratio(11 * g, 10 * (g + 1)));
    if (!c.out_dir.empty()) write_bundle(c.out_dir, b);
  } else {
    throw InvalidInput("construct needs --construction graph-tsp or one-two-tsp");
  }
  report["checks"] = checks;
  if (!c.out_dir.empty()) report["bundle_directory"] = c.out_dir;
  result.report = report.dump(2) + "\n";
  return result;
}

// ---- certify ----

RunResult run_certify(const ExperimentConfig& c) {
  RunResult result;
  Subject subject = [&] {
    PhaseTimer t(result, "load");
    return subject_from_config(c);
  }();
  json report{{"task", "certify"},
              {"source", subject.source},
              {"instance_kind", instance_kind(subject.instance)},
              {"vertices", std::visit([](const auto& i) { return i.size(); }, subject.instance)},
              {"tour_cost", std::visit([&](const auto& i) { return tour_cost(i, subject.tour); },
                                       subject.instance)},
              {"certificate", c.certificate},
              {"k", c.k}};
  CertificateStatus status = CertificateStatus::Certified;
  std::uint64_t searched = 0;
  PhaseTimer timer(result, "certify");
  if (c.certificate == "k-opt") {
    const KOptCertificate cert = std::visit(
        [&](const auto& i) { return verify_k_optimal(i, subject.tour, c.k, c.budget); },
        subject.instance);
    status = cert.status;
    searched = cert.searched;
    if (cert.counterexample) report["counterexample"] = move_json(*cert.counterexample);
    report["verdict"] = status == CertificateStatus::Certified
                            ? "certified k-optimal (k=" + std::to_string(c.k) + ")"
                            : status == CertificateStatus::Improvable ? "improving k-move found"
                                                                      : "budget exceeded";
  } else if (c.certificate == "alternating") {
    const AlternatingCycleResult r = std::visit(
        [&](const auto& i) {
          return find_improving_alternating_cycle(i, subject.tour, 2 * c.k, c.budget);
        },
        subject.instance);
    status = r.status;
    searched = r.searched;
    if (r.cycle) report["counterexample"] = json{{"cycle", *r.cycle}, {"gain", r.gain}};
    report["verdict"] = status == CertificateStatus::Certified
                            ? "no improving alternating cycle of at most " +
                                  std::to_string(2 * c.k) + " edges"
                            : status == CertificateStatus::Improvable
                                  ? "improving alternating cycle found"
                                  : "budget exceeded";
  } else if (c.certificate == "k-improv") {
    const auto* inst = std::get_if<OneTwoInstance>(&subject.instance);
    if (!inst) throw InvalidInput("k-improv certificates need a (1,2)-TSP instance");
    const TwoMatching tm = tour_to_two_matching(*inst, subject.tour);
    const ImprovCertificate cert = verify_k_improv_optimal(*inst, tm, c.k, c.budget);
    status = cert.status;
    searched = cert.searched;
    report["two_matching"] = json{{"edges", tm.num_edges()},
                                  {"components", tm.components()},
                                  {"cycles", tm.cycles()},
                                  {"singletons", tm.singletons()}};
    if (cert.counterexample) {
      report["counterexample"] = json{{"removed", edges_json(cert.counterexample->removed)},
                                      {"added", edges_json(cert.counterexample->added)}};
    }
    report["verdict"] = status == CertificateStatus::Certified
                            ? "certified k-improv-optimal (k=" + std::to_string(c.k) + ")"
                            : status == CertificateStatus::Improvable ? "improving k-improv move found"
                                                                      : "budget exceeded";
  } else if (c.certificate == "subedge") {
    const auto* inst = std::get_if<GraphInstance>(&subject.instance);
    if (!inst) throw InvalidInput("subedge certificates need a Graph TSP instance");
    const auto pair = find_subedge_improving_2move(*inst, subject.tour);
    status = pair ? CertificateStatus::Improvable : CertificateStatus::Certified;
    if (pair) {
      report["counterexample"] = json{{"first_edge", pair->first_edge},
                                      {"second_edge", pair->second_edge},
                                      {"shared", json::array({pair->shared.tail, pair->shared.head})},
                                      {"move", move_json(pair->move)}};
    }
    report["verdict"] = pair ? "subedge-sharing improving 2-move found"
                             : "no two tour edges share a directed subedge";
  } else {
    throw InvalidInput("unknown certificate '" + c.certificate + "'");
  }
  report["status"] = status_name(status);
  report["searched"] = searched;
  result.exit_code = status == CertificateStatus::Certified   ? kExitOk
                     : status == CertificateStatus::Improvable ? kExitNotCertified
                                                               : kExitBudget;
  result.report = report.dump(2) + "\n";
  return result;
}

// ---- solve ----

struct SolveRow {
  int index = 0;
  int n = 0;
  Cost start = 0;
  Cost final = 0;
  Cost reference = 0;
  bool optimal_reference = false;
  int improvements = 0;
  std::string certificate = "not-run";
};

template <class I>
SolveRow solve_one(const ExperimentConfig& c, const I& inst, const Tour& start, int index,
                   std::uint64_t seed) {
  SolveRow row;
  row.index = index;
  row.n = inst.size();
  row.start = tour_cost(inst, start);
  Tour final;
  std::vector<Cost> trace;
  if (c.algorithm == "k-opt") {
    final = k_opt(inst, start, c.k, &trace);
    row.improvements = static_cast<int>(trace.size()) - 1;
  } else if (c.algorithm == "lin-kernighan") {
    const auto [p1, p2] = lk_parameters(c);
    final = lin_kernighan(inst, start, p1, p2, &trace);
    row.improvements = static_cast<int>(trace.size()) - 1;
  } else if (c.algorithm == "k-improv") {
    if constexpr (std::is_same_v<I, OneTwoInstance>) {
      // Same steps as k_improv, keeping the locally optimal 2-matching for the certificate.
      TwoMatching tm = tour_to_two_matching(inst, start);
      while (auto move = find_improving_improv_move(inst, tm, c.k)) {
        tm = apply_improv_move(inst, tm, *move);
        ++row.improvements;
      }
      final = two_matching_to_tour(inst, tm, seed);
      if (c.verify) row.certificate = status_name(verify_k_improv_optimal(inst, tm, c.k, c.budget).status);
    } else {
      throw InvalidInput("k-improv needs (1,2)-TSP instances (--random one-two)");
    }
  } else {
    throw InvalidInput("unknown algorithm '" + c.algorithm + "'");
  }
  row.final = tour_cost(inst, final);
  if (inst.size() <= kHeldKarpMaxVertices) {
    row.reference = held_karp(inst).cost;
    row.optimal_reference = true;
  } else {
    row.reference = tour_cost(inst, double_tree_bound(inst));
  }
  if (c.verify) {
    if (c.algorithm == "k-opt") {
      row.certificate = status_name(verify_k_optimal(inst, final, c.k, c.budget).status);
    } else if (c.algorithm == "lin-kernighan") {
      row.certificate =
          status_name(find_improving_alternating_cycle(inst, final, 2 * c.k, c.budget).status);
    }
  }
  return row;
}

RunResult run_solve(const ExperimentConfig& c) {
  RunResult result;
  std::vector<SolveRow> rows;
  {
    PhaseTimer t(result, "solve");
    Rng rng(c.seed);
    if (!c.instance_path.empty()) {
      const AnyInstance inst =
          read_instance(read_text_file(c.instance_path), parse_instance_format(c.instance_format));
      for (int i = 0; i < c.count; ++i) {
        std::visit(
            [&](const auto& in) {
              const Tour start = c.tour_path.empty() || i > 0
                                     ? random_tour(in.size(), rng)
                                     : read_tour(read_text_file(c.tour_path));
              rows.push_back(solve_one(c, in, start, i, c.seed + i));
            },
            inst);
      }
    } else {
      for (int i = 0; i < c.count; ++i) {
        const AnyInstance inst = random_instance(c, rng);
        std::visit(
            [&](const auto& in) {
              const Tour start = random_tour(in.size(), rng);
              rows.push_back(solve_one(c, in, start, i, c.seed + i));
            },
            inst);
      }
    }
  }
  std::optional<Ratio> worst;
  int certified = 0;
  for (const SolveRow& r : rows) {
    const Ratio ratio(r.final, r.reference);
    if (!worst || ratio > *worst) worst = ratio;
    certified += r.certificate == "certified";
  }
  if (c.format == "csv") {
    std::ostringstream out;
    out << "index,n,start_cost,final_cost,reference_cost,reference_optimal,ratio,ratio_decimal,"
           "improvements,certificate\n";
    for (const SolveRow& r : rows) {
      const Ratio ratio(r.final, r.reference);
      out << r.index << ',' << r.n << ',' << r.start << ',' << r.final << ',' << r.reference << ','
          << (r.optimal_reference ? "true" : "false") << ',' << ratio.to_string() << ','
          << decimal6(ratio.numerator(), ratio.denominator()) << ',' << r.improvements << ','
          << r.certificate << '\n';
    }
    result.report = out.str();
  } else {
    json table = json::array();
    for (const SolveRow& r : rows) {
      table.push_back(json{{"index", r.index},
                           {"n", r.n},
                           {"start_cost", r.start},
                           {"final_cost", r.final},
                           {"reference_cost", r.reference},
                           {"reference_optimal", r.optimal_reference},
                           {"ratio", ratio_json(r.final, r.reference)},
                           {"improvements", r.improvements},
                           {"certificate", r.certificate}});
    }
    json report{{"task", "solve"},
                {"algorithm", c.algorithm},
                {"k", c.k},
                {"instances", table},
                {"summary",
                 json{{"count", rows.size()},
                      {"max_ratio", worst ? ratio_json(worst->numerator(), worst->denominator())
                                          : json(nullptr)},
                      {"certified", certified}}}};
    if (c.algorithm == "lin-kernighan") {
      const auto [p1, p2] = lk_parameters(c);
      report["p1"] = p1;
      report["p2"] = p2;
    }
    result.report = report.dump(2) + "\n";
  }
  if (c.verify && certified != static_cast<int>(rows.size())) result.exit_code = kExitNotCertified;
  return result;
}

// ---- analyze ----

template <class I>
json analyze_tour(const ExperimentConfig& c, const I& inst, const Tour& tour, const Tour& reference,
                  bool reference_optimal, int& violations) {
  const LengthClassReport report = length_class_report(inst, tour, reference, c.k);
  json classes = json::array();
  for (const auto& [l, edges] : report.classes) {
    const G2Certificate cert = build_g2(inst, tour, reference, c.k, l);
    json entry{{"l", l},
               {"q_l", cert.q_l},
               {"arc_count", cert.arc_count},
               {"g1_vertices", cert.g1_vertices.size()},
               {"retained", cert.retained.size()},
               {"girth", cert.girth ? json(*cert.girth) : json(nullptr)},
               {"violating_cycle", cert.cycle}};
    if (cert.arc_count <= kExBruteforceMaxVertices) {
      const std::int64_t ex = ex_bruteforce(static_cast<int>(cert.arc_count), 2 * c.k).edges;
      entry["ex_bound"] = json{{"ex", ex}, {"holds", cert.q_l <= 4 * ex}};
    }
    if (cert.has_violating_cycle()) {
      ++violations;
      if (c.extract) {
        const ExtractedMove ex = extract_improving_move(inst, tour, cert);
        Cost short_total = 0;
        for (const Edge& e : ex.short_edges) short_total += inst.cost(e.u, e.v);
        entry["extraction"] =
            json{{"h", ex.h},
                 {"components", ex.components},
                 {"fixed_c_edges", ex.fixed_c_edges},
                 {"ambivalent_moves", ex.ambivalent_moves},
                 {"short_edges", edges_json(ex.short_edges)},
                 {"short_edges_within_budget",
                  short_edges_within_budget(short_total, report.reference_length, c.k, l)},
                 {"move", move_json(ex.move)},
                 {"new_cost", tour_cost(inst, apply_move(tour, ex.move))}};
      }
    }
    classes.push_back(entry);
  }
  return json{{"reference_length", report.reference_length},
              {"reference_optimal", reference_optimal},
              {"tour_cost", tour_cost(inst, tour)},
              {"classified_edges", report.classified()},
              {"classes", classes}};
}

RunResult run_analyze(const ExperimentConfig& c) {
  RunResult result;
  PhaseTimer timer(result, "analyze");
  json report{{"task", "analyze"}, {"k", c.k}};
  int violations = 0;
  if (!c.instance_path.empty()) {
    if (c.tour_path.empty() || c.reference_path.empty()) {
      throw InvalidInput("analyze with --instance needs --tour and --reference");
    }
    const AnyInstance inst =
        read_instance(read_text_file(c.instance_path), parse_instance_format(c.instance_format));
    const Tour tour = read_tour(read_text_file(c.tour_path));
    const Tour reference = read_tour(read_text_file(c.reference_path));
    report["analyses"] = json::array({std::visit(
        [&](const auto& i) { return analyze_tour(c, i, tour, reference, false, violations); },
        inst)});
  } else {
    Rng rng(c.seed);
    json analyses = json::array();
    for (int i = 0; i < c.count; ++i) {
      const AnyInstance inst = random_instance(c, rng);
      std::visit(
          [&](const auto& in) {
            const bool exact = in.size() <= kHeldKarpMaxVertices;
            const Tour reference = exact ? held_karp(in).tour : double_tree_bound(in);
            Tour tour = reference;
            if (c.perturb > 0) {
              for (int step = 0; step < c.perturb; ++step) tour = reverse_random_segment(tour, rng);
            } else {
              tour = k_opt(in, random_tour(in.size(), rng), c.k);
            }
            json a = analyze_tour(c, in, tour, reference, exact, violations);
            a["index"] = i;
            analyses.push_back(std::move(a));
          },
          inst);
    }
    report["analyses"] = analyses;
  }
  report["classes_with_short_cycles"] = violations;
  result.report = report.dump(2) + "\n";
  return result;
}

// ---- ratio sweep ----

RunResult run_ratio_sweep(const ExperimentConfig& c) {
  RunResult result;
  PhaseTimer timer(result, "sweep");
  json rows = json::array();
  std::ostringstream csv;
  if (c.construction == "graph-tsp") {
    const GraphBundle base = [&] {
      ExperimentConfig single = c;
      single.a = 1;
      single.b = 0;
      return graph_bundle_from_config(single);
    }();
    const std::vector<int> as = c.a_values.empty() ? std::vector<int>{1, 2, 3} : c.a_values;
    const std::vector<int> bs = c.b_values.empty() ? std::vector<int>{0} : c.b_values;
    csv << "a,b,vertices,engineered_cost,witness_cost,ratio,ratio_decimal\n";
    for (int a : as) {
      for (int b : bs) {
        const GraphBundle e = extend_graph_tsp(base, a, b);
        const Ratio r = e.ratio_floor();
        rows.push_back(json{{"a", a},
                            {"b", b},
                            {"vertices", e.instance.size()},
                            {"engineered_cost", e.engineered_cost()},
                            {"witness_cost", e.witness_cost()},
                            {"ratio_floor", ratio_json(r.numerator(), r.denominator())}});
        csv << a << ',' << b << ',' << e.instance.size() << ',' << e.engineered_cost() << ','
            << e.witness_cost() << ',' << r.to_string() << ','
            << decimal6(r.numerator(), r.denominator()) << '\n';
      }
    }
  } else if (c.construction == "one-two-tsp") {
    const std::vector<int> girths = c.girths.empty() ? std::vector<int>{6, 8, 12} : c.girths;
    csv << "girth,k,s,vertices,engineered_cost,witness_cost,ratio,ratio_decimal,target\n";
    for (int g : girths) {
      ExperimentConfig single = c;
      single.cage_girth = g;
      single.g = g;
      single.k = (g - 1) / 2;
      const OneTwoBundle b = one_two_bundle_from_config(single);
      const Ratio r = b.ratio_floor();
      const Ratio target(11 * g, 10 * (g + 1));
      rows.push_back(json{{"girth", g},
                          {"k", single.k},
                          {"s", b.param("s")},
                          {"vertices", b.instance.size()},
                          {"engineered_cost", b.engineered_cost()},
                          {"witness_cost", b.witness_cost()},
                          {"ratio_floor", ratio_json(r.numerator(), r.denominator())},
                          {"target", ratio_json(target.numerator(), target.denominator())},
                          {"meets_target", r >= target}});
      csv << g << ',' << single.k << ',' << b.param("s") << ',' << b.instance.size() << ','
          << b.engineered_cost() << ',' << b.witness_cost() << ',' << r.to_string() << ','
          << decimal6(r.numerator(), r.denominator()) << ',' << target.to_string() << '\n';
    }
  } else {
    throw InvalidInput("ratio-sweep needs --construction graph-tsp or one-two-tsp");
  }
  if (c.format == "csv") {
    result.report = csv.str();
  } else {
    result.report =
        json{{"task", "ratio-sweep"}, {"construction", c.construction}, {"rows", rows}}.dump(2) +
        "\n";
  }
  return result;
}

// ---- config serialization ----

template <class T>
void read_field(const json& j, T& out) {
  out = j.get<T>();
}

struct FieldCodec {
  std::function<json(const ExperimentConfig&)> save;
  std::function<void(const json&, ExperimentConfig&)> load;
};

#define KOPT_FIELD(name)                                                   \
  {                                                                        \
#name, FieldCodec {                                                    \
      [](const ExperimentConfig& c) { return json(c.name); },              \
          [](const json& j, ExperimentConfig& c) { read_field(j, c.name); } \
    }                                                                      \
  }

const std::vector<std::pair<std::string, FieldCodec>>& field_codecs() {
  static const std::vector<std::pair<std::string, FieldCodec>> codecs = {
      {"task", FieldCodec{[](const ExperimentConfig& c) { return json(task_name(c.task)); },
                          [](const json& j, ExperimentConfig& c) {
                            c.task = parse_task(j.get<std::string>());
                          }}},
      KOPT_FIELD(instance_path),
      KOPT_FIELD(instance_format),
      KOPT_FIELD(tour_path),
      KOPT_FIELD(reference_path),
      KOPT_FIELD(bundle_path),
      KOPT_FIELD(random_kind),
      KOPT_FIELD(n),
      KOPT_FIELD(count),
      KOPT_FIELD(max_weight),
      KOPT_FIELD(clusters),
      KOPT_FIELD(percent),
      KOPT_FIELD(construction),
      KOPT_FIELD(cage_degree),
      KOPT_FIELD(cage_girth),
      KOPT_FIELD(graph_path),
      KOPT_FIELD(f),
      KOPT_FIELD(g),
      KOPT_FIELD(a),
      KOPT_FIELD(b),
      KOPT_FIELD(a_values),
      KOPT_FIELD(b_values),
      KOPT_FIELD(girths),
      KOPT_FIELD(algorithm),
      KOPT_FIELD(k),
      KOPT_FIELD(p1),
      KOPT_FIELD(p2),
      KOPT_FIELD(certificate),
      KOPT_FIELD(verify),
      KOPT_FIELD(extract),
      KOPT_FIELD(perturb),
      KOPT_FIELD(seed),
      KOPT_FIELD(budget),
      KOPT_FIELD(format),
      KOPT_FIELD(out_dir),
  };
  return codecs;
}

#undef KOPT_FIELD

}  // namespace

std::string task_name(Task task) {
  for (const auto& [t, name] : task_names()) {
    if (t == task) return name;
  }
  return "unknown";
}

Task parse_task(std::string_view name) {
  for (const auto& [t, n] : task_names()) {
    if (n == name) return t;
  }
  throw InvalidInput("unknown task '" + std::string(name) + "'");
}

std::string decimal6(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0 || numerator < 0) throw InvalidInput("decimal6 expects n >= 0 and d > 0");
  std::int64_t whole = numerator / denominator;
  std::int64_t rem = numerator % denominator;
  std::string digits;
  for (int i = 0; i < 6; ++i) {
    rem *= 10;
    digits.push_back(static_cast<char>('0' + rem / denominator));
    rem %= denominator;
  }
  if (2 * rem >= denominator) {
    int i = 5;
    while (i >= 0 && digits[i] == '9') digits[i--] = '0';
    if (i >= 0) {
      ++digits[i];
    } else {
      ++whole;
    }
  }
  return std::to_string(whole) + "." + digits;
}

std::string config_to_json(const ExperimentConfig& config) {
  json out = json::object();
  for (const auto& [name, codec] : field_codecs()) out[name] = codec.save(config);
  return out.dump(2) + "\n";
}

ExperimentConfig config_from_json(std::string_view text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
  }
  if (!parsed.is_object()) throw InvalidInput("config must be a JSON object");
  ExperimentConfig config;
  for (const auto& [key, value] : parsed.items()) {
    const auto& codecs = field_codecs();
    const auto it = std::find_if(codecs.begin(), codecs.end(),
                                 [&](const auto& entry) { return entry.first == key; });
    if (it == codecs.end()) throw InvalidInput("unknown config key '" + key + "'");
    try {
      it->second.load(value, config);
    } catch (const json::exception& e) {
      throw InvalidInput("config key '" + key + "': " + e.what());
    }
  }
  return config;
}

RunResult run(const ExperimentConfig& config) {
  if (config.format != "json" && config.format != "csv") {
    throw InvalidInput("unknown format '" + config.format + "'");
  }
  if (config.k < 1) throw InvalidInput("k must be positive");
  if (config.count < 1) throw InvalidInput("count must be positive");
  switch (config.task) {
    case Task::Construct: return run_construct(config);
    case Task::Solve: return run_solve(config);
    case Task::Certify: return run_certify(config);
    case Task::Analyze: return run_analyze(config);
    case Task::RatioSweep: return run_ratio_sweep(config);
  }
  throw InvalidInput("unknown task");
}

}  // namespace kopt
