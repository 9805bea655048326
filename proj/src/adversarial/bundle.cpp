#include <algorithm>
#include <filesystem>
#include <numeric>
#include <sstream>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "kopt/adversarial.hpp"
#include "kopt/error.hpp"
#include "kopt/io.hpp"

namespace kopt {

Ratio::Ratio(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InvalidInput("ratio with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t d = std::gcd(numerator, denominator);
  num_ = numerator / d;
  den_ = denominator / d;
}

std::string Ratio::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  using boost::multiprecision::cpp_int;
  const cpp_int lhs = cpp_int(a.num_) * b.den_;
  const cpp_int rhs = cpp_int(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

template <class I>
std::int64_t ConstructionBundle<I>::param(const std::string& key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  throw InvalidInput("bundle has no parameter '" + key + "'");
}

template <class I>
std::string format_params(const ConstructionBundle<I>& bundle) {
  std::ostringstream out;
  out << "kind=" << (std::is_same_v<I, GraphInstance> ? "graph-tsp" : "one-two-tsp") << "\n";
  for (const auto& [key, value] : bundle.params) out << key << "=" << value << "\n";
  out << "vertices_total=" << bundle.instance.size() << "\n";
  out << "engineered_cost=" << bundle.engineered_cost() << "\n";
  out << "witness_cost=" << bundle.witness_cost() << "\n";
  out << "ratio_floor=" << bundle.ratio_floor().to_string() << "\n";
  out << "provenance=" << bundle.provenance << "\n";
  return out.str();
}

template <class I>
void write_bundle(const std::string& directory, const ConstructionBundle<I>& bundle) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  const fs::path dir(directory);
  const InstanceFormat format =
      std::is_same_v<I, GraphInstance> ? InstanceFormat::EdgeList : InstanceFormat::UnitEdgeList;
  write_text_file((dir / "instance.txt").string(), write_instance(AnyInstance(bundle.instance), format));
  write_text_file((dir / "engineered.tour").string(), write_tour(bundle.engineered_tour, "engineered"));
  write_text_file((dir / "witness.tour").string(), write_tour(bundle.witness_tour, "witness"));
  write_text_file((dir / "params.txt").string(), format_params(bundle));
}

namespace {

template <class I>
ConstructionBundle<I> read_bundle(const std::string& directory, InstanceFormat format,
                                  const std::string& kind) {
  namespace fs = std::filesystem;
  const fs::path dir(directory);
  ConstructionBundle<I> bundle;
  bundle.instance = std::get<I>(read_instance(read_text_file((dir / "instance.txt").string()), format));
  bundle.engineered_tour = read_tour(read_text_file((dir / "engineered.tour").string()));
  bundle.witness_tour = read_tour(read_text_file((dir / "witness.tour").string()));
  std::istringstream params(read_text_file((dir / "params.txt").string()));
  std::string line;
  int line_no = 0;
  static const std::vector<std::string> derived = {"vertices_total", "engineered_cost",
                                                   "witness_cost", "ratio_floor"};
  while (std::getline(params, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", line_no, 1);
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "kind") {
      if (value != kind) throw ParseError("bundle kind is '" + value + "'", line_no, 6);
    } else if (key == "provenance") {
      bundle.provenance = value;
    } else if (std::find(derived.begin(), derived.end(), key) == derived.end()) {
      try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        bundle.params.emplace_back(key, v);
      } catch (const std::exception&) {
        throw ParseError("parameter '" + key + "' is not an integer", line_no,
                         static_cast<int>(eq) + 2);
      }
    }
  }
  if (bundle.engineered_tour.size() != bundle.instance.size() ||
      bundle.witness_tour.size() != bundle.instance.size()) {
    throw InvalidInput("bundle tours do not match the instance size");
  }
  return bundle;
}

}  // namespace

GraphBundle read_graph_bundle(const std::string& directory) {
  return read_bundle<GraphInstance>(directory, InstanceFormat::EdgeList, "graph-tsp");
}

OneTwoBundle read_one_two_bundle(const std::string& directory) {
  return read_bundle<OneTwoInstance>(directory, InstanceFormat::UnitEdgeList, "one-two-tsp");
}

template struct ConstructionBundle<GraphInstance>;
template struct ConstructionBundle<OneTwoInstance>;
template std::string format_params(const GraphBundle&);
template std::string format_params(const OneTwoBundle&);
template void write_bundle(const std::string&, const GraphBundle&);
template void write_bundle(const std::string&, const OneTwoBundle&);

}  // namespace kopt
