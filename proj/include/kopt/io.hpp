#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "kopt/graph.hpp"
#include "kopt/instance.hpp"
#include "kopt/tour.hpp"

namespace kopt {

// FullMatrix: TSPLIB subset (TYPE: TSP, EDGE_WEIGHT_TYPE: EXPLICIT,
//             EDGE_WEIGHT_FORMAT: FULL_MATRIX, integer weights).
// EdgeList: "n m" then m lines "u v", 0-indexed; read as a GraphInstance.
// UnitEdgeList: same syntax; read as a OneTwoInstance whose listed edges cost 1.
enum class InstanceFormat { FullMatrix, EdgeList, UnitEdgeList };

using AnyInstance = std::variant<MetricInstance, GraphInstance, OneTwoInstance>;

// Accepts "full-matrix"/"tsplib", "edge-list" and "unit-edge-list".
InstanceFormat parse_instance_format(std::string_view name);
std::string format_name(InstanceFormat format);

// Throws ParseError (with line and column) on malformed text and InvalidInput on
// non-metric matrices or disconnected graphs.
AnyInstance read_instance(std::string_view text, InstanceFormat format);

// Canonical text form. FullMatrix accepts any instance kind; EdgeList needs a
// GraphInstance and UnitEdgeList a OneTwoInstance.
std::string write_instance(const AnyInstance& instance, InstanceFormat format,
                           std::string_view name = "instance");

SimpleGraph read_edge_list(std::string_view text);
std::string write_edge_list(const SimpleGraph& graph);

// TSPLIB tour file; vertex ids are 1-based in the file and 0-based in memory.
Tour read_tour(std::string_view text);
std::string write_tour(const Tour& tour, std::string_view name = "tour");

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace kopt
