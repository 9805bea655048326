#include "kopt/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "kopt/error.hpp"

namespace kopt {
namespace {

struct Token {
  std::string_view text;
  int line = 0;
  int column = 0;
};

// Whitespace-separated tokens with 1-based positions. A ':' is always its own token so that
// both "KEY: VALUE" and "KEY : VALUE" parse.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  Token peek() {
    const std::size_t saved = pos_;
    const int line = line_;
    const int col = col_;
    Token t = next();
    pos_ = saved;
    line_ = line;
    col_ = col;
    return t;
  }

  Token next() {
    skip_space();
    Token t{{}, line_, col_};
    if (pos_ >= text_.size()) return t;
    const std::size_t start = pos_;
    if (text_[pos_] == ':') {
      advance();
    } else {
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             text_[pos_] != ':') {
        advance();
      }
    }
    t.text = text_.substr(start, pos_ - start);
    return t;
  }

  // Rest of the current line, trimmed; used for free-text header values.
  std::string_view rest_of_line() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) advance();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '\n') advance();
    std::string_view out = text_.substr(start, pos_ - start);
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) {
      out.remove_suffix(1);
    }
    return out;
  }

  int line() const { return line_; }
  int column() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

[[noreturn]] void fail(const Token& t, const std::string& message) {
  throw ParseError(message, t.line, t.column);
}

std::int64_t to_integer(const Token& t) {
  std::int64_t value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (t.text.empty()) fail(t, "expected an integer, found end of input");
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail(t, "expected an integer, found '" + std::string(t.text) + "'");
  }
  return value;
}

int to_count(const Token& t, const char* what) {
  const std::int64_t v = to_integer(t);
  if (v < 0 || v > kDefaultVertexLimit * static_cast<std::int64_t>(kDefaultVertexLimit)) {
    fail(t, std::string(what) + " out of range: " + std::string(t.text));
  }
  return static_cast<int>(v);
}

void expect_colon(Lexer& lex) {
  const Token t = lex.next();
  if (t.text != ":") fail(t, "expected ':' after keyword");
}

void expect_end(Lexer& lex) {
  if (!lex.at_end()) {
    const Token t = lex.next();
    fail(t, "unexpected trailing token '" + std::string(t.text) + "'");
  }
}

std::vector<Edge> parse_edges(Lexer& lex, int& n_out) {
  const Token nt = lex.next();
  const int n = to_count(nt, "vertex count");
  if (n > kDefaultVertexLimit) fail(nt, "vertex count above limit");
  const Token mt = lex.next();
  const int m = to_count(mt, "edge count");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    const Token ut = lex.next();
    const std::int64_t u = to_integer(ut);
    const Token vt = lex.next();
    const std::int64_t v = to_integer(vt);
    if (u < 0 || u >= n) fail(ut, "vertex id out of range: " + std::string(ut.text));
    if (v < 0 || v >= n) fail(vt, "vertex id out of range: " + std::string(vt.text));
    if (u == v) fail(ut, "self-loop");
    edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
  }
  expect_end(lex);
  n_out = n;
  return edges;
}

SimpleGraph graph_from_parsed(int n, const std::vector<Edge>& edges) {
  try {
    return SimpleGraph::from_edges(n, edges);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

MetricInstance parse_full_matrix(std::string_view text) {
  Lexer lex(text);
  int dimension = -1;
  bool explicit_weights = false;
  bool full_matrix = false;
  while (true) {
    const Token key = lex.next();
    if (key.text.empty()) fail(key, "missing EDGE_WEIGHT_SECTION");
    if (key.text == "EDGE_WEIGHT_SECTION") break;
    if (key.text == "NAME" || key.text == "COMMENT") {
      expect_colon(lex);
      lex.rest_of_line();
      continue;
    }
    expect_colon(lex);
    const Token value = lex.next();
    if (key.text == "TYPE") {
      if (value.text != "TSP") fail(value, "unsupported TYPE '" + std::string(value.text) + "'");
    } else if (key.text == "DIMENSION") {
      dimension = to_count(value, "DIMENSION");
      if (dimension > kDefaultVertexLimit) fail(value, "DIMENSION above limit");
    } else if (key.text == "EDGE_WEIGHT_TYPE") {
      if (value.text != "EXPLICIT") {
        fail(value, "unsupported EDGE_WEIGHT_TYPE '" + std::string(value.text) + "'");
      }
      explicit_weights = true;
    } else if (key.text == "EDGE_WEIGHT_FORMAT") {
      if (value.text != "FULL_MATRIX") {
        fail(value, "unsupported EDGE_WEIGHT_FORMAT '" + std::string(value.text) + "'");
      }
      full_matrix = true;
    } else {
      fail(key, "unsupported keyword '" + std::string(key.text) + "'");
    }
  }
  if (dimension < 0) throw ParseError("missing DIMENSION", lex.line(), lex.column());
  if (!explicit_weights || !full_matrix) {
    throw ParseError("EDGE_WEIGHT_TYPE: EXPLICIT and EDGE_WEIGHT_FORMAT: FULL_MATRIX required",
                     lex.line(), lex.column());
  }
  CostMatrix matrix(dimension, std::vector<Cost>(dimension));
  for (int i = 0; i < dimension; ++i) {
    for (int j = 0; j < dimension; ++j) {
      const Token t = lex.next();
      matrix[i][j] = to_integer(t);
      if (matrix[i][j] < 0) fail(t, "negative weight");
      if (i == j && matrix[i][j] != 0) fail(t, "nonzero diagonal weight");
      if (j < i && matrix[i][j] != matrix[j][i]) {
        fail(t, "asymmetric weight: (" + std::to_string(i) + "," + std::to_string(j) +
                    ") differs from (" + std::to_string(j) + "," + std::to_string(i) + ")");
      }
    }
  }
  if (!lex.at_end()) {
    const Token t = lex.next();
    if (t.text != "EOF") fail(t, "expected EOF after weights");
    expect_end(lex);
  }
  return MetricInstance(matrix);
}

template <class F>
void for_each_row(int n, F&& row_cost, std::ostringstream& out) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << row_cost(i, j);
    }
    out << '\n';
  }
}

}  // namespace

InstanceFormat parse_instance_format(std::string_view name) {
  if (name == "full-matrix" || name == "tsplib") return InstanceFormat::FullMatrix;
  if (name == "edge-list") return InstanceFormat::EdgeList;
  if (name == "unit-edge-list") return InstanceFormat::UnitEdgeList;
  throw InvalidInput("unknown instance format '" + std::string(name) + "'");
}

std::string format_name(InstanceFormat format) {
  switch (format) {
    case InstanceFormat::FullMatrix:
      return "full-matrix";
    case InstanceFormat::EdgeList:
      return "edge-list";
    case InstanceFormat::UnitEdgeList:
      return "unit-edge-list";
  }
  return "unknown";
}

AnyInstance read_instance(std::string_view text, InstanceFormat format) {
  switch (format) {
    case InstanceFormat::FullMatrix:
      return parse_full_matrix(text);
    case InstanceFormat::EdgeList:
      return graph_metric(read_edge_list(text));
    case InstanceFormat::UnitEdgeList:
      return OneTwoInstance(read_edge_list(text));
  }
  throw InvalidInput("unknown instance format");
}

std::string write_instance(const AnyInstance& instance, InstanceFormat format,
                           std::string_view name) {
  std::ostringstream out;
  switch (format) {
    case InstanceFormat::FullMatrix: {
      std::visit(
          [&](const auto& inst) {
            out << "NAME: " << name << '\n'
                << "TYPE: TSP\n"
                << "DIMENSION: " << inst.size() << '\n'
                << "EDGE_WEIGHT_TYPE: EXPLICIT\n"
                << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
                << "EDGE_WEIGHT_SECTION\n";
            for_each_row(
                inst.size(), [&](int i, int j) { return inst.cost(i, j); }, out);
            out << "EOF\n";
          },
          instance);
      return out.str();
    }
    case InstanceFormat::EdgeList:
      if (const auto* g = std::get_if<GraphInstance>(&instance)) return write_edge_list(g->graph());
      throw InvalidInput("edge-list output needs a graph instance");
    case InstanceFormat::UnitEdgeList:
      if (const auto* u = std::get_if<OneTwoInstance>(&instance)) {
        return write_edge_list(u->unit_graph());
      }
      throw InvalidInput("unit-edge-list output needs a (1,2) instance");
  }
  throw InvalidInput("unknown instance format");
}

SimpleGraph read_edge_list(std::string_view text) {
  Lexer lex(text);
  int n = 0;
  std::vector<Edge> edges = parse_edges(lex, n);
  return graph_from_parsed(n, edges);
}

std::string write_edge_list(const SimpleGraph& graph) {
  std::ostringstream out;
  out << graph.num_vertices() << ' ' << graph.num_edges() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Tour read_tour(std::string_view text) {
  Lexer lex(text);
  int dimension = -1;
  while (true) {
    const Token key = lex.next();
    if (key.text.empty()) fail(key, "missing TOUR_SECTION");
    if (key.text == "TOUR_SECTION") break;
    expect_colon(lex);
    if (key.text == "NAME" || key.text == "COMMENT") {
      lex.rest_of_line();
      continue;
    }
    const Token value = lex.next();
    if (key.text == "TYPE") {
      if (value.text != "TOUR") fail(value, "unsupported TYPE '" + std::string(value.text) + "'");
    } else if (key.text == "DIMENSION") {
      dimension = to_count(value, "DIMENSION");
    } else {
      fail(key, "unsupported keyword '" + std::string(key.text) + "'");
    }
  }
  std::vector<int> order;
  Token first_id;
  while (true) {
    const Token t = lex.next();
    const std::int64_t v = to_integer(t);
    if (v == -1) break;
    if (v < 1 || (dimension >= 0 && v > dimension) || v > kDefaultVertexLimit) {
      fail(t, "tour vertex out of range: " + std::string(t.text));
    }
    if (order.empty()) first_id = t;
    order.push_back(static_cast<int>(v - 1));
  }
  if (dimension >= 0 && static_cast<int>(order.size()) != dimension) {
    throw ParseError("tour lists " + std::to_string(order.size()) + " vertices, DIMENSION is " +
                         std::to_string(dimension),
                     lex.line(), lex.column());
  }
  if (!lex.at_end()) {
    const Token t = lex.next();
    if (t.text != "EOF") fail(t, "expected EOF after -1 terminator");
    expect_end(lex);
  }
  try {
    return Tour(std::move(order));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), first_id.line, first_id.column);
  }
}

std::string write_tour(const Tour& tour, std::string_view name) {
  std::ostringstream out;
  out << "NAME: " << name << '\n'
      << "TYPE: TOUR\n"
      << "DIMENSION: " << tour.size() << '\n'
      << "TOUR_SECTION\n";
  for (int v : tour.order()) out << v + 1 << '\n';
  out << "-1\nEOF\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << contents;
  if (!out) throw InvalidInput("write failed for '" + path + "'");
}

}  // namespace kopt
