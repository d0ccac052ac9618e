#pragma once

#include <iosfwd>
#include <string>

#include "usv/geometry.hpp"
#include "usv/graph.hpp"
#include "usv/rectilinear.hpp"
#include "usv/reduce.hpp"
#include "usv/restriction.hpp"

namespace usv {

/// Thrown on malformed input; carries file/line context.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

Layout parse_layout(std::istream& in, const std::string& name);
std::string emit_layout(const Layout& l);

Graph parse_graph(std::istream& in, const std::string& name);
std::string emit_graph(const Graph& g);

Restriction parse_restriction(std::istream& in, const std::string& name);
std::string emit_restriction(const Restriction& r);

RectilinearDrawing parse_drawing(std::istream& in, const std::string& name);
std::string emit_drawing(const RectilinearDrawing& d);

ThreePartitionInstance parse_3partition(std::istream& in, const std::string& name);
std::string emit_3partition(const ThreePartitionInstance& inst);

/// DIMACS CNF with exactly three literals per clause, NAE semantics.
std::pair<std::vector<Clause>, int> parse_cnf(std::istream& in, const std::string& name);
std::string emit_cnf(const std::vector<Clause>& clauses, int nvars);

Layout load_layout_file(const std::string& path);
Graph load_graph_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace usv
