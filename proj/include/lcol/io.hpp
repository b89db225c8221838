#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcol/graph.hpp"

namespace lcol {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GraphFormat { Edges, Dimacs };

GraphFormat parse_format_name(const std::string& name);

// Edge list: '#' comments, "u v" per edge, "v <label>" for an isolated vertex.
// Labels are numbered in order of first appearance.
Graph read_edge_list(std::istream& in, std::vector<std::string>* warnings = nullptr);
// DIMACS .col: "p edge n m" then "e u v" with 1-based endpoints.
Graph read_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph read_graph_file(const std::string& path, GraphFormat format, std::vector<std::string>* warnings = nullptr);

void write_edge_list(std::ostream& out, const Graph& g);
void write_dimacs(std::ostream& out, const Graph& g);

// Colouring file: one "label colour" pair per line.
void write_colouring(std::ostream& out, const Graph& g, const Colouring& c);
Colouring read_colouring(std::istream& in, const Graph& g);

/// Splits a line into whitespace-separated tokens after stripping a '#' comment.
std::vector<std::string> tokenize_line(const std::string& line);

}  // namespace lcol
