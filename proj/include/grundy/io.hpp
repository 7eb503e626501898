#pragma once

#include <iosfwd>
#include <string>

#include "grundy/graph.hpp"
#include "grundy/interval.hpp"
#include "grundy/sequence.hpp"

namespace grundy {

/// Edge-list format: first line "n m", then m lines "u v", 0-based,
/// whitespace-separated, LF-terminated. '#' starts a comment running to end
/// of line. Writing is canonical: edges as u < v, sorted ascending, single
/// spaces, no comments; reading a written file reproduces the graph exactly.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

/// Sequence format: one line of whitespace-separated vertex indices.
/// An empty file is the empty sequence.
VertexSequence read_sequence(std::istream& in);
VertexSequence read_sequence_file(const std::string& path);
void write_sequence(std::ostream& out, const VertexSequence& s);

/// Interval format: first line "n", then n lines "a b" with exact decimal
/// tokens; line i holds the interval of vertex i-1.
IntervalModel read_interval_model(std::istream& in);
IntervalModel read_interval_model_file(const std::string& path);
void write_interval_model(std::ostream& out, const IntervalModel& m);

}  // namespace grundy
