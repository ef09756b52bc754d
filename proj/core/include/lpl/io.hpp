#pragma once

#include <iosfwd>
#include <string>

#include "lpl/graph.hpp"

namespace lpl {

// Edge-list text format: first line "n m", then m lines "u v". When a
// rotation map is attached each line carries two extra columns "p q" giving
// the ports at u and v. Throws std::runtime_error on malformed input.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);

std::string to_dot(const Graph& g);

}  // namespace lpl
