#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lpl {

// Vertices are dense integer ids 0..n-1. Edges are normalized with u < v.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Where a port leads: rot(x, i) = (vertex, port) of the same edge seen from
// the other endpoint.
struct PortTarget {
  int vertex = -1;
  int port = -1;
  friend bool operator==(const PortTarget&, const PortTarget&) = default;
};

// Involutive edge labelling. table[x] has one entry per port, and the port
// count at x equals deg(x). rot(rot(x,i)) = (x,i).
struct RotationMap {
  std::vector<std::vector<PortTarget>> table;

  PortTarget at(int vertex, int port) const { return table[vertex][port]; }
  int ports(int vertex) const { return static_cast<int>(table[vertex].size()); }
};

// Undirected simple graph: symmetric adjacency, no loops, no parallel edges.
struct Graph {
  int vertex_count = 0;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor lists
  std::optional<RotationMap> rotation;

  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
  bool has_edge(int u, int v) const;
  long edge_count() const;
  std::vector<Edge> edges() const;  // sorted lexicographically, u < v
};

// Structural equality (vertex count + adjacency); rotation maps are ignored.
bool operator==(const Graph& a, const Graph& b);

enum class DuplicateEdgePolicy { Collapse, Reject };

// Throws std::invalid_argument on a self-loop or out-of-range endpoint,
// naming the offending pair. Duplicates collapse silently unless Reject.
Graph make_graph(int vertex_count, const std::vector<Edge>& edges,
                 DuplicateEdgePolicy policy = DuplicateEdgePolicy::Collapse);

int min_degree(const Graph& g);  // throws on the empty graph
int max_degree(const Graph& g);

// min over edges xy of d(x)+d(y)-2; throws on an edgeless graph.
int min_edge_degree(const Graph& g);

// Degree if the graph is regular (vertex_count >= 1), nullopt otherwise.
std::optional<int> regular_degree(const Graph& g);

bool is_connected(const Graph& g);

// Reachability partition; components ordered by smallest member, members sorted.
std::vector<std::vector<int>> components(const Graph& g);

bool is_star(const Graph& g);  // K_{1,n-1}, n >= 2
bool is_complete(const Graph& g);
bool is_cycle_graph(const Graph& g);
bool has_triangle(const Graph& g);

// Subgraph induced by the given vertices, reindexed by their position.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// True when the table is an involution consistent with g's adjacency and the
// ports at each vertex enumerate its incident edges exactly once.
bool rotation_valid_for(const Graph& g, const RotationMap& rot,
                        std::string* why = nullptr);

}  // namespace lpl
