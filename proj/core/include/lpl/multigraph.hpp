#pragma once

#include <vector>

#include "lpl/graph.hpp"

namespace lpl {

// Undirected multigraph stored as symmetric capacity lists. Capacities are
// positive multiplicities; only the flow engine consumes this type, so the
// simple-graph invariant of Graph never weakens.
struct MultiGraph {
  int vertex_count = 0;
  // adjacency[v] = sorted (neighbor, multiplicity >= 1) pairs
  std::vector<std::vector<std::pair<int, int>>> adjacency;

  long capacity_between(int u, int v) const;
  long total_capacity() const;  // sum of multiplicities over unordered pairs
};

MultiGraph multigraph_from(const Graph& g);  // unit capacities

struct Contraction {
  MultiGraph graph;
  std::vector<int> vertex_map;  // original vertex -> contracted vertex id
};

// Each block becomes one super-vertex; edges inside a block vanish and
// parallel edges accumulate as capacities. Block i gets id i; vertices not
// covered by any block follow in increasing order. Throws on overlapping or
// out-of-range blocks.
Contraction contract(const Graph& g, const std::vector<std::vector<int>>& blocks);

}  // namespace lpl
