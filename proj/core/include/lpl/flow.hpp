#pragma once

#include <limits>
#include <vector>

#include "lpl/multigraph.hpp"

namespace lpl {

// Integer-capacity max-flow over a reusable arc store (shortest augmenting
// paths). Cut values in this project are small constants, so the number of
// augmentations is bounded by the cut value plus one.
class FlowNetwork {
 public:
  void init(int node_count);
  // Adds the arc pair u->v / v->u with the given capacities; an undirected
  // edge of capacity c is add_edge(u, v, c, c).
  void add_edge(int u, int v, int cap_uv, int cap_vu);

  struct Result {
    int value = 0;
    bool truncated = false;  // stopped once the flow exceeded the limit
  };
  // Stops early as soon as the flow value would exceed `limit`; the result is
  // exact whenever value <= limit.
  Result max_flow(int s, int t, int limit = std::numeric_limits<int>::max());

  // Residual reachability after max_flow has run to completion.
  std::vector<char> reachable_from_source() const;
  std::vector<char> reaching_sink() const;

  int node_count() const { return static_cast<int>(head_.size()); }

 private:
  std::vector<int> head_, next_, to_, cap_;
  std::vector<int> parent_arc_, queue_;
  int source_ = -1, sink_ = -1;
};

struct MinCut {
  int value = 0;
  bool truncated = false;
  std::vector<int> source_side;  // sorted; empty when truncated
  std::vector<Edge> cut_edges;   // multigraph vertex pairs, sorted
};

// Minimum source-sink edge cut of a multigraph with a realizing cut. The
// source side is the residual-reachable set, the inclusion-minimal one among
// all minimum cuts. Early termination once the value would exceed prune_at.
MinCut min_cut_between(const MultiGraph& g, int source, int sink,
                       int prune_at = std::numeric_limits<int>::max());

}  // namespace lpl
