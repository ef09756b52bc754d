#include "lpl/flow.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpl {

void FlowNetwork::init(int node_count) {
  head_.assign(node_count, -1);
  next_.clear();
  to_.clear();
  cap_.clear();
  source_ = sink_ = -1;
}

void FlowNetwork::add_edge(int u, int v, int cap_uv, int cap_vu) {
  to_.push_back(v);
  cap_.push_back(cap_uv);
  next_.push_back(head_[u]);
  head_[u] = static_cast<int>(to_.size()) - 1;
  to_.push_back(u);
  cap_.push_back(cap_vu);
  next_.push_back(head_[v]);
  head_[v] = static_cast<int>(to_.size()) - 1;
}

FlowNetwork::Result FlowNetwork::max_flow(int s, int t, int limit) {
  source_ = s;
  sink_ = t;
  Result res;
  parent_arc_.assign(head_.size(), -1);
  for (;;) {
    std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
    queue_.clear();
    queue_.push_back(s);
    parent_arc_[s] = -2;
    bool found = false;
    for (size_t qi = 0; qi < queue_.size() && !found; ++qi) {
      int v = queue_[qi];
      for (int a = head_[v]; a != -1; a = next_[a]) {
        int w = to_[a];
        if (cap_[a] <= 0 || parent_arc_[w] != -1) continue;
        parent_arc_[w] = a;
        if (w == t) {
          found = true;
          break;
        }
        queue_.push_back(w);
      }
    }
    if (!found) break;
    int bottleneck = std::numeric_limits<int>::max();
    for (int v = t; v != s;) {
      int a = parent_arc_[v];
      bottleneck = std::min(bottleneck, cap_[a]);
      v = to_[a ^ 1];
    }
    for (int v = t; v != s;) {
      int a = parent_arc_[v];
      cap_[a] -= bottleneck;
      cap_[a ^ 1] += bottleneck;
      v = to_[a ^ 1];
    }
    res.value += bottleneck;
    if (res.value > limit) {
      res.truncated = true;
      return res;
    }
  }
  return res;
}

std::vector<char> FlowNetwork::reachable_from_source() const {
  std::vector<char> seen(head_.size(), 0);
  std::vector<int> stack{source_};
  seen[source_] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int a = head_[v]; a != -1; a = next_[a])
      if (cap_[a] > 0 && !seen[to_[a]]) {
        seen[to_[a]] = 1;
        stack.push_back(to_[a]);
      }
  }
  return seen;
}

std::vector<char> FlowNetwork::reaching_sink() const {
  // v reaches the sink when some residual arc v->w leads to a reaching w;
  // walk backwards from t along reverse residual arcs.
  std::vector<char> seen(head_.size(), 0);
  std::vector<int> stack{sink_};
  seen[sink_] = 1;
  while (!stack.empty()) {
    int w = stack.back();
    stack.pop_back();
    for (int a = head_[w]; a != -1; a = next_[a]) {
      int v = to_[a];
      // arc a is w->v; its partner v->w is a^1
      if (cap_[a ^ 1] > 0 && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

MinCut min_cut_between(const MultiGraph& g, int source, int sink, int prune_at) {
  if (source == sink) throw std::invalid_argument("min_cut_between: source == sink");
  FlowNetwork net;
  net.init(g.vertex_count);
  for (int u = 0; u < g.vertex_count; ++u)
    for (auto [v, c] : g.adjacency[u])
      if (u < v) net.add_edge(u, v, c, c);

  auto flow = net.max_flow(source, sink, prune_at);
  MinCut out;
  out.value = flow.value;
  out.truncated = flow.truncated;
  if (flow.truncated) return out;

  auto reach = net.reachable_from_source();
  for (int v = 0; v < g.vertex_count; ++v)
    if (reach[v]) out.source_side.push_back(v);
  for (int u = 0; u < g.vertex_count; ++u) {
    if (!reach[u]) continue;
    for (auto [v, c] : g.adjacency[u])
      if (!reach[v]) out.cut_edges.push_back(make_edge(u, v));
  }
  std::sort(out.cut_edges.begin(), out.cut_edges.end());
  out.cut_edges.erase(std::unique(out.cut_edges.begin(), out.cut_edges.end()),
                      out.cut_edges.end());
  return out;
}

}  // namespace lpl
