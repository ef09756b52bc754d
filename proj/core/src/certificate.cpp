#include "lpl/certificate.hpp"

#include <algorithm>
#include <set>

namespace lpl {

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Ok: return "ok";
    case CertStatus::FragmentOutOfRange: return "fragment-out-of-range";
    case CertStatus::FragmentEmpty: return "fragment-empty";
    case CertStatus::FragmentFull: return "fragment-full";
    case CertStatus::CutMismatch: return "cut-mismatch";
    case CertStatus::ValueMismatch: return "value-mismatch";
    case CertStatus::FragmentTooSmall: return "fragment-too-small";
    case CertStatus::ComplementTooSmall: return "complement-too-small";
    case CertStatus::IsolatedInFragment: return "isolated-in-fragment";
    case CertStatus::IsolatedInComplement: return "isolated-in-complement";
    case CertStatus::StillConnected: return "still-connected";
  }
  return "unknown";
}

std::vector<Edge> boundary_edges(const Graph& g, const std::vector<int>& fragment) {
  std::vector<char> in(g.vertex_count, 0);
  for (int v : fragment) in[v] = 1;
  std::vector<Edge> out;
  for (int u = 0; u < g.vertex_count; ++u) {
    if (!in[u]) continue;
    for (int v : g.adjacency[u])
      if (!in[v]) out.push_back(make_edge(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CertStatus check_certificate(const Graph& g, const CutCertificate& c) {
  for (int v : c.fragment)
    if (v < 0 || v >= g.vertex_count) return CertStatus::FragmentOutOfRange;

  std::vector<char> in(g.vertex_count, 0);
  for (int v : c.fragment) in[v] = 1;
  int size = 0;
  for (int v = 0; v < g.vertex_count; ++v) size += in[v];
  if (size == 0) {
    // Only the empty cut of a disconnected graph carries an empty fragment.
    if (!(c.kind == CutKind::EdgeCut && c.claimed_value == 0))
      return CertStatus::FragmentEmpty;
  }
  if (size == g.vertex_count) return CertStatus::FragmentFull;

  auto expected = boundary_edges(g, c.fragment);
  auto got = c.cut_edges;
  std::sort(got.begin(), got.end());
  if (got != expected) return CertStatus::CutMismatch;
  if (static_cast<int>(got.size()) != c.claimed_value)
    return CertStatus::ValueMismatch;

  if (c.kind == CutKind::RestrictedEdgeCut) {
    if (size < 2) return CertStatus::FragmentTooSmall;
    if (g.vertex_count - size < 2) return CertStatus::ComplementTooSmall;
    for (int v = 0; v < g.vertex_count; ++v) {
      int inside = 0;
      for (int w : g.adjacency[v])
        if (in[w] == in[v]) ++inside;
      if (inside == 0) {
        return in[v] ? CertStatus::IsolatedInFragment
                     : CertStatus::IsolatedInComplement;
      }
    }
  }

  // Removing the cut must leave at least two components.
  std::set<Edge> cut(got.begin(), got.end());
  Graph rest;
  rest.vertex_count = g.vertex_count;
  rest.adjacency.resize(g.vertex_count);
  for (int u = 0; u < g.vertex_count; ++u)
    for (int v : g.adjacency[u])
      if (u < v && !cut.count({u, v})) {
        rest.adjacency[u].push_back(v);
        rest.adjacency[v].push_back(u);
      }
  if (components(rest).size() < 2) return CertStatus::StillConnected;
  return CertStatus::Ok;
}

}  // namespace lpl
