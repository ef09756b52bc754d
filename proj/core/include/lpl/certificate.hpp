#pragma once

#include <vector>

#include "lpl/graph.hpp"

namespace lpl {

enum class CutKind { EdgeCut, RestrictedEdgeCut };

// A fragment X and the edge set F = E_G(X) witnessing a claimed cut value.
struct CutCertificate {
  std::vector<int> fragment;    // sorted vertex ids
  std::vector<Edge> cut_edges;  // sorted, u < v
  int claimed_value = 0;
  CutKind kind = CutKind::EdgeCut;
};

enum class CertStatus {
  Ok,
  FragmentOutOfRange,
  FragmentEmpty,
  FragmentFull,
  CutMismatch,       // cut_edges != E_G(X)
  ValueMismatch,     // |cut_edges| != claimed_value
  FragmentTooSmall,  // restricted: |X| < 2
  ComplementTooSmall,
  IsolatedInFragment,  // restricted: G[X] has a degree-0 vertex
  IsolatedInComplement,
  StillConnected,  // removing cut_edges leaves a single component
};

const char* to_string(CertStatus s);

// All edges of g with exactly one endpoint in fragment, sorted.
std::vector<Edge> boundary_edges(const Graph& g, const std::vector<int>& fragment);

CertStatus check_certificate(const Graph& g, const CutCertificate& c);

inline bool validate_certificate(const Graph& g, const CutCertificate& c) {
  return check_certificate(g, c) == CertStatus::Ok;
}

}  // namespace lpl
