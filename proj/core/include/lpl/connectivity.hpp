#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lpl/certificate.hpp"
#include "lpl/graph.hpp"

namespace lpl {

struct LambdaPrimeOptions {
  // Restrict the first contracted edge to those incident to vertex 0. Sound
  // on vertex-transitive graphs: some minimum-cardinality fragment contains
  // vertex 0 and induces minimum degree >= 1, so one of its edges touches 0.
  bool use_vertex_transitivity = false;
  // Current-best upper bound; flows stop once their value would exceed it.
  int prune_at = std::numeric_limits<int>::max();
  int brute_force_threshold = 16;
  // Worker threads for the pair loop. Results are identical for any job
  // count: every pair achieving the final value is fully evaluated and the
  // reduction picks the lexicographically smallest fragment.
  int jobs = 1;
};

// lambda' exists for connected graphs of order >= 4 other than stars.
bool lambda_prime_defined(const Graph& g);

struct LambdaResult {
  int value = 0;
  CutCertificate certificate;
};

// lambda(G) as the minimum over u != 0 of the 0-u min cut; the certificate
// fragment is the source side of the first minimizing cut. A disconnected
// input yields 0 with an empty cut.
LambdaResult edge_connectivity(const Graph& g);

// kappa(G) via unit vertex capacities and min cuts over a dominating set of
// non-adjacent terminal pairs; n-1 for complete graphs.
int vertex_connectivity(const Graph& g);

struct LambdaPrimeResult {
  bool defined = false;
  int value = 0;
  CutCertificate certificate;
};

// Exact lambda'(G): over pairs of vertex-disjoint edges e, f, contract e and
// f and take the e-f min cut. Pruned by the running best and by xi(G). Ties
// resolve to the lexicographically smallest fragment.
LambdaPrimeResult restricted_edge_connectivity(const Graph& g,
                                               const LambdaPrimeOptions& opts = {});

// Oracle: minimum boundary over all vertex subsets X with both G[X] and
// G[complement] of minimum degree >= 1. Independent of the flow path.
int restricted_edge_connectivity_bruteforce(const Graph& g, int threshold = 16);

struct AtomResult {
  int lambda_prime = 0;
  std::vector<int> atom;  // sorted; |atom| <= |complement|
  CutCertificate certificate;
};

// A minimum-cardinality fragment over all minimum restricted edge-cuts,
// smallest lexicographically among those of minimum size.
AtomResult lambda_prime_atom(const Graph& g, const LambdaPrimeOptions& opts = {});

struct ConnectivityReport {
  int delta = 0;
  int xi = 0;
  int kappa = 0;
  int lambda = 0;
  CutCertificate lambda_certificate;
  std::optional<int> lambda_prime;
  std::optional<CutCertificate> lambda_prime_certificate;
  bool super_lambda = false;         // lambda' defined and > lambda
  bool lambda_prime_optimal = false; // lambda' defined and equal to xi
};

// Requires a connected graph with at least one edge.
ConnectivityReport classify(const Graph& g, const LambdaPrimeOptions& opts = {});

// Empty string when the report satisfies kappa <= lambda <= delta,
// lambda <= lambda' <= xi when defined, the flag equivalences, and both
// certificates validate; otherwise a semicolon-joined list of violations.
std::string report_violations(const Graph& g, const ConnectivityReport& r);

}  // namespace lpl
