#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lpl/cayley.hpp"
#include "lpl/connectivity.hpp"
#include "lpl/graph.hpp"
#include "lpl/group.hpp"
#include "lpl/replacement.hpp"

namespace lpl {

enum class ClaimStatus { Holds, Fails, NotApplicable };

const char* to_string(ClaimStatus s);

struct ClaimRecord {
  std::string id;
  std::string context;  // which instance the claim was evaluated on
  ClaimStatus status = ClaimStatus::NotApplicable;
  long lhs = 0;
  long rhs = 0;
  std::string relation;  // "<=", "==", "<", "iff"
  std::string detail;
};

struct BoundReport {
  std::vector<ClaimRecord> claims;
  std::vector<std::pair<std::string, long>> measured;

  void claim(std::string id, std::string context, bool applicable, long lhs,
             std::string relation, long rhs);
  void note(const std::string& key, long value);
  bool all_hold() const;  // no applicable claim failed
  int failed() const;
  void merge(const BoundReport& other);
};

// Builds g1 (R) g2 with the given rotation map, measures every constituent
// quantity exactly and evaluates each applicable product bound: the lambda
// sandwich and its biconnected refinement, the equalities for complete and
// cycle second factors, the lambda' upper bound, the four-term lower bound,
// the equality regime when the second factor is optimally
// restricted-connected, and the optimality / super-lambda biconditionals.
BoundReport check_product_bounds(const Graph& g1, const RotationMap& rot,
                                 const Graph& g2,
                                 const LambdaPrimeOptions& opts = {},
                                 const std::string& context = {});

// Golden values: hypercubes Q2..Q6, the two 8-vertex circulants, the
// order-9 circulant, K4 (R) C3, and the cube-connected cycles CCC3..CCC5.
BoundReport verify_golden_values(const LambdaPrimeOptions& opts = {});

// The optimality criterion for semidirect-product Cayley graphs: when the
// first factor is kappa-optimal and the second lambda'-optimal (both
// measured), the product Cayley graph is lambda'-optimal iff
// |S_A| >= 2|S_B|. Also records the measured equivalence unconditionally.
BoundReport check_optimality_criterion(const Group& a, const std::vector<int>& s_a,
                                       const Group& b, const std::vector<int>& s_b,
                                       const Action& act, int x,
                                       const LambdaPrimeOptions& opts = {});

struct SdpBuild {
  Graph graph;
  BoundReport report;
  std::vector<int> atom;
  int lambda = 0;
  int lambda_prime = 0;
};

// The non-optimal family C_{(Z_2)^n x| Z_n}(S) with S_B = +-half_gens:
// requires |half_gens| >= 2, max generator < n/2 and n/2 < |S_B| < n-1.
// Asserts lambda = |S_B|+1, lambda' = n < order/2, non-optimality, and that
// a minimum-cardinality fragment induces the circulant on S_B.
SdpBuild build_cayley_sdp(int n, const std::vector<int>& half_gens,
                          const LambdaPrimeOptions& opts = {});

// Degree-d instance with lambda' = d+s < order/2 (d odd >= 5, 1 <= s <= d-3):
// instantiates build_cayley_sdp with n = d+s and generators 1..(d-1)/2.
SdpBuild build_lambda_prime_gap(int d, int s, const LambdaPrimeOptions& opts = {});

// Exact isomorphism by degree-refined permutation search; |V| <= 10.
bool small_graph_isomorphic(const Graph& g, const Graph& h);

// Seeded product pairs G1 = random_regular(n1, d1), G2 = random_regular(d1, d2),
// both connected, wired by sorted-neighbor rotations; all product bounds.
BoundReport random_product_sweep(std::uint64_t seed, int count,
                                 const LambdaPrimeOptions& opts = {});

// Seeded search for a product whose edge-connectivity falls below
// min{lambda1, lambda2+1} when the first factor has a cut vertex: an
// 8-regular two-clique graph glued at one vertex, a cycle second factor, and
// random port labellings. Records the witness when found.
BoundReport search_cut_vertex_witness(std::uint64_t seed, int count);

// The vertex-transitive dichotomy for a connected d-regular graph (d >= 2,
// order >= 4): either lambda' = 2d-2, or d <= lambda' <= 2d-3 with lambda'
// dividing the order; the first branch is forced when the order is odd or
// the graph is triangle-free.
ClaimRecord vertex_transitive_dichotomy(const Graph& g, const std::string& context,
                                        const LambdaPrimeOptions& opts = {});

}  // namespace lpl
