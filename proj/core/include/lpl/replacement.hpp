#pragma once

#include <optional>
#include <vector>

#include "lpl/cayley.hpp"
#include "lpl/graph.hpp"
#include "lpl/group.hpp"

namespace lpl {

enum class RotationStrategy { SortedNeighbors, HypercubeDims, CirculantGens };

// SortedNeighbors: port i leads to the i-th smallest neighbor. HypercubeDims
// requires an actual hypercube (port = flipped bit); CirculantGens recovers
// the generator set of a circulant from the neighbors of vertex 0 and labels
// ports generator by generator. Throws when the graph is not regular or the
// strategy does not apply.
RotationMap default_rotation_map(const Graph& g, RotationStrategy strategy);

// Vertex (x, i) of the product gets id x * delta1 + i, where delta1 is the
// degree of g1; block x is {x*delta1 .. x*delta1 + delta1 - 1}.
struct ReplacementProduct {
  Graph graph;
  std::vector<std::vector<int>> blocks;
};

// g1 must be regular and connected, g2 regular on exactly deg(g1) vertices,
// rot valid for g1. Two product vertices are adjacent iff they sit in the
// same block and their second coordinates are adjacent in g2, or the rotation
// map matches their (vertex, port) descriptions.
ReplacementProduct replacement_product(const Graph& g1, const RotationMap& rot,
                                       const Graph& g2);

// Number of product edges that cross blocks; equals |E(g1)|.
long cross_edge_count(const Graph& g1, const RotationMap& rot, const Graph& g2);

// Builds the Cayley graph of A x| B on the semidirect connection set and the
// replacement product of the two factor Cayley graphs wired by the induced
// rotation rot(y, i) = (y * phi_i(x), i), then compares edge sets under the
// identity bijection (a, b) <-> a*|B| + b.
struct CorrespondenceResult {
  bool equal = false;
  std::optional<Edge> mismatch;  // first mismatched edge if any
  Graph cayley;
  ReplacementProduct product;
  RotationMap induced;
};

CorrespondenceResult check_replacement_correspondence(
    const Group& a, const std::vector<int>& s_a, const Group& b,
    const std::vector<int>& s_b, const Action& act, int x);

}  // namespace lpl
