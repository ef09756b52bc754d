#pragma once

#include <string>
#include <vector>

#include "lpl/graph.hpp"
#include "lpl/group.hpp"

namespace lpl {

// Connection set S with identity excluded and S = S^-1; the Cayley graph has
// the group elements as vertices and x ~ y iff x^-1 y in S.
struct CayleySpec {
  Group group;
  std::vector<int> connection_set;
};

// |S|-regular undirected graph on group.order vertices. Throws when the
// identity is in S or S != S^-1.
Graph cayley_graph(const CayleySpec& spec);

// The semidirect-product Cayley construction: S_A must be the orbit of x
// under the action with |S_A| = |B| >= 2, S_A generating A and S_B generating
// B; the connection set over A x| B is {(e_A, b): b in S_B} united with
// {(x, e_B)}. The build also checks that this set is closed under inverses
// exactly when S_B = S_B^-1 and x = x^-1.
struct SdpCayley {
  Group product;          // A x| B, pairs encoded as a*|B|+b
  CayleySpec spec;        // connection set over the product
  std::vector<int> orbit_of_x;
  int x = 0;
  std::vector<int> s_a;
  std::vector<int> s_b;
};

SdpCayley build_sdp_cayley_spec(const Group& a, const std::vector<int>& s_a,
                                const Group& b, const std::vector<int>& s_b,
                                const Action& act, int x);

}  // namespace lpl
