#pragma once

#include <cstdint>
#include <vector>

#include "lpl/graph.hpp"

namespace lpl {

struct FamilySpec {
  enum class Kind { Circulant, Hypercube, Complete, Cycle, Star, RandomRegular };
  Kind kind = Kind::Cycle;
  int n = 0;
  int d = 0;                  // random_regular only
  std::vector<int> gens;      // circulant only
  std::uint64_t seed = 1;     // random_regular only
};

// Circulant G(n; +-S): vertices 0..n-1, ij is an edge iff |j-i| = s (mod n)
// for some s in S. Requires n >= 3 and S a nonempty subset of {1..n/2}.
// Ports: port 2t goes to +s_{t+1}, port 2t+1 to -s_{t+1}; when n is even and
// n/2 is a generator it contributes the single final port.
Graph circulant(int n, const std::vector<int>& gens);

// 2^n vertices indexed by n-bit words (vertex id = binary value, bit 0 is the
// lowest-order position); port i flips bit i.
Graph hypercube(int n);

Graph complete(int n);  // n >= 1
Graph cycle(int n);     // n >= 3
Graph star(int n);      // K_{1,n-1}, n >= 2 total vertices; center is vertex 0

// Pairing model with full restart on a loop or repeated edge; deterministic
// for a fixed seed. Requires n*d even and d < n; throws when the restart
// budget runs out.
Graph random_regular(int n, int d, std::uint64_t seed);

Graph build_family(const FamilySpec& spec);

}  // namespace lpl
