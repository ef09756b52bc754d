#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lpl {

// Finite group on elements 0..order-1 with group-supplied operations.
// Elements stay opaque integers; no multiplication tables are materialized.
struct Group {
  int order = 0;
  int identity = 0;
  std::function<int(int, int)> mul;
  std::function<int(int)> inv;
  std::string name;
};

// Action of B on A: apply(b, a) evaluates the automorphism assigned to b.
struct Action {
  Group acting;  // B
  Group target;  // A
  std::function<int(int, int)> apply;
};

struct ActionCheck {
  bool ok = false;
  bool exhaustive = true;  // false: seeded random sampling above the budget
  long checks = 0;
  std::string failure;  // names the first violated identity and its witness
};

Group cyclic_group(int n);  // Z_n under addition mod n

// (Z_2)^n under bitwise XOR; elements are n-bit words; every element is
// self-inverse. Requires 1 <= n <= 24.
Group boolean_vector_group(int n);

// Z_n acting on (Z_2)^n by index rotation: the bit at position p moves to
// position (p+i) mod n, so the word with only bit 0 set maps under i to the
// word with only bit i set.
Action shift_action(int n);

// Every element of B acts as the identity automorphism (direct-product case).
Action identity_action(const Group& a, const Group& b);

// Checks that each map is a bijective endomorphism of A, that b -> phi_b is a
// homomorphism, that inverses are respected, and that the identity of A is
// fixed. Exhaustive for small groups, seeded sampling above the budget.
ActionCheck validate_action(const Action& act, std::uint64_t sample_seed = 1);

// Exhaustive associativity/identity/inverse checks; cubic in the order, so
// callers keep it to order <= 512. Returns an empty string when the axioms
// hold, else a description of the first failure.
std::string validate_group(const Group& g);

// Pairs (a, b) encoded as a * |B| + b. Multiplication is
// (a1, b1)(a2, b2) = (a1 * phi_{b1}(a2), b1 b2) and the inverse of (a, b) is
// (phi_{b^-1}(a^-1), b^-1). Throws when the action fails validation.
Group semidirect_product(const Group& a, const Group& b, const Action& act);

inline int sdp_encode(int a, int b, int order_b) { return a * order_b + b; }
inline int sdp_first(int e, int order_b) { return e / order_b; }
inline int sdp_second(int e, int order_b) { return e % order_b; }

// Orbit of x under the action, sorted.
std::vector<int> orbit(const Action& act, int x);

// True when the subgroup generated by gens is the whole group.
bool generates(const Group& g, const std::vector<int>& gens);

}  // namespace lpl
