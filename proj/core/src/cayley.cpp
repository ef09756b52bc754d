#include "lpl/cayley.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lpl {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool inverse_closed(const Group& g, const std::vector<int>& s) {
  std::set<int> set(s.begin(), s.end());
  for (int x : s)
    if (!set.count(g.inv(x))) return false;
  return true;
}

}  // namespace

Graph cayley_graph(const CayleySpec& spec) {
  const Group& g = spec.group;
  auto s = sorted_unique(spec.connection_set);
  for (int x : s)
    if (x < 0 || x >= g.order)
      throw std::invalid_argument("cayley_graph: element out of range");
  if (std::binary_search(s.begin(), s.end(), g.identity))
    throw std::invalid_argument("cayley_graph: identity in connection set");
  if (!inverse_closed(g, s))
    throw std::invalid_argument("cayley_graph: connection set not closed under inverses");

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(g.order) * s.size() / 2);
  for (int x = 0; x < g.order; ++x)
    for (int gen : s) edges.push_back(make_edge(x, g.mul(x, gen)));
  return make_graph(g.order, edges);
}

SdpCayley build_sdp_cayley_spec(const Group& a, const std::vector<int>& s_a_in,
                                const Group& b, const std::vector<int>& s_b_in,
                                const Action& act, int x) {
  auto s_a = sorted_unique(s_a_in);
  auto s_b = sorted_unique(s_b_in);
  auto reject = [](const std::string& cond) {
    throw std::invalid_argument("sdp cayley build: condition failed: " + cond);
  };

  if (static_cast<int>(s_a.size()) != b.order || b.order < 2)
    reject("|S_A| = |B| >= 2");
  if (!std::binary_search(s_a.begin(), s_a.end(), x)) reject("x in S_A");
  if (orbit(act, x) != s_a) reject("S_A is the orbit of x");
  if (!generates(a, s_a)) reject("S_A generates A");
  if (!generates(b, s_b)) reject("S_B generates B");

  SdpCayley out;
  out.product = semidirect_product(a, b, act);
  out.orbit_of_x = s_a;
  out.x = x;
  out.s_a = s_a;
  out.s_b = s_b;

  std::vector<int> s;
  for (int gen : s_b) s.push_back(sdp_encode(a.identity, gen, b.order));
  s.push_back(sdp_encode(x, b.identity, b.order));
  s = sorted_unique(s);

  // S = S^-1 must agree with (S_B = S_B^-1 and x = x^-1); both sides are
  // computed independently and compared before either is relied on.
  bool s_sym = inverse_closed(out.product, s);
  bool parts_sym = inverse_closed(b, s_b) && a.inv(x) == x;
  if (s_sym != parts_sym)
    throw std::logic_error("sdp cayley build: symmetry equivalence broken");
  if (!inverse_closed(b, s_b)) reject("S_B = S_B^-1");
  if (a.inv(x) != x) reject("x = x^-1");

  out.spec.group = out.product;
  out.spec.connection_set = s;
  return out;
}

}  // namespace lpl
