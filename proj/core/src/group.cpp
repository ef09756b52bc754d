#include "lpl/group.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace lpl {

Group cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n must be >= 1");
  Group g;
  g.order = n;
  g.identity = 0;
  g.mul = [n](int a, int b) { return (a + b) % n; };
  g.inv = [n](int a) { return (n - a) % n; };
  g.name = "Z" + std::to_string(n);
  return g;
}

Group boolean_vector_group(int n) {
  if (n < 1 || n > 24)
    throw std::invalid_argument("boolean_vector_group: n must be in 1..24");
  Group g;
  g.order = 1 << n;
  g.identity = 0;
  g.mul = [](int a, int b) { return a ^ b; };
  g.inv = [](int a) { return a; };
  g.name = "Z2^" + std::to_string(n);
  return g;
}

Action shift_action(int n) {
  if (n < 2) throw std::invalid_argument("shift_action: n must be >= 2");
  Action act;
  act.acting = cyclic_group(n);
  act.target = boolean_vector_group(n);
  unsigned mask = (1u << n) - 1;
  act.apply = [n, mask](int i, int a) {
    i %= n;
    unsigned long long w = static_cast<unsigned>(a);
    return static_cast<int>(((w << i) | (w >> (n - i))) & mask);
  };
  return act;
}

Action identity_action(const Group& a, const Group& b) {
  Action act;
  act.acting = b;
  act.target = a;
  act.apply = [](int, int x) { return x; };
  return act;
}

namespace {

std::string witness2(const char* what, int x, int y) {
  return std::string(what) + " violated at (" + std::to_string(x) + "," +
         std::to_string(y) + ")";
}

std::string witness3(const char* what, int x, int y, int z) {
  return std::string(what) + " violated at (" + std::to_string(x) + "," +
         std::to_string(y) + "," + std::to_string(z) + ")";
}

}  // namespace

ActionCheck validate_action(const Action& act, std::uint64_t sample_seed) {
  ActionCheck out;
  const Group& a = act.target;
  const Group& b = act.acting;
  long pairs = static_cast<long>(a.order) * b.order;
  long mult_work = static_cast<long>(b.order) * a.order * a.order;
  long comp_work = static_cast<long>(b.order) * b.order * a.order;
  out.exhaustive = pairs <= (1L << 20) && mult_work <= (1L << 26) &&
                   comp_work <= (1L << 26);

  auto fail = [&](std::string msg) {
    out.ok = false;
    out.failure = std::move(msg);
    return out;
  };

  if (out.exhaustive) {
    // phi_b fixes e_A and is a bijection of A.
    for (int x = 0; x < b.order; ++x) {
      if (act.apply(x, a.identity) != a.identity)
        return fail(witness2("identity fixed point", x, a.identity));
      std::vector<char> hit(a.order, 0);
      for (int y = 0; y < a.order; ++y) {
        int img = act.apply(x, y);
        if (img < 0 || img >= a.order || hit[img])
          return fail(witness2("bijectivity", x, y));
        hit[img] = 1;
        ++out.checks;
        if (act.apply(x, a.inv(y)) != a.inv(img))
          return fail(witness2("inverse compatibility", x, y));
      }
    }
    // phi_b is multiplicative on A.
    for (int x = 0; x < b.order; ++x)
      for (int y = 0; y < a.order; ++y)
        for (int z = 0; z < a.order; ++z) {
          ++out.checks;
          if (act.apply(x, a.mul(y, z)) !=
              a.mul(act.apply(x, y), act.apply(x, z)))
            return fail(witness3("multiplicativity", x, y, z));
        }
    // b -> phi_b is a homomorphism.
    for (int x = 0; x < b.order; ++x)
      for (int y = 0; y < b.order; ++y)
        for (int z = 0; z < a.order; ++z) {
          ++out.checks;
          if (act.apply(b.mul(x, y), z) != act.apply(x, act.apply(y, z)))
            return fail(witness3("composition", x, y, z));
        }
  } else {
    std::mt19937_64 rng(sample_seed);
    auto ra = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(a.order)); };
    auto rb = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(b.order)); };
    const long samples = 1L << 18;
    for (long i = 0; i < samples; ++i) {
      int x = rb(), y = ra(), z = ra(), x2 = rb();
      ++out.checks;
      if (act.apply(x, a.identity) != a.identity)
        return fail(witness2("identity fixed point", x, a.identity));
      if (act.apply(x, a.mul(y, z)) != a.mul(act.apply(x, y), act.apply(x, z)))
        return fail(witness3("multiplicativity", x, y, z));
      if (act.apply(b.mul(x, x2), y) != act.apply(x, act.apply(x2, y)))
        return fail(witness3("composition", x, x2, y));
      if (act.apply(x, a.inv(y)) != a.inv(act.apply(x, y)))
        return fail(witness2("inverse compatibility", x, y));
    }
    // Bijectivity is exhaustive per sampled b (linear in |A|).
    for (int i = 0; i < 16; ++i) {
      int x = rb();
      std::vector<char> hit(a.order, 0);
      for (int y = 0; y < a.order; ++y) {
        int img = act.apply(x, y);
        if (img < 0 || img >= a.order || hit[img])
          return fail(witness2("bijectivity", x, y));
        hit[img] = 1;
      }
    }
  }
  out.ok = true;
  return out;
}

std::string validate_group(const Group& g) {
  if (g.order < 1) return "order must be positive";
  for (int x = 0; x < g.order; ++x) {
    if (g.mul(g.identity, x) != x || g.mul(x, g.identity) != x)
      return witness2("identity law", x, g.identity);
    int ix = g.inv(x);
    if (ix < 0 || ix >= g.order || g.mul(x, ix) != g.identity ||
        g.mul(ix, x) != g.identity)
      return witness2("inverse law", x, ix);
  }
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      int xy = g.mul(x, y);
      if (xy < 0 || xy >= g.order) return witness2("closure", x, y);
      for (int z = 0; z < g.order; ++z)
        if (g.mul(xy, z) != g.mul(x, g.mul(y, z)))
          return witness3("associativity", x, y, z);
    }
  return {};
}

Group semidirect_product(const Group& a, const Group& b, const Action& act) {
  ActionCheck check = validate_action(act);
  if (!check.ok)
    throw std::invalid_argument("semidirect_product: invalid action: " +
                                check.failure);
  if (act.target.order != a.order || act.acting.order != b.order)
    throw std::invalid_argument("semidirect_product: action groups mismatch");

  Group g;
  g.order = a.order * b.order;
  g.identity = sdp_encode(a.identity, b.identity, b.order);
  int nb = b.order;
  g.mul = [a, b, act, nb](int p, int q) {
    int a1 = sdp_first(p, nb), b1 = sdp_second(p, nb);
    int a2 = sdp_first(q, nb), b2 = sdp_second(q, nb);
    return sdp_encode(a.mul(a1, act.apply(b1, a2)), b.mul(b1, b2), nb);
  };
  g.inv = [a, b, act, nb](int p) {
    int x = sdp_first(p, nb), y = sdp_second(p, nb);
    int yi = b.inv(y);
    return sdp_encode(act.apply(yi, a.inv(x)), yi, nb);
  };
  g.name = a.name + " x| " + b.name;
  return g;
}

std::vector<int> orbit(const Action& act, int x) {
  std::set<int> seen;
  for (int b = 0; b < act.acting.order; ++b) seen.insert(act.apply(b, x));
  return {seen.begin(), seen.end()};
}

bool generates(const Group& g, const std::vector<int>& gens) {
  std::vector<char> seen(g.order, 0);
  std::vector<int> stack{g.identity};
  seen[g.identity] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int s : gens) {
      int y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == g.order;
}

}  // namespace lpl
