#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lpl/cayley.hpp"
#include "lpl/constructors.hpp"
#include "lpl/graph.hpp"
#include "lpl/group.hpp"

using namespace lpl;

TEST_CASE("cyclic group") {
  Group z6 = cyclic_group(6);
  CHECK(z6.mul(2, 5) == 1);
  CHECK(z6.inv(2) == 4);
  CHECK(z6.identity == 0);
  CHECK(validate_group(z6).empty());

  Group trivial = cyclic_group(1);
  CHECK(trivial.order == 1);
  CHECK(validate_group(trivial).empty());

  CHECK_THROWS_AS(cyclic_group(0), std::invalid_argument);
}

TEST_CASE("boolean vector group") {
  Group g3 = boolean_vector_group(3);
  CHECK(g3.mul(0b101, 0b011) == 0b110);
  CHECK(g3.identity == 0);
  for (int a = 0; a < g3.order; ++a) CHECK(g3.inv(a) == a);
  CHECK(validate_group(g3).empty());
  CHECK_THROWS_AS(boolean_vector_group(0), std::invalid_argument);
  CHECK_THROWS_AS(boolean_vector_group(25), std::invalid_argument);
}

TEST_CASE("shift action anchors") {
  Action act = shift_action(4);
  // e_1 = bit 0; the shift by i moves it to bit i
  for (int i = 0; i < 4; ++i) CHECK(act.apply(i, 1) == (1 << i));
  for (int a = 0; a < 16; ++a) CHECK(act.apply(0, a) == a);
  CHECK(orbit(act, 1) == std::vector<int>{1, 2, 4, 8});

  Action act3 = shift_action(3);
  CHECK(orbit(act3, 0b011) == std::vector<int>{0b011, 0b101, 0b110});
}

TEST_CASE("orbit of the identity is trivial") {
  Action act = shift_action(5);
  CHECK(orbit(act, 0) == std::vector<int>{0});
}

TEST_CASE("validate_action") {
  SUBCASE("shift action passes exhaustively") {
    auto check = validate_action(shift_action(4));
    CHECK(check.ok);
    CHECK(check.exhaustive);
  }
  SUBCASE("identity action passes") {
    auto check = validate_action(
        identity_action(boolean_vector_group(3), cyclic_group(5)));
    CHECK(check.ok);
  }
  SUBCASE("a corrupted action fails with a witness") {
    Action bad = shift_action(3);
    auto base = bad.apply;
    bad.apply = [base](int b, int a) {
      if (b == 1 && a == 3) return 0;  // break one table entry
      return base(b, a);
    };
    auto check = validate_action(bad);
    CHECK_FALSE(check.ok);
    CHECK_FALSE(check.failure.empty());
  }
  SUBCASE("a non-homomorphism fails") {
    Action bad;
    bad.acting = cyclic_group(4);
    bad.target = cyclic_group(5);
    bad.apply = [](int b, int a) { return b == 2 ? (a * 2) % 5 : a; };
    auto check = validate_action(bad);
    CHECK_FALSE(check.ok);
  }
  SUBCASE("large actions fall back to seeded sampling") {
    auto check = validate_action(shift_action(12));
    CHECK(check.ok);
    CHECK_FALSE(check.exhaustive);
    CHECK(check.checks > 0);

    Action bad = shift_action(12);
    auto base = bad.apply;
    bad.apply = [base](int b, int a) {
      return (b == 3 && (a & 1)) ? base(b, a ^ 2) : base(b, a);
    };
    auto broken = validate_action(bad);
    CHECK_FALSE(broken.ok);  // dense corruption, sampling finds it
  }
}

TEST_CASE("semidirect product") {
  Group a = boolean_vector_group(3);
  Group b = cyclic_group(3);
  Group sdp = semidirect_product(a, b, shift_action(3));
  CHECK(sdp.order == 24);
  CHECK(validate_group(sdp).empty());

  SUBCASE("inverse formula") {
    // (100, 1)^-1 = (phi_2(100), 2) = (001, 2); the first coordinate of the
    // inverse carries the bit shifted from position 0 to position 2
    int e = sdp_encode(1, 1, 3);
    int inv = sdp.inv(e);
    CHECK(sdp_first(inv, 3) == 4);
    CHECK(sdp_second(inv, 3) == 2);
    CHECK(sdp.mul(e, inv) == sdp.identity);
    CHECK(sdp.mul(inv, e) == sdp.identity);
  }

  SUBCASE("identity action gives the direct product") {
    auto tables_match = [](const Group& ga, const Group& gb) {
      Group d = semidirect_product(ga, gb, identity_action(ga, gb));
      for (int p = 0; p < d.order; ++p)
        for (int q = 0; q < d.order; ++q) {
          int a1 = sdp_first(p, gb.order), b1 = sdp_second(p, gb.order);
          int a2 = sdp_first(q, gb.order), b2 = sdp_second(q, gb.order);
          if (d.mul(p, q) !=
              sdp_encode(ga.mul(a1, a2), gb.mul(b1, b2), gb.order))
            return false;
        }
      return true;
    };
    CHECK(tables_match(a, b));                                    // order 24
    CHECK(tables_match(boolean_vector_group(4), cyclic_group(4)));  // order 64
    CHECK(tables_match(cyclic_group(8), cyclic_group(7)));          // order 56
  }

  SUBCASE("invalid action rejected") {
    Action bad = identity_action(a, b);
    bad.apply = [](int, int a2) { return (a2 + 1) % 8; };
    CHECK_THROWS_AS(semidirect_product(a, b, bad), std::invalid_argument);
  }
}

TEST_CASE("group axioms hold exhaustively for corpus groups") {
  CHECK(validate_group(cyclic_group(128)).empty());
  CHECK(validate_group(boolean_vector_group(6)).empty());
  // the order-384 group behind the headline construction
  Group sdp = semidirect_product(boolean_vector_group(6), cyclic_group(6),
                                 shift_action(6));
  CHECK(sdp.order == 384);
  CHECK(validate_group(sdp).empty());
}

TEST_CASE("cayley graphs") {
  SUBCASE("circulant as a Cayley graph of Z8") {
    Graph g = cayley_graph({cyclic_group(8), {1, 3, 5, 7}});
    Graph c = circulant(8, {1, 3});
    c.rotation.reset();
    CHECK(g == c);
  }
  SUBCASE("hypercube as a Cayley graph of (Z2)^3") {
    Graph g = cayley_graph({boolean_vector_group(3), {1, 2, 4}});
    Graph q = hypercube(3);
    q.rotation.reset();
    CHECK(g == q);
  }
  SUBCASE("non-generating connection set gives a disconnected graph") {
    Graph g = cayley_graph({cyclic_group(6), {2, 4}});
    CHECK_FALSE(is_connected(g));
    CHECK(components(g).size() == 2);
    CHECK_FALSE(generates(cyclic_group(6), {2, 4}));
  }
  SUBCASE("identity in S rejected") {
    CHECK_THROWS_AS(cayley_graph({cyclic_group(6), {0, 3}}), std::invalid_argument);
  }
  SUBCASE("asymmetric S rejected") {
    CHECK_THROWS_AS(cayley_graph({cyclic_group(6), {1}}), std::invalid_argument);
  }
}

TEST_CASE("cayley graphs are |S|-regular with generator translations as automorphisms") {
  Group z2_4 = boolean_vector_group(4);
  std::vector<int> s{1, 2, 4, 8};
  Graph g = cayley_graph({z2_4, s});
  CHECK(regular_degree(g) == 4);
  for (int gen : s)
    for (int u = 0; u < g.vertex_count; ++u)
      for (int v : g.adjacency[u])
        CHECK(g.has_edge(z2_4.mul(gen, u), z2_4.mul(gen, v)));
}

TEST_CASE("sdp cayley build") {
  Group a = boolean_vector_group(3);
  Group b = cyclic_group(3);
  Action act = shift_action(3);
  std::vector<int> s_a{1, 2, 4};

  SUBCASE("the cube-connected-cycles connection set") {
    auto built = build_sdp_cayley_spec(a, s_a, b, {1, 2}, act, 1);
    CHECK(built.product.order == 24);
    // {(e0,1), (e0,2), (e1,0)}
    std::vector<int> expect{sdp_encode(0, 1, 3), sdp_encode(0, 2, 3),
                            sdp_encode(1, 0, 3)};
    std::sort(expect.begin(), expect.end());
    CHECK(built.spec.connection_set == expect);
    CHECK(generates(built.product, built.spec.connection_set));
  }
  SUBCASE("asymmetric S_B rejected") {
    CHECK_THROWS_WITH_AS(build_sdp_cayley_spec(a, s_a, b, {1}, act, 1),
                         doctest::Contains("S_B = S_B^-1"), std::invalid_argument);
  }
  SUBCASE("wrong orbit rejected") {
    CHECK_THROWS_AS(build_sdp_cayley_spec(a, {1, 2, 3}, b, {1, 2}, act, 1),
                    std::invalid_argument);
  }
  SUBCASE("the n=6 two-generator set is accepted with |S| = 5") {
    Group a6 = boolean_vector_group(6);
    Group b6 = cyclic_group(6);
    std::vector<int> s_a6;
    for (int i = 0; i < 6; ++i) s_a6.push_back(1 << i);
    auto built = build_sdp_cayley_spec(a6, s_a6, b6, {1, 2, 4, 5},
                                       shift_action(6), 1);
    CHECK(built.spec.connection_set.size() == 5);
  }
}

TEST_CASE("connected Cayley graph exactly when S generates") {
  for (auto gens : std::vector<std::vector<int>>{{1, 5}, {2, 4}, {3}, {1, 2, 4, 5}}) {
    Group z6 = cyclic_group(6);
    bool gen = generates(z6, gens);
    Graph g = cayley_graph({z6, gens});
    CHECK(is_connected(g) == gen);
  }
}
