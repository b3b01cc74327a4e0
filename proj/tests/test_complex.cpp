#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mac/complex.hpp"
#include "support.hpp"

using namespace mac;

TEST_CASE("simplex count and edges", "[complex]") {
  auto k = test::example_b();
  CHECK(k.size() == 1 + 6 + 8);
  CHECK(k.dimension() == 1);
  CHECK(k.edges().size() == 8);
  CHECK(k.contains(make_set({2, 6})));
  CHECK_FALSE(k.contains(make_set({4, 6})));
  CHECK(test::example_b(true).contains(make_set({4, 6})));
  CHECK(k.contains(0));
}

TEST_CASE("bad input is rejected", "[complex]") {
  CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::flag(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(test::example_b().full_subcomplex(vertex_bit(7)), std::invalid_argument);
}

TEST_CASE("facets are closed downward", "[complex]") {
  auto k = SimplicialComplex::from_facets(4, {{1, 2, 3}});
  CHECK(k.size() == 1 + 4 + 3 + 1);
  CHECK(k.contains(make_set({1, 3})));
  CHECK(k.dimension() == 2);
  auto f = k.facets();
  REQUIRE(f.size() == 2);
  CHECK(f[0] == std::vector<int>{4});
  CHECK(f[1] == std::vector<int>{1, 2, 3});
  CHECK(SimplicialComplex::from_facets(4, f) == k);
}

TEST_CASE("simplex ordering", "[complex]") {
  CHECK(lex_less(make_set({1, 4}), make_set({2, 3})));
  CHECK(lex_less(make_set({1, 2}), make_set({1, 3})));
  CHECK(simplex_less(make_set({5}), make_set({1, 2})));
  auto k = test::example_b();
  auto s = k.simplices();
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(simplex_less(s[i - 1], s[i]));
  CHECK(set_to_string(make_set({1, 3, 5})) == "{1,3,5}");
}

TEST_CASE("full subcomplexes", "[complex]") {
  auto k = test::example_a();
  auto kj = k.full_subcomplex(make_set({1, 3, 5}));
  CHECK(kj.vertex_set() == make_set({1, 3, 5}));
  CHECK(kj.edges() == std::vector<std::pair<int, int>>{{1, 3}, {3, 5}});
  CHECK(k.full_subcomplex(k.vertex_set()) == k);
  CHECK(k.full_subcomplex(0).size() == 1);
}

TEST_CASE("full subcomplex composes", "[complex][property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    int m = 1 + static_cast<int>(rng() % 7);
    auto k = test::random_complex(rng, m);
    VertexSet all = full_set(m);
    VertexSet j = rng() & all, i2 = rng() & j;
    REQUIRE(k.full_subcomplex(all) == k);
    REQUIRE(k.full_subcomplex(j).full_subcomplex(i2) == k.full_subcomplex(i2));
    auto kj = k.full_subcomplex(j);
    for (VertexSet s : kj.simplices()) {
      REQUIRE(is_subset(s, j));
      REQUIRE(k.contains(s));
    }
  }
}

TEST_CASE("one-skeleton", "[complex]") {
  auto g = test::example_b().one_skeleton();
  CHECK(g.edge_count() == 8);
  CHECK(g.has_edge(1, 6));
  CHECK_FALSE(g.has_edge(4, 6));
  CHECK(g.valency_sequence() == std::vector<int>{3, 3, 3, 3, 2, 2});
  CHECK_THROWS(test::isolated(9).one_skeleton());
}

TEST_CASE("flag complexes", "[complex]") {
  // the 8-edge example has no triangles, so it is its own flag complex
  auto k = test::example_b();
  auto g = k.one_skeleton();
  int triangles = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c) triangles += g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
  CHECK(triangles == 0);
  CHECK(SimplicialComplex::flag(g) == k);

  auto tri = SimplicialComplex::flag(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(tri.contains(full_set(3)));
  CHECK(tri.dimension() == 2);
}

TEST_CASE("flag complex recovers its graph", "[complex][property]") {
  for (int n = 1; n <= 6; ++n) {
    std::uint32_t pairs = static_cast<std::uint32_t>(n * (n - 1) / 2);
    for (std::uint32_t bits = 0; bits < (1u << pairs); bits += (n == 6 ? 7 : 1)) {
      SmallGraph g(n, bits);
      auto k = SimplicialComplex::flag(g);
      REQUIRE(k.one_skeleton() == g);
      // every simplex is a clique and every clique is a simplex
      for (VertexSet s = 1; s <= full_set(n); ++s) {
        bool clique = true;
        auto vs = vertices_of(s);
        for (std::size_t a = 0; a < vs.size() && clique; ++a)
          for (std::size_t b = a + 1; b < vs.size(); ++b) clique = clique && g.has_edge(vs[a], vs[b]);
        REQUIRE(k.contains(s) == clique);
      }
    }
  }
}

TEST_CASE("small graph operations", "[complex]") {
  SmallGraph g(6);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  CHECK(g.distance(1, 3) == 2);
  CHECK(g.distance(1, 5) < 0);
  CHECK(g.complement().edge_count() == 13);
  CHECK(g.neighbours(2) == make_set({1, 3}));
  std::vector<int> perm{3, 2, 1, 4, 5, 6};
  auto h = g.relabeled(perm);
  CHECK(h.has_edge(3, 2));
  CHECK(h.has_edge(2, 1));
  auto sub = g.induced(make_set({2, 3, 5}));
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 1);
  g.remove_edge(1, 2);
  CHECK(g.edge_count() == 1);
}
