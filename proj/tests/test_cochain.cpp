#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mac/cochain.hpp"
#include "support.hpp"

using namespace mac;

namespace {

template <class F>
SimplicialCochain<F> cochain(const F& f, VertexSet j, int p,
                             std::initializer_list<std::pair<std::initializer_list<int>, int>> terms) {
  SimplicialCochain<F> out{j, p, {}};
  for (const auto& [s, c] : terms) out.add_term(f, make_set(s), f.from_int(c));
  return out;
}

template <class F, class Rng>
SimplicialCochain<F> random_cochain(const SimplicialComplex& k, const F& f, VertexSet j, int p, Rng& rng) {
  SimplicialCochain<F> out{j, p, {}};
  for (VertexSet s : k.faces_within(j, p + 1)) out.add_term(f, s, f.random(rng));
  return out;
}

}  // namespace

TEST_CASE("coboundary of vertex cochains", "[cochain]") {
  RationalField q;
  auto k = test::example_b();
  VertexSet all = full_set(6);
  auto d1 = coboundary(k, q, basis_cochain(q, all, vertex_bit(1)));
  CHECK(d1 == cochain(q, all, 1, {{{1, 4}, -1}, {{1, 5}, -1}, {{1, 6}, -1}}));
  auto d5 = coboundary(k, q, basis_cochain(q, all, vertex_bit(5)));
  CHECK(d5 == cochain(q, all, 1, {{{1, 5}, 1}, {{2, 5}, 1}, {{3, 5}, 1}}));
}

TEST_CASE("coboundary of the empty simplex", "[cochain]") {
  RationalField q;
  auto k = test::example_b();
  VertexSet j = make_set({2, 3, 5});
  auto d = coboundary(k, q, basis_cochain(q, j, 0));
  CHECK(d == cochain(q, j, 0, {{{2}, 1}, {{3}, 1}, {{5}, 1}}));
  CHECK(coboundary(k, q, basis_cochain(q, 0, 0)).is_zero());
}

TEST_CASE("cohomology summands", "[cochain]") {
  RationalField q;
  auto k = test::example_b();
  CHECK(cohomology(k, make_set({1, 2, 3, 4}), 1, q).betti == 0);
  CHECK(cohomology(k, make_set({3, 4, 5, 6}), 1, q).betti == 0);
  auto empty = cohomology(k, 0, -1, q);
  CHECK(empty.betti == 1);
  REQUIRE(empty.cocycle_basis.size() == 1);
  CHECK(empty.cocycle_basis[0] == basis_cochain(q, 0, 0));
  CHECK(cohomology(k, make_set({1, 2}), 0, q).betti == 1);
  // the whole 8-cycle-like graph: 6 vertices, 8 edges, connected
  CHECK(cohomology(k, full_set(6), 1, q).betti == 3);
  CHECK(cohomology(k, full_set(6), 0, q).betti == 0);
  CHECK(cohomology(k, full_set(6), -1, q).betti == 0);
  CHECK_THROWS(cohomology(k, vertex_bit(7), 0, q));
}

TEST_CASE("solving coboundary equations", "[cochain]") {
  RationalField q;
  auto k = test::example_b();
  VertexSet j = make_set({3, 4, 5, 6});

  auto zero = solve_coboundary(k, SimplicialCochain<RationalField>{j, 1, {}}, q);
  REQUIRE(zero);
  CHECK(zero->is_zero());

  auto t = basis_cochain(q, j, make_set({3, 5}));
  auto x = solve_coboundary(k, t, q);
  REQUIRE(x);
  CHECK(coboundary(k, q, *x) == t);
  CHECK(x->degree == 0);
  CHECK(coboundary(k, q, basis_cochain(q, j, vertex_bit(5))) == t);
  CHECK(*solve_coboundary(k, t, q) == *x);

  auto a = test::example_a();
  auto t25 = basis_cochain(q, full_set(6), make_set({2, 5}));
  CHECK_FALSE(solve_coboundary(a, t25, q).has_value());
  CHECK_FALSE(solve_coboundary(k, t25, q).has_value());
}

TEST_CASE("cochains validate their simplices", "[cochain]") {
  RationalField q;
  auto k = test::example_b();
  Summand<RationalField> s(k, q, full_set(6), 1);
  CHECK_THROWS_AS(s.to_dense(basis_cochain(q, full_set(6), make_set({4, 6}))), std::invalid_argument);
  CHECK_THROWS_AS(s.to_dense(basis_cochain(q, full_set(6), vertex_bit(1))), std::invalid_argument);
  CHECK_THROWS_AS(Summand<RationalField>(k, q, 0, -2), std::invalid_argument);
}

namespace {

template <class F>
void check_complex_laws(const F& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 200; ++i) {
    int m = 1 + static_cast<int>(rng() % 7);
    auto k = test::random_complex(rng, m);
    VertexSet j = rng() & full_set(m);
    int euler_cells = 0, euler_betti = 0;
    for (int p = -1; p <= m; ++p) {
      auto x = random_cochain(k, f, j, p, rng);
      REQUIRE(coboundary(k, f, coboundary(k, f, x)).is_zero());

      Summand<F> s(k, f, j, p);
      Summand<F> up(k, f, j, p + 1);
      // dim Z^p = betti + rank d^{p-1}; rank d^p = rank of B^{p+1}
      std::size_t kernel = s.betti() + s.boundary_rank();
      REQUIRE(kernel + up.boundary_rank() == s.cochain_dim());
      int sign = (p + 1) % 2 == 0 ? 1 : -1;
      euler_cells += sign * static_cast<int>(s.cochain_dim());
      euler_betti += sign * static_cast<int>(s.betti());

      for (const auto& z : s.cocycle_basis()) REQUIRE(coboundary(k, f, z).is_zero());
      REQUIRE(s.cocycle_basis().size() == s.betti());

      auto target = coboundary(k, f, x);
      auto y = solve_coboundary(k, target, f);
      REQUIRE(y);
      REQUIRE(coboundary(k, f, *y) == target);
    }
    REQUIRE(euler_cells == euler_betti);
  }
}

}  // namespace

TEST_CASE("cochain complex laws on random complexes", "[cochain][property]") {
  check_complex_laws(Gf2Field{}, 21);
  check_complex_laws(PrimeField(3), 22);
  check_complex_laws(RationalField{}, 23);
}

TEST_CASE("class coordinates", "[cochain]") {
  PrimeField f(3);
  auto k = test::example_b();
  Summand<PrimeField> s(k, f, full_set(6), 1);
  REQUIRE(s.betti() == 3);
  for (std::size_t i = 0; i < s.betti(); ++i) {
    auto c = s.coordinates(s.cocycle(i));
    for (std::size_t r = 0; r < c.size(); ++r) CHECK(c[r] == (r == i ? 1u : 0u));
  }
  // shifting by a coboundary keeps the coordinates
  auto shifted = add(f, s.cocycle(0), coboundary(k, f, basis_cochain(f, full_set(6), vertex_bit(2))));
  CHECK(s.coordinates(shifted) == s.coordinates(s.cocycle(0)));
  CHECK_THROWS_AS(Summand<PrimeField>(k, f, full_set(6), 0).coordinates(basis_cochain(f, full_set(6), vertex_bit(1))),
                  InvariantError);
}
