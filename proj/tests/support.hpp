#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mac/mac.hpp"

namespace mac::test {

/// The "non-trivial indeterminacy" example complex, optionally with {4,6}.
inline SimplicialComplex example_b(bool with46 = false) {
  std::vector<std::vector<int>> facets{{2, 6}, {3, 6}, {3, 5}, {2, 5}, {2, 4}, {1, 4}, {1, 5}, {1, 6}};
  if (with46) facets.push_back({4, 6});
  return SimplicialComplex::from_facets(6, facets);
}

/// The "trivial indeterminacy" example complex, no optional edges.
inline SimplicialComplex example_a() {
  return SimplicialComplex::from_facets(6, {{1, 3}, {3, 5}, {2, 5}, {2, 4}, {4, 6}, {3, 6}, {1, 4}});
}

inline SimplicialComplex isolated(int m) { return SimplicialComplex::from_facets(m, {}); }

/// Closure of a few random facets on m vertices.
template <class Rng>
SimplicialComplex random_complex(Rng& rng, int m, int max_facet = 4) {
  std::vector<std::vector<int>> facets;
  int count = static_cast<int>(rng() % 7);
  for (int f = 0; f < count; ++f) {
    std::vector<int> facet;
    int size = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_facet));
    for (int v = 1; v <= m; ++v) {
      if (static_cast<int>(facet.size()) < size && rng() % 2 == 0) facet.push_back(v);
    }
    if (!facet.empty()) facets.push_back(facet);
  }
  return SimplicialComplex::from_facets(m, facets);
}

/// Random cochain of total degree n with every admissible support present
/// with probability 1/2.
template <class F, class Rng>
MultiCochain<F> random_multi(const SimplicialComplex& k, const F& field, int n, Rng& rng) {
  MultiCochain<F> out(n);
  VertexSet all = k.vertex_set();
  for (VertexSet j = 0;; j = (j - all) & all) {
    int p = piece_degree(n, j);
    if (p >= -1 && rng() % 2 == 0) {
      for (VertexSet s : k.faces_within(j, p + 1)) out.add_term(field, j, s, field.random(rng));
    }
    if (j == all) break;
  }
  return out;
}

template <class F>
MultiCochain<F> chi(const F& field, std::initializer_list<int> support, std::initializer_list<int> simplex,
                    std::int64_t c = 1) {
  return MultiCochain<F>(basis_cochain(field, make_set(support), make_set(simplex), field.from_int(c)));
}

}  // namespace mac::test
