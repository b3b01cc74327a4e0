#pragma once

// Simplicial complexes on a labeled vertex set {1..m}, with simplices stored
// as vertex bitmasks (bit v-1 <-> vertex v), plus small graphs on at most
// eight vertices.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mac {

using VertexSet = std::uint32_t;
inline constexpr int kMaxVertices = 32;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }
constexpr int cardinality(VertexSet s) { return std::popcount(s); }
constexpr VertexSet full_set(int m) {
  return m >= 32 ? ~VertexSet{0} : (VertexSet{1} << m) - 1;
}
constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

/// Ascending vertex labels of s.
inline std::vector<int> vertices_of(VertexSet s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline VertexSet make_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= vertex_bit(v);
  return s;
}
inline VertexSet make_set(std::initializer_list<int> vertices) {
  return make_set(std::span<const int>(vertices.begin(), vertices.size()));
}

/// Lexicographic order of the ascending vertex lists of two equal-size sets:
/// the smallest vertex in which they differ belongs to the smaller one.
constexpr bool lex_less(VertexSet a, VertexSet b) {
  VertexSet d = a ^ b;
  return d != 0 && (a & d & (~d + 1)) != 0;
}

/// The library-wide simplex order: by size, then lexicographically.
constexpr bool simplex_less(VertexSet a, VertexSet b) {
  int ca = cardinality(a), cb = cardinality(b);
  return ca != cb ? ca < cb : lex_less(a, b);
}

/// Number of elements of s strictly below vertex v.
constexpr int rank_below(int v, VertexSet s) { return cardinality(s & (vertex_bit(v) - 1)); }

/// "{1,4}" style rendering, "{}" for the empty set.
inline std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : vertices_of(s)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

class SmallGraph;

class SimplicialComplex {
 public:
  /// The empty complex {∅} on no vertices.
  SimplicialComplex() : SimplicialComplex(0, 0, {0}) {}

  /// Downward closure of facets plus ∅ and every singleton {1}..{m}.
  static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets) {
    if (m < 0 || m > kMaxVertices) {
      throw std::invalid_argument("vertex count must be in [0, " + std::to_string(kMaxVertices) +
                                  "], got " + std::to_string(m));
    }
    std::vector<VertexSet> simplices{0};
    for (int v = 1; v <= m; ++v) simplices.push_back(vertex_bit(v));
    for (const auto& facet : facets) {
      VertexSet f = 0;
      for (int v : facet) {
        if (v < 1 || v > m) {
          throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                      std::to_string(m));
        }
        if (f & vertex_bit(v)) {
          throw std::invalid_argument("duplicate vertex " + std::to_string(v) + " in facet");
        }
        f |= vertex_bit(v);
      }
      if (cardinality(f) > 24) throw std::invalid_argument("facet too large to close downward");
      // every nonempty submask of f
      for (VertexSet s = f; s != 0; s = (s - 1) & f) simplices.push_back(s);
    }
    return SimplicialComplex(m, full_set(m), std::move(simplices));
  }

  /// Clique complex of an edge list on [m].
  static SimplicialComplex flag(int m, const std::vector<std::pair<int, int>>& edges) {
    if (m < 0 || m > kMaxVertices) throw std::invalid_argument("vertex count out of range");
    std::vector<VertexSet> nbr(m + 1, 0);
    for (auto [u, v] : edges) {
      if (u < 1 || v < 1 || u > m || v > m || u == v) {
        throw std::invalid_argument("bad edge {" + std::to_string(u) + "," + std::to_string(v) +
                                    "}");
      }
      nbr[u] |= vertex_bit(v);
      nbr[v] |= vertex_bit(u);
    }
    std::vector<VertexSet> simplices{0};
    // extend each clique by vertices above its maximum adjacent to all members
    std::vector<std::pair<VertexSet, VertexSet>> stack;  // (clique, candidates)
    for (int v = 1; v <= m; ++v) stack.emplace_back(vertex_bit(v), nbr[v] & ~full_set(v));
    while (!stack.empty()) {
      auto [clique, cand] = stack.back();
      stack.pop_back();
      simplices.push_back(clique);
      while (cand) {
        int w = std::countr_zero(cand) + 1;
        cand &= cand - 1;
        stack.emplace_back(clique | vertex_bit(w), cand & nbr[w]);
      }
    }
    return SimplicialComplex(m, full_set(m), std::move(simplices));
  }
  static SimplicialComplex flag(const SmallGraph& g);

  int vertex_count() const { return m_; }   // size of the label universe [m]
  VertexSet vertex_set() const { return vertices_; }
  std::size_t size() const { return simplices_.size(); }
  int dimension() const { return cardinality(simplices_.back()) - 1; }

  /// All simplices, ∅ first, ordered by size then lexicographically.
  std::span<const VertexSet> simplices() const { return simplices_; }

  bool contains(VertexSet s) const {
    if (!is_subset(s, vertices_)) return false;
    if (!dense_.empty()) return (dense_[s >> 6] >> (s & 63)) & 1;
    return std::binary_search(by_value_.begin(), by_value_.end(), s);
  }

  /// Simplices with exactly k vertices contained in j, lexicographic order.
  std::vector<VertexSet> faces_within(VertexSet j, int k) const {
    std::vector<VertexSet> out;
    auto [lo, hi] = size_range(k);
    for (auto it = lo; it != hi; ++it) {
      if (is_subset(*it, j)) out.push_back(*it);
    }
    return out;
  }

  /// K_J: the simplices of K contained in J. Vertex labels are kept.
  SimplicialComplex full_subcomplex(VertexSet j) const {
    if (!is_subset(j, full_set(m_))) throw std::invalid_argument("J is not a subset of [m]");
    std::vector<VertexSet> kept;
    for (VertexSet s : simplices_) {
      if (is_subset(s, j)) kept.push_back(s);
    }
    return SimplicialComplex(m_, j & vertices_, std::move(kept));
  }

  /// Edges {u, v} with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    auto [lo, hi] = size_range(2);
    for (auto it = lo; it != hi; ++it) {
      auto vs = vertices_of(*it);
      out.emplace_back(vs[0], vs[1]);
    }
    return out;
  }

  SmallGraph one_skeleton() const;

  /// Facet lists (maximal simplices), for serialization.
  std::vector<std::vector<int>> facets() const {
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < simplices_.size(); ++i) {
      VertexSet s = simplices_[i];
      if (s == 0 && simplices_.size() > 1) continue;
      bool maximal = true;
      for (std::size_t k = i + 1; k < simplices_.size() && maximal; ++k) {
        if (simplices_[k] != s && is_subset(s, simplices_[k])) maximal = false;
      }
      if (maximal && s != 0) out.push_back(vertices_of(s));
    }
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.vertices_ == b.vertices_ && a.simplices_ == b.simplices_;
  }

 private:
  SimplicialComplex(int m, VertexSet vertices, std::vector<VertexSet> simplices)
      : m_(m), vertices_(vertices) {
    std::sort(simplices.begin(), simplices.end(), simplex_less);
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    simplices_ = std::move(simplices);
    if (m_ <= 20) {
      dense_.assign(((std::size_t{1} << m_) + 63) / 64, 0);
      for (VertexSet s : simplices_) dense_[s >> 6] |= std::uint64_t{1} << (s & 63);
    } else {
      by_value_ = simplices_;
      std::sort(by_value_.begin(), by_value_.end());
    }
    check_closed();
  }

  void check_closed() const {
    if (simplices_.empty() || simplices_.front() != 0) {
      throw std::logic_error("complex is missing the empty simplex");
    }
    for (int v : vertices_of(vertices_)) {
      if (!contains(vertex_bit(v))) throw std::logic_error("complex is missing a vertex");
    }
    for (VertexSet s : simplices_) {
      if (!is_subset(s, vertices_)) throw std::logic_error("simplex outside the vertex set");
      for (VertexSet rest = s; rest; rest &= rest - 1) {
        if (!contains(s & ~(rest & (~rest + 1)))) {
          throw std::logic_error("complex is not downward closed at " + set_to_string(s));
        }
      }
    }
  }

  std::pair<std::vector<VertexSet>::const_iterator, std::vector<VertexSet>::const_iterator>
  size_range(int k) const {
    auto lo = std::partition_point(simplices_.begin(), simplices_.end(),
                                   [k](VertexSet s) { return cardinality(s) < k; });
    auto hi = std::partition_point(lo, simplices_.end(),
                                   [k](VertexSet s) { return cardinality(s) <= k; });
    return {lo, hi};
  }

  int m_ = 0;
  VertexSet vertices_ = 0;
  std::vector<VertexSet> simplices_;
  std::vector<std::uint64_t> dense_;   // membership bitmap over all 2^m masks, m <= 20
  std::vector<VertexSet> by_value_;    // sorted masks, used when m > 20
};

// ---------------------------------------------------------------------------
// SmallGraph: n <= 8 vertices, one bit per unordered pair. Pairs are indexed
// in lexicographic order (1,2),(1,3),...,(1,n),(2,3),...; bit k is pair k.
// ---------------------------------------------------------------------------

class SmallGraph {
 public:
  static constexpr int kMaxN = 8;

  SmallGraph() = default;
  explicit SmallGraph(int n, std::uint32_t edge_bits = 0) : n_(n), bits_(edge_bits) {
    if (n < 0 || n > kMaxN) {
      throw std::invalid_argument("SmallGraph supports at most 8 vertices, got " +
                                  std::to_string(n));
    }
    if (bits_ & ~pair_mask(n)) throw std::invalid_argument("edge bits beyond C(n,2)");
  }
  SmallGraph(int n, const std::vector<std::pair<int, int>>& edges) : SmallGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  static constexpr int pair_count(int n) { return n * (n - 1) / 2; }
  static constexpr std::uint32_t pair_mask(int n) {
    return pair_count(n) >= 32 ? ~0u : (1u << pair_count(n)) - 1;
  }
  /// Index of {u,v} (1-based, any order) in the lexicographic pair order.
  static int pair_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n || u == v) {
      throw std::invalid_argument("invalid vertex pair {" + std::to_string(u) + "," +
                                  std::to_string(v) + "} for n=" + std::to_string(n));
    }
    // pairs starting below u: sum_{i<u} (n - i)
    return (u - 1) * n - (u - 1) * u / 2 + (v - u - 1);
  }

  int vertex_count() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  int edge_count() const { return std::popcount(bits_); }

  bool has_edge(int u, int v) const { return (bits_ >> pair_index(n_, u, v)) & 1; }
  void add_edge(int u, int v) { bits_ |= 1u << pair_index(n_, u, v); }
  void remove_edge(int u, int v) { bits_ &= ~(1u << pair_index(n_, u, v)); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u) {
      for (int v = u + 1; v <= n_; ++v) {
        if (has_edge(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  int degree(int v) const {
    int d = 0;
    for (int w = 1; w <= n_; ++w) {
      if (w != v && has_edge(v, w)) ++d;
    }
    return d;
  }
  VertexSet neighbours(int v) const {
    VertexSet out = 0;
    for (int w = 1; w <= n_; ++w) {
      if (w != v && has_edge(v, w)) out |= vertex_bit(w);
    }
    return out;
  }

  /// Valencies sorted descending, e.g. {3,3,2,2,2,2}.
  std::vector<int> valency_sequence() const {
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v) out.push_back(degree(v));
    std::sort(out.rbegin(), out.rend());
    return out;
  }

  SmallGraph complement() const { return SmallGraph(n_, ~bits_ & pair_mask(n_)); }

  /// Relabels vertex v as perm[v-1] (perm is a permutation of 1..n).
  SmallGraph relabeled(std::span<const int> perm) const {
    SmallGraph out(n_);
    for (auto [u, v] : edges()) out.add_edge(perm[u - 1], perm[v - 1]);
    return out;
  }

  /// Induced subgraph on s, renumbered 1..|s| in ascending order.
  SmallGraph induced(VertexSet s) const {
    auto vs = vertices_of(s);
    SmallGraph out(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (has_edge(vs[i], vs[j])) out.add_edge(static_cast<int>(i + 1), static_cast<int>(j + 1));
      }
    }
    return out;
  }

  /// Edge-count distance between u and v (BFS); -1 when disconnected.
  int distance(int u, int v) const {
    if (u == v) return 0;
    VertexSet seen = vertex_bit(u), frontier = vertex_bit(u);
    for (int d = 1; frontier; ++d) {
      VertexSet next = 0;
      for (int w : vertices_of(frontier)) next |= neighbours(w);
      next &= ~seen;
      if (next & vertex_bit(v)) return d;
      seen |= next;
      frontier = next;
    }
    return -1;
  }

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  int n_ = 0;
  std::uint32_t bits_ = 0;
};

inline SmallGraph SimplicialComplex::one_skeleton() const {
  if (m_ > SmallGraph::kMaxN) {
    throw std::invalid_argument("SmallGraph form needs m <= 8; use edges() for m = " +
                                std::to_string(m_));
  }
  return SmallGraph(m_, edges());
}

inline SimplicialComplex SimplicialComplex::flag(const SmallGraph& g) {
  return flag(g.vertex_count(), g.edges());
}

/// The graph itself as a 1-dimensional complex.
inline SimplicialComplex graph_complex(const SmallGraph& g) {
  std::vector<std::vector<int>> facets;
  for (auto [u, v] : g.edges()) facets.push_back({u, v});
  return SimplicialComplex::from_facets(g.vertex_count(), facets);
}

}  // namespace mac
