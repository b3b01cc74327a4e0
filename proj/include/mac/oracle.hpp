#pragma once

// Exhaustive verification over all labeled graphs on six vertices: for each
// graph, compare catalog detection against a direct search for a non-trivial
// triple Massey product of degree-3 classes. The Massey side never looks at
// the catalog.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "complex.hpp"
#include "field.hpp"
#include "hochster.hpp"
#include "massey.hpp"
#include "obstruction.hpp"

namespace mac {

enum class ComplexMode { graph, flag };

inline const char* to_string(ComplexMode mode) { return mode == ComplexMode::graph ? "graph" : "flag"; }

inline SimplicialComplex complex_for(const SmallGraph& g, ComplexMode mode) {
  return mode == ComplexMode::graph ? graph_complex(g) : SimplicialComplex::flag(g);
}

struct WitnessTriple {
  VertexSet s1 = 0, s2 = 0, s3 = 0;  // disjoint non-edges
  bool trivial = true;
  std::size_t indeterminacy_dim = 0;
};

/// Generator of H̃^0(K_S) for a non-edge S: chi_v for the smaller vertex v.
template <class F>
MultiCochain<F> pair_generator(const F& field, VertexSet s) {
  VertexSet v = s & (~s + 1);
  return MultiCochain<F>(basis_cochain(field, s, v));
}

/// Ordered triples of pairwise disjoint two-subsets of `within`, each a
/// non-edge of K, in lexicographic order of (S1, S2, S3).
inline std::vector<std::array<VertexSet, 3>> disjoint_non_edge_triples(const SimplicialComplex& k,
                                                                       VertexSet within) {
  std::vector<VertexSet> non_edges;
  auto vs = vertices_of(within & k.vertex_set());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      VertexSet e = vertex_bit(vs[i]) | vertex_bit(vs[j]);
      if (!k.contains(e)) non_edges.push_back(e);
    }
  }
  std::sort(non_edges.begin(), non_edges.end(), lex_less);
  std::vector<std::array<VertexSet, 3>> out;
  for (VertexSet a : non_edges) {
    for (VertexSet b : non_edges) {
      if (a & b) continue;
      for (VertexSet c : non_edges) {
        if ((a | b) & c) continue;
        out.push_back({a, b, c});
      }
    }
  }
  return out;
}

/// First ordered triple (S1, S2, S3) inside `within` whose generator classes
/// have a defined, non-trivial Massey product computed on the whole of K.
template <class F>
std::optional<WitnessTriple> massey_witness_search_in(const CochainModel<F>& model,
                                                      VertexSet within) {
  const auto& field = model.field();
  for (const auto& t : disjoint_non_edge_triples(model.complex(), within)) {
    auto a1 = pair_generator(field, t[0]);
    auto a2 = pair_generator(field, t[1]);
    auto a3 = pair_generator(field, t[2]);
    auto verdict = massey_is_trivial(model, a1, a2, a3);
    if (verdict && !*verdict) {
      auto full = detail::massey_from(model, a1, a2, a3, true);
      return WitnessTriple{t[0], t[1], t[2], full.trivial, full.indeterminacy_basis.size()};
    }
  }
  return std::nullopt;
}

template <class F>
std::optional<WitnessTriple> massey_witness_search(const SimplicialComplex& k, const F& field) {
  if (k.vertex_count() != 6) {
    throw std::invalid_argument("witness search expects a complex on 6 vertices, got m = " +
                                std::to_string(k.vertex_count()));
  }
  CochainModel<F> model(k, field);
  return massey_witness_search_in(model, k.vertex_set());
}

// ---------------------------------------------------------------------------
// Full sweep
// ---------------------------------------------------------------------------

struct GraphRecord {
  std::uint32_t graph = 0;           // edge bits, pair order (1,2),(1,3),...
  std::uint32_t canonical = 0;
  bool detected = false;
  int class_index = -1;
  std::optional<WitnessTriple> witness;
  bool has_candidate_triple = false;  // some disjoint non-edge triple exists
  bool agree = false;
};

struct VerificationReport {
  FieldSpec field;
  ComplexMode mode = ComplexMode::graph;
  std::size_t graphs = 0;
  std::size_t agreements = 0;
  std::size_t detected = 0;
  std::size_t witnessed = 0;
  std::size_t with_candidate_triple = 0;
  std::size_t complement_has_perfect_matching = 0;
  std::vector<GraphRecord> records;  // indexed by graph bits
  double seconds = 0;

  bool ok() const {
    return graphs == (1u << 15) && agreements == graphs &&
           with_candidate_triple == complement_has_perfect_matching;
  }
  std::vector<const GraphRecord*> disagreements() const {
    std::vector<const GraphRecord*> out;
    for (const auto& r : records) {
      if (!r.agree) out.push_back(&r);
    }
    return out;
  }
};

/// Independent combinatorial filter: three disjoint edges in the complement.
inline bool complement_has_perfect_matching(const SmallGraph& g) {
  auto c = g.complement();
  // match vertex 1 first, then the smallest unmatched vertex, recursively
  auto rec = [&c](auto&& self, VertexSet left) -> bool {
    if (left == 0) return true;
    int u = std::countr_zero(left) + 1;
    for (int v = u + 1; v <= 6; ++v) {
      if ((left & vertex_bit(v)) && c.has_edge(u, v) &&
          self(self, left & ~vertex_bit(u) & ~vertex_bit(v))) {
        return true;
      }
    }
    return false;
  };
  return rec(rec, full_set(6));
}

template <class F>
GraphRecord examine_graph(std::uint32_t bits, ComplexMode mode, const F& field) {
  SmallGraph g(6, bits);
  GraphRecord rec;
  rec.graph = bits;
  rec.canonical = canonical_form(g);
  auto k = complex_for(g, mode);
  auto hits = detect(k);
  rec.detected = !hits.empty();
  if (rec.detected) rec.class_index = hits.front().class_index;
  rec.has_candidate_triple = !disjoint_non_edge_triples(k, k.vertex_set()).empty();
  rec.witness = massey_witness_search(k, field);
  rec.agree = rec.detected == rec.witness.has_value();
  return rec;
}

/// Runs examine_graph on every graph; workers pull indices from a shared
/// counter and write into their own slot, so the report does not depend on
/// scheduling.
template <class F>
VerificationReport verify_theorem(const F& field, ComplexMode mode, unsigned jobs = 0) {
  auto start = std::chrono::steady_clock::now();
  constexpr std::uint32_t count = 1u << 15;
  VerificationReport report;
  report.field = field.spec();
  report.mode = mode;
  report.records.resize(count);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  catalog();  // build shared tables before the workers start
  std::atomic<std::uint32_t> next{0};
  auto worker = [&] {
    for (std::uint32_t i = next++; i < count; i = next++) {
      report.records[i] = examine_graph(i, mode, field);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (const auto& r : report.records) {
    ++report.graphs;
    report.agreements += r.agree;
    report.detected += r.detected;
    report.witnessed += r.witness.has_value();
    report.with_candidate_triple += r.has_candidate_triple;
    report.complement_has_perfect_matching += complement_has_perfect_matching(SmallGraph(6, r.graph));
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Re-deriving the obstruction graphs
// ---------------------------------------------------------------------------

struct DerivedObstruction {
  std::uint32_t form = 0;
  WitnessTriple witness;       // found on the canonical representative
  std::size_t labeled_count = 0;  // labeled graphs in this class
};

/// Canonical forms of all six-vertex graphs (as 1-dimensional complexes)
/// carrying a non-trivial Massey product of three degree-3 classes whose
/// supports cover all six vertices. The search runs on every labeled graph.
template <class F>
std::vector<DerivedObstruction> derive_minimal_obstructions(const F& field) {
  std::map<std::uint32_t, DerivedObstruction> found;
  for (std::uint32_t bits = 0; bits < (1u << 15); ++bits) {
    SmallGraph g(6, bits);
    auto k = graph_complex(g);
    auto w = massey_witness_search(k, field);
    if (!w) continue;
    if ((w->s1 | w->s2 | w->s3) != full_set(6)) continue;
    auto form = canonical_form(g);
    auto& entry = found[form];
    if (entry.labeled_count == 0) {
      entry.form = form;
      entry.witness = *massey_witness_search(graph_complex(SmallGraph(6, form)), field);
    }
    ++entry.labeled_count;
  }
  std::vector<DerivedObstruction> out;
  for (auto& [_, d] : found) out.push_back(d);
  return out;
}

// ---------------------------------------------------------------------------
// Sampled checks that are reported, not asserted
// ---------------------------------------------------------------------------

struct RetractionReport {
  std::size_t samples = 0;
  std::size_t with_hit = 0;
  std::size_t hit_confirmed = 0;  // a non-trivial product found inside the hit, on all of K
};

/// Random complexes on m vertices: whenever detection reports a hit on S, look
/// for a non-trivial product of classes supported in S, computed on all of K.
template <class F>
RetractionReport retraction_sample(const F& field, int m, std::size_t samples,
                                   std::uint64_t seed, double edge_probability = 0.6) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  RetractionReport r;
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= m; ++u) {
      for (int v = u + 1; v <= m; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    auto k = (rng() & 1) ? SimplicialComplex::flag(m, edges) : [&] {
      std::vector<std::vector<int>> facets;
      for (auto [u, v] : edges) facets.push_back({u, v});
      return SimplicialComplex::from_facets(m, facets);
    }();
    ++r.samples;
    auto hits = detect(k);
    if (hits.empty()) continue;
    ++r.with_hit;
    CochainModel<F> model(k, field);
    if (massey_witness_search_in(model, hits.front().subset)) ++r.hit_confirmed;
  }
  return r;
}

struct NonHomogeneousReport {
  std::size_t samples = 0;
  std::size_t defined = 0;
  std::size_t non_trivial = 0;
  std::size_t non_trivial_without_obstruction = 0;
};

/// Random linear combinations of degree-3 classes (several supports at once)
/// on random six-vertex graphs.
template <class F>
NonHomogeneousReport non_homogeneous_sample(const F& field, std::size_t samples,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  NonHomogeneousReport r;
  for (std::size_t i = 0; i < samples; ++i) {
    SmallGraph g(6, static_cast<std::uint32_t>(rng() & 0x7fff));
    auto k = graph_complex(g);
    CochainModel<F> model(k, field);
    auto basis = model.class_basis(3, [](VertexSet) { return true; });
    if (basis.empty()) continue;
    auto combo = [&] {
      MultiCochain<F> a(3);
      for (const auto& b : basis) a = add(field, std::move(a), scale(field, field.random(rng), b));
      return a;
    };
    ++r.samples;
    auto a1 = combo(), a2 = combo(), a3 = combo();
    auto verdict = massey_is_trivial(model, a1, a2, a3);
    if (!verdict) continue;
    ++r.defined;
    if (!*verdict) {
      ++r.non_trivial;
      if (detect(k).empty()) ++r.non_trivial_without_obstruction;
    }
  }
  return r;
}

}  // namespace mac
