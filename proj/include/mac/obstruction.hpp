#pragma once

// Small-graph canonical forms and the catalog of the eight six-vertex
// obstruction graphs, with detection of obstruction graphs among the
// six-vertex full subcomplexes of a complex's one-skeleton.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "field.hpp"

namespace mac {

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

struct CanonicalLabeling {
  std::uint32_t form = 0;   // minimal edge bitset over all relabelings
  std::vector<int> perm;    // vertex v of the input becomes perm[v-1] in the form
};

namespace detail {

// All permutations of 1..n with the induced action on pair indices.
struct PermutationTable {
  int n = 0;
  std::vector<std::vector<int>> perms;
  std::vector<std::vector<std::uint8_t>> pair_image;  // pair k -> pair index of its image

  explicit PermutationTable(int n_) : n(n_) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    int pairs = SmallGraph::pair_count(n);
    do {
      std::vector<std::uint8_t> img(pairs);
      for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
          img[SmallGraph::pair_index(n, u, v)] =
              static_cast<std::uint8_t>(SmallGraph::pair_index(n, p[u - 1], p[v - 1]));
        }
      }
      perms.push_back(p);
      pair_image.push_back(std::move(img));
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::uint32_t apply(std::size_t which, std::uint32_t bits) const {
    std::uint32_t out = 0;
    const auto& img = pair_image[which];
    for (; bits; bits &= bits - 1) out |= 1u << img[std::countr_zero(bits)];
    return out;
  }
};

template <int N>
const PermutationTable& permutation_table_for() {
  static const PermutationTable table(N);
  return table;
}

inline const PermutationTable& permutation_table(int n) {
  switch (n) {
    case 0: return permutation_table_for<0>();
    case 1: return permutation_table_for<1>();
    case 2: return permutation_table_for<2>();
    case 3: return permutation_table_for<3>();
    case 4: return permutation_table_for<4>();
    case 5: return permutation_table_for<5>();
    case 6: return permutation_table_for<6>();
    case 7: return permutation_table_for<7>();
    case 8: return permutation_table_for<8>();
  }
  throw std::invalid_argument("canonical forms need n <= 8, got " + std::to_string(n));
}

}  // namespace detail

/// Brute force over all n! relabelings.
inline CanonicalLabeling canonical_labeling(const SmallGraph& g) {
  const auto& table = detail::permutation_table(g.vertex_count());
  CanonicalLabeling best{~0u, {}};
  std::size_t arg = 0;
  for (std::size_t i = 0; i < table.perms.size(); ++i) {
    auto bits = table.apply(i, g.bits());
    if (bits < best.form) {
      best.form = bits;
      arg = i;
    }
  }
  best.perm = table.perms[arg];
  return best;
}

inline std::uint32_t canonical_form(const SmallGraph& g) { return canonical_labeling(g).form; }

inline bool is_isomorphic(const SmallGraph& g, const SmallGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (g.valency_sequence() != h.valency_sequence()) return false;
  return canonical_form(g) == canonical_form(h);
}

inline SmallGraph complement(const SmallGraph& g) { return g.complement(); }

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

/// One labeled graph per edge-optionality choice of the two template drawings.
struct Template {
  std::string name;  // "a", "a+15", "b+46", ...
  SmallGraph graph;
};

/// Template with "trivial indeterminacy": solid edges and three optional ones.
inline const std::vector<std::pair<int, int>>& template_a_solid() {
  static const std::vector<std::pair<int, int>> e{{1, 3}, {3, 5}, {2, 5}, {2, 4},
                                                  {4, 6}, {3, 6}, {1, 4}};
  return e;
}
inline const std::vector<std::pair<int, int>>& template_a_optional() {
  static const std::vector<std::pair<int, int>> e{{1, 5}, {1, 6}, {2, 6}};
  return e;
}
/// Template with "non-trivial indeterminacy": solid edges and one optional.
inline const std::vector<std::pair<int, int>>& template_b_solid() {
  static const std::vector<std::pair<int, int>> e{{2, 6}, {3, 6}, {3, 5}, {2, 5},
                                                  {2, 4}, {1, 4}, {1, 5}, {1, 6}};
  return e;
}
inline const std::vector<std::pair<int, int>>& template_b_optional() {
  static const std::vector<std::pair<int, int>> e{{4, 6}};
  return e;
}

inline std::vector<Template> build_templates() {
  std::vector<Template> out;
  auto expand = [&out](const std::string& base, const std::vector<std::pair<int, int>>& solid,
                       const std::vector<std::pair<int, int>>& optional) {
    for (unsigned mask = 0; mask < (1u << optional.size()); ++mask) {
      SmallGraph g(6, solid);
      std::string name = base;
      for (std::size_t i = 0; i < optional.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        g.add_edge(optional[i].first, optional[i].second);
        name += "+" + std::to_string(optional[i].first) + std::to_string(optional[i].second);
      }
      out.push_back({name, g});
    }
  };
  expand("a", template_a_solid(), template_a_optional());
  expand("b", template_b_solid(), template_b_optional());
  return out;
}

/// The eight obstruction graphs as drawn (letters a..h, row by row), vertex
/// labels 1..6 standing for the drawing's points a..f.
inline std::vector<SmallGraph> drawn_obstruction_graphs() {
  // points: a=1 b=2 c=3 d=4 e=5 f=6
  const std::vector<std::pair<int, int>> base{{6, 1}, {1, 2}, {2, 4}, {4, 5}, {5, 3}, {3, 1}, {6, 5}};
  auto with = [&](std::vector<std::pair<int, int>> extra, std::vector<std::pair<int, int>> drop) {
    SmallGraph g(6, base);
    for (auto [u, v] : drop) g.remove_edge(u, v);
    for (auto [u, v] : extra) g.add_edge(u, v);
    return g;
  };
  return {
      with({}, {}),                              // a
      with({{6, 2}}, {}),                        // b
      with({{6, 3}}, {}),                        // c
      with({{6, 2}, {6, 3}}, {}),                // d
      with({{6, 2}, {3, 4}}, {}),                // e
      with({{6, 2}, {6, 3}, {3, 4}}, {}),        // f
      with({{6, 2}, {6, 3}, {3, 4}}, {{6, 1}}),  // g
      with({{6, 2}, {6, 3}, {3, 4}}, {{6, 1}, {5, 3}}),  // h
  };
}

/// Valency sequences listed for the eight graphs, in letter order.
inline const std::vector<std::vector<int>>& listed_valencies() {
  static const std::vector<std::vector<int>> v{
      {3, 3, 2, 2, 2, 2}, {3, 3, 3, 3, 2, 2}, {3, 3, 3, 3, 2, 2}, {4, 3, 3, 3, 3, 2},
      {3, 3, 3, 3, 3, 3}, {4, 4, 3, 3, 3, 3}, {4, 3, 3, 3, 3, 2}, {3, 3, 3, 3, 2, 2}};
  return v;
}

struct ObstructionClass {
  char letter = '?';            // a..h
  std::uint32_t form = 0;       // canonical edge bitset
  SmallGraph graph;             // canonical representative (edge bits == form)
  std::vector<std::string> templates;  // template names collapsing onto this class
};

struct ObstructionCatalog {
  std::vector<Template> templates;
  std::vector<ObstructionClass> classes;  // ordered a..h

  /// Class index of a canonical form, or -1.
  int index_of(std::uint32_t form) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].form == form) return static_cast<int>(i);
    }
    return -1;
  }
};

/// Builds the catalog from the two template drawings and checks it: eight
/// classes, the listed valency multiset, agreement with the drawn graphs,
/// and the complement cross-check. Any failure throws InvariantError.
inline ObstructionCatalog build_catalog() {
  ObstructionCatalog cat;
  cat.templates = build_templates();
  std::map<std::uint32_t, std::vector<std::string>> forms;
  for (const auto& t : cat.templates) forms[canonical_form(t.graph)].push_back(t.name);
  if (forms.size() != 8) {
    throw InvariantError("template graphs collapse to " + std::to_string(forms.size()) +
                         " isomorphism classes, expected 8");
  }
  auto drawn = drawn_obstruction_graphs();
  for (std::size_t i = 0; i < drawn.size(); ++i) {
    if (drawn[i].valency_sequence() != listed_valencies()[i]) {
      throw InvariantError(std::string("drawn graph ") + static_cast<char>('a' + i) +
                           " does not have its listed valencies");
    }
    auto form = canonical_form(drawn[i]);
    auto it = forms.find(form);
    if (it == forms.end()) {
      throw InvariantError(std::string("drawn graph ") + static_cast<char>('a' + i) +
                           " matches no template class");
    }
    cat.classes.push_back({static_cast<char>('a' + i), form, SmallGraph(6, form), it->second});
  }
  std::set<std::uint32_t> distinct;
  for (const auto& c : cat.classes) distinct.insert(c.form);
  if (distinct.size() != 8) throw InvariantError("drawn graphs are not pairwise non-isomorphic");

  // complements of the templates are the path 1-..-6 plus chords
  SmallGraph path(6, std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  std::set<std::uint32_t> complement_a, complement_b;
  for (unsigned mask = 0; mask < 8; ++mask) {
    SmallGraph g = path;
    const std::pair<int, int> chords[] = {{2, 6}, {1, 6}, {1, 5}};
    for (int i = 0; i < 3; ++i) {
      if (mask & (1u << i)) g.add_edge(chords[i].first, chords[i].second);
    }
    complement_a.insert(canonical_form(g));
  }
  for (int with46 = 0; with46 < 2; ++with46) {
    SmallGraph g = path;
    g.add_edge(1, 3);
    if (with46) g.add_edge(4, 6);
    complement_b.insert(canonical_form(g));
  }
  for (const auto& t : cat.templates) {
    const auto& expected = t.name[0] == 'a' ? complement_a : complement_b;
    if (!expected.count(canonical_form(t.graph.complement()))) {
      throw InvariantError("complement of template " + t.name +
                           " is not one of the expected path-plus-chord graphs");
    }
  }
  return cat;
}

inline const ObstructionCatalog& catalog() {
  static const ObstructionCatalog cat = build_catalog();
  return cat;
}

namespace detail {
// Class index (or -1) for every labeled graph on six vertices.
inline const std::vector<std::int8_t>& six_vertex_lookup() {
  static const std::vector<std::int8_t> table = [] {
    std::vector<std::int8_t> t(1u << 15, -1);
    const auto& perms = permutation_table(6);
    const auto& cat = catalog();
    for (std::size_t c = 0; c < cat.classes.size(); ++c) {
      for (std::size_t i = 0; i < perms.perms.size(); ++i) {
        t[perms.apply(i, cat.classes[c].form)] = static_cast<std::int8_t>(c);
      }
    }
    return t;
  }();
  return table;
}
}  // namespace detail

/// Index of the catalog class of a six-vertex graph, or -1.
inline int obstruction_class(const SmallGraph& g) {
  if (g.vertex_count() != 6) return -1;
  return detail::six_vertex_lookup()[g.bits()];
}

// ---------------------------------------------------------------------------
// Detection
// ---------------------------------------------------------------------------

struct DetectionHit {
  VertexSet subset = 0;  // S, six vertices of K
  int class_index = -1;
  char letter = '?';
  /// iso[i] is the catalog vertex (1..6) that the i-th smallest vertex of S
  /// is sent to.
  std::vector<int> iso;
};

inline constexpr int kDetectMaxVertices = 26;

/// Induced one-skeleton on a six-subset S, renumbered 1..6 ascending.
inline SmallGraph induced_graph(const SimplicialComplex& k, VertexSet s) {
  auto vs = vertices_of(s);
  SmallGraph g(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (k.contains(vertex_bit(vs[i]) | vertex_bit(vs[j]))) {
        g.add_edge(static_cast<int>(i + 1), static_cast<int>(j + 1));
      }
    }
  }
  return g;
}

/// All six-vertex full subcomplexes whose one-skeleton is an obstruction
/// graph, in increasing subset order.
inline std::vector<DetectionHit> detect(const SimplicialComplex& k) {
  if (k.vertex_count() > kDetectMaxVertices) {
    throw std::invalid_argument("detect enumerates all 6-subsets; m = " +
                                std::to_string(k.vertex_count()) + " exceeds the limit of " +
                                std::to_string(kDetectMaxVertices));
  }
  std::vector<DetectionHit> hits;
  auto verts = vertices_of(k.vertex_set());
  int n = static_cast<int>(verts.size());
  if (n < 6) return hits;
  std::vector<VertexSet> subsets;
  std::array<int, 6> idx{0, 1, 2, 3, 4, 5};
  while (true) {
    VertexSet s = 0;
    for (int i : idx) s |= vertex_bit(verts[i]);
    subsets.push_back(s);
    int pos = 5;
    while (pos >= 0 && idx[pos] == n - 6 + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < 6; ++i) idx[i] = idx[i - 1] + 1;
  }
  std::sort(subsets.begin(), subsets.end());
  const auto& cat = catalog();
  for (VertexSet s : subsets) {
    auto g = induced_graph(k, s);
    int c = obstruction_class(g);
    if (c < 0) continue;
    auto lab = canonical_labeling(g);
    if (lab.form != cat.classes[c].form) throw InvariantError("lookup and canonical form disagree");
    hits.push_back({s, c, cat.classes[c].letter, lab.perm});
  }
  return hits;
}

// ---------------------------------------------------------------------------
// Lemma: pairwise non-isomorphism and the structural discriminators.
// ---------------------------------------------------------------------------

struct LemmaReport {
  std::size_t pairs_checked = 0;
  std::size_t pairs_non_isomorphic = 0;
  bool valencies_match = false;              // drawn graphs carry the listed valencies
  bool valency_separates_aef = false;        // a, e, f have unique valency multisets
  bool dg_valency24_adjacent_in_g_only = false;
  bool c_valency2_adjacent_bh_not = false;
  int b_valency2_distance = -1;
  int h_valency2_distance = -1;
  bool catalog_matches_drawings = false;

  bool ok() const {
    return pairs_checked == 28 && pairs_non_isomorphic == 28 && valencies_match &&
           valency_separates_aef && dg_valency24_adjacent_in_g_only && c_valency2_adjacent_bh_not &&
           b_valency2_distance == 2 && h_valency2_distance == 3 && catalog_matches_drawings;
  }
};

namespace detail {
inline std::vector<int> vertices_of_valency(const SmallGraph& g, int d) {
  std::vector<int> out;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (g.degree(v) == d) out.push_back(v);
  }
  return out;
}
}  // namespace detail

/// Runs the pairwise and structural checks on eight graphs given in letter
/// order a..h. Every check is an isomorphism invariant, so any labeling works.
inline LemmaReport lemma_report(const std::vector<SmallGraph>& g) {
  if (g.size() != 8) throw std::invalid_argument("lemma_report needs the eight graphs a..h");
  LemmaReport r;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      ++r.pairs_checked;
      if (!is_isomorphic(g[i], g[j])) ++r.pairs_non_isomorphic;
    }
  }
  r.valencies_match = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].valency_sequence() != listed_valencies()[i]) r.valencies_match = false;
  }
  auto unique_valency = [&](std::size_t i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j != i && g[j].valency_sequence() == g[i].valency_sequence()) return false;
    }
    return true;
  };
  r.valency_separates_aef = unique_valency(0) && unique_valency(4) && unique_valency(5);

  auto adjacent_24 = [](const SmallGraph& x) {
    auto two = detail::vertices_of_valency(x, 2);
    auto four = detail::vertices_of_valency(x, 4);
    return two.size() == 1 && four.size() == 1 && x.has_edge(two[0], four[0]);
  };
  const auto &b = g[1], &c = g[2], &d = g[3], &gg = g[6], &h = g[7];
  r.dg_valency24_adjacent_in_g_only = adjacent_24(gg) && !adjacent_24(d);

  auto adjacent_22 = [](const SmallGraph& x) {
    auto two = detail::vertices_of_valency(x, 2);
    return two.size() == 2 && x.has_edge(two[0], two[1]);
  };
  r.c_valency2_adjacent_bh_not = adjacent_22(c) && !adjacent_22(b) && !adjacent_22(h);

  auto distance_22 = [](const SmallGraph& x) {
    auto two = detail::vertices_of_valency(x, 2);
    return two.size() == 2 ? x.distance(two[0], two[1]) : -1;
  };
  r.b_valency2_distance = distance_22(b);
  r.h_valency2_distance = distance_22(h);
  return r;
}

/// The lemma checks on the catalog classes, plus agreement of the catalog
/// (built from the templates) with the drawn graphs letter by letter.
inline LemmaReport verify_lemma() {
  const auto& cat = catalog();
  std::vector<SmallGraph> graphs;
  for (const auto& c : cat.classes) graphs.push_back(c.graph);
  auto r = lemma_report(graphs);
  auto drawn = drawn_obstruction_graphs();
  r.catalog_matches_drawings = cat.classes.size() == drawn.size();
  for (std::size_t i = 0; i < drawn.size() && r.catalog_matches_drawings; ++i) {
    if (canonical_form(drawn[i]) != cat.classes[i].form) r.catalog_matches_drawings = false;
  }
  return r;
}

}  // namespace mac
