#pragma once

// JSON documents: complex input, cochains, and the result payloads written
// by the command-line tool. Coefficients are strings ("-1", "2/3") so that
// rationals stay exact; vertices are 1-based.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "complex.hpp"
#include "field.hpp"
#include "hochster.hpp"
#include "massey.hpp"
#include "obstruction.hpp"
#include "oracle.hpp"

namespace mac::io {

using nlohmann::json;

/// Malformed document or argument.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Complex documents: {"m": 6, "facets": [[1,2], ...], "name": "..."}
// ---------------------------------------------------------------------------

struct ComplexDocument {
  int m = 0;
  std::vector<std::vector<int>> facets;
  std::string name;
};

inline ComplexDocument parse_complex_document(const json& j) {
  if (!j.is_object()) throw InputError("complex document must be a JSON object");
  if (!j.contains("m") || !j["m"].is_number_integer()) throw InputError("missing integer field 'm'");
  ComplexDocument doc;
  doc.m = j["m"].get<int>();
  if (j.contains("facets")) {
    if (!j["facets"].is_array()) throw InputError("'facets' must be an array of vertex lists");
    for (const auto& f : j["facets"]) {
      if (!f.is_array()) throw InputError("each facet must be an array of vertices");
      std::vector<int> facet;
      for (const auto& v : f) {
        if (!v.is_number_integer()) throw InputError("vertices must be integers");
        facet.push_back(v.get<int>());
      }
      doc.facets.push_back(std::move(facet));
    }
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("'name' must be a string");
    doc.name = j["name"].get<std::string>();
  }
  return doc;
}

inline SimplicialComplex build(const ComplexDocument& doc) {
  try {
    return SimplicialComplex::from_facets(doc.m, doc.facets);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline json to_json(const ComplexDocument& doc) {
  json j;
  j["m"] = doc.m;
  j["facets"] = doc.facets;
  if (!doc.name.empty()) j["name"] = doc.name;
  return j;
}

inline std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Fields and cochains
// ---------------------------------------------------------------------------

inline json to_json(const FieldSpec& f) {
  json j;
  switch (f.kind) {
    case FieldKind::gf2: j["kind"] = "gf2"; break;
    case FieldKind::gfp:
      j["kind"] = "gfp";
      j["modulus"] = f.modulus;
      break;
    case FieldKind::rational: j["kind"] = "rational"; break;
  }
  return j;
}

inline json set_json(VertexSet s) { return vertices_of(s); }

/// [{"support": [...], "simplex": [...], "coeff": "c"}, ...] by support then simplex.
template <class F>
json to_json(const F& field, const MultiCochain<F>& a) {
  json out = json::array();
  for (const auto& [j, piece] : a.pieces()) {
    for (const auto& [s, c] : piece.terms) {
      out.push_back({{"support", set_json(j)}, {"simplex", set_json(s)}, {"coeff", field.to_string(c)}});
    }
  }
  return out;
}

inline VertexSet set_from_json(const json& j, int m) {
  if (!j.is_array()) throw InputError("vertex set must be an array");
  VertexSet s = 0;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("vertices must be integers");
    int x = v.get<int>();
    if (x < 1 || x > m) throw InputError("vertex " + std::to_string(x) + " out of range");
    if (s & vertex_bit(x)) throw InputError("repeated vertex " + std::to_string(x));
    s |= vertex_bit(x);
  }
  return s;
}

/// Inverse of to_json for cochains; the degree is taken from the first term
/// (or `degree` when the list is empty).
template <class F>
MultiCochain<F> cochain_from_json(const F& field, const json& j, int m, int degree = 0) {
  if (!j.is_array()) throw InputError("cochain must be an array of terms");
  if (!j.empty()) {
    const auto& t = j.front();
    if (!t.is_object() || !t.contains("support") || !t.contains("simplex")) {
      throw InputError("cochain terms need 'support' and 'simplex'");
    }
    degree = total_degree(static_cast<int>(t["simplex"].size()) - 1, set_from_json(t["support"], m));
  }
  MultiCochain<F> out(degree);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("support") || !t.contains("simplex") || !t.contains("coeff")) {
      throw InputError("cochain terms need 'support', 'simplex' and 'coeff'");
    }
    VertexSet support = set_from_json(t["support"], m);
    VertexSet simplex = set_from_json(t["simplex"], m);
    std::string coeff = t["coeff"].is_string() ? t["coeff"].get<std::string>() : t["coeff"].dump();
    try {
      out.add_term(field, support, simplex, field.parse(coeff));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return out;
}

/// Compact class spec: support "1,2" and terms "1:1,3-4:-1/2" (simplex
/// vertices joined by '-', "empty" for the empty simplex).
template <class F>
MultiCochain<F> cochain_from_spec(const F& field, const std::string& support_text,
                                  const std::vector<std::string>& term_texts, int m) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == sep) {
        out.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  };
  auto vertex = [m](const std::string& s) {
    int v = 0;
    try {
      v = static_cast<int>(detail::parse_int(s));
    } catch (const std::exception&) {
      throw InputError("bad vertex '" + s + "'");
    }
    if (v < 1 || v > m) throw InputError("vertex " + s + " out of range");
    return v;
  };
  VertexSet support = 0;
  if (!support_text.empty()) {
    for (const auto& v : split(support_text, ',')) support |= vertex_bit(vertex(v));
  }
  std::vector<std::pair<VertexSet, typename F::value_type>> terms;
  for (const auto& text : term_texts) {
    for (const auto& term : split(text, ',')) {
      auto colon = term.find(':');
      if (colon == std::string::npos) throw InputError("cochain term '" + term + "' needs simplex:coeff");
      std::string simplex_text = term.substr(0, colon);
      VertexSet simplex = 0;
      if (simplex_text != "empty") {
        for (const auto& v : split(simplex_text, '-')) {
          int x = vertex(v);
          if (simplex & vertex_bit(x)) throw InputError("repeated vertex in '" + term + "'");
          simplex |= vertex_bit(x);
        }
      }
      try {
        terms.emplace_back(simplex, field.parse(term.substr(colon + 1)));
      } catch (const std::exception& e) {
        throw InputError("bad coefficient in '" + term + "': " + e.what());
      }
    }
  }
  if (terms.empty()) throw InputError("class spec has no cochain terms");
  int degree = total_degree(cardinality(terms.front().first) - 1, support);
  MultiCochain<F> out(degree);
  for (const auto& [s, c] : terms) {
    if (!is_subset(s, support)) throw InputError(set_to_string(s) + " is not inside the support");
    try {
      out.add_term(field, support, s, c);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Payloads
// ---------------------------------------------------------------------------

inline json to_json(const BettiTable& t, bool by_subset) {
  json j;
  j["m"] = t.m;
  json totals = json::array();
  for (const auto& [n, d] : t.total) totals.push_back({{"degree", n}, {"dim", d}});
  j["totals"] = totals;
  json card = json::array();
  for (const auto& [key, b] : t.by_cardinality) {
    card.push_back({{"size", key.first}, {"p", key.second}, {"betti", b}});
  }
  j["by_cardinality"] = card;
  if (by_subset) {
    json subs = json::array();
    for (const auto& e : t.entries) {
      subs.push_back({{"support", set_json(e.support)}, {"p", e.degree}, {"betti", e.betti}});
    }
    j["by_subset"] = subs;
  }
  return j;
}

template <class F>
json to_json(const F& field, const MasseyResult<F>& r) {
  json j;
  j["defined"] = r.defined;
  if (!r.defined) return j;
  j["omega"] = to_json(field, r.omega);
  j["omega_degree"] = r.omega.degree();
  j["omega_is_cocycle"] = r.omega_is_cocycle;
  json basis = json::array();
  for (const auto& c : r.indeterminacy_basis) basis.push_back(to_json(field, c.representative));
  j["indeterminacy_basis"] = basis;
  j["indeterminacy_dim"] = r.indeterminacy_basis.size();
  j["trivial"] = r.trivial;
  j["system"] = {{"a1", to_json(field, r.system.a1)},   {"a2", to_json(field, r.system.a2)},
                 {"a3", to_json(field, r.system.a3)},   {"a12", to_json(field, r.system.a12)},
                 {"a23", to_json(field, r.system.a23)}};
  return j;
}

inline json to_json(const CosetReport& c) {
  json j;
  j["samples"] = c.samples;
  j["escapes"] = c.escapes;
  j["indeterminacy_dim"] = c.indeterminacy_dim;
  j["difference_rank"] = c.difference_rank;
  j["spans_indeterminacy"] = c.spans_indeterminacy;
  j["distinct_classes"] = c.distinct_classes;
  j["coset_size"] = c.coset_size ? json(*c.coset_size) : json(nullptr);
  j["fully_enumerated"] = c.fully_enumerated;
  return j;
}

inline json to_json(const std::vector<DetectionHit>& hits) {
  json out = json::array();
  for (const auto& h : hits) {
    json iso = json::array();
    auto vs = vertices_of(h.subset);
    for (std::size_t i = 0; i < vs.size(); ++i) iso.push_back({vs[i], h.iso[i]});
    out.push_back({{"subset", set_json(h.subset)},
                   {"class", std::string(1, h.letter)},
                   {"class_index", h.class_index},
                   {"iso", iso}});
  }
  return out;
}

inline json edges_json(const SmallGraph& g) {
  json out = json::array();
  for (auto [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

inline json to_json(const WitnessTriple& w) {
  return {{"s1", set_json(w.s1)},
          {"s2", set_json(w.s2)},
          {"s3", set_json(w.s3)},
          {"trivial", w.trivial},
          {"indeterminacy_dim", w.indeterminacy_dim}};
}

inline json to_json(const VerificationReport& r, bool with_records) {
  json j;
  j["field"] = to_json(r.field);
  j["mode"] = to_string(r.mode);
  j["graphs"] = r.graphs;
  j["agreements"] = r.agreements;
  j["detected"] = r.detected;
  j["witnessed"] = r.witnessed;
  j["with_candidate_triple"] = r.with_candidate_triple;
  j["complement_has_perfect_matching"] = r.complement_has_perfect_matching;
  j["ok"] = r.ok();
  json bad = json::array();
  for (const auto* rec : r.disagreements()) {
    bad.push_back({{"graph", rec->graph},
                   {"edges", edges_json(SmallGraph(6, rec->graph))},
                   {"detected", rec->detected},
                   {"witness", rec->witness ? to_json(*rec->witness) : json(nullptr)}});
  }
  j["disagreements"] = bad;
  if (with_records) {
    json recs = json::array();
    for (const auto& rec : r.records) {
      recs.push_back({{"graph", rec.graph},
                      {"canonical", rec.canonical},
                      {"detected", rec.detected},
                      {"class_index", rec.class_index},
                      {"witness", rec.witness ? to_json(*rec.witness) : json(nullptr)},
                      {"agree", rec.agree}});
    }
    j["records"] = recs;
  }
  j["seconds"] = r.seconds;
  return j;
}

/// Plain-text summary: labeled graphs per obstruction class, then totals.
inline std::string summary_table(const VerificationReport& r) {
  const auto& cat = catalog();
  std::vector<std::size_t> labeled(cat.classes.size(), 0), witnessed(cat.classes.size(), 0);
  for (const auto& rec : r.records) {
    if (rec.class_index < 0) continue;
    ++labeled[static_cast<std::size_t>(rec.class_index)];
    witnessed[static_cast<std::size_t>(rec.class_index)] += rec.witness.has_value();
  }
  std::ostringstream out;
  out << "field " << r.field.name() << ", mode " << to_string(r.mode) << "\n";
  out << "class  valencies     labeled  witnessed\n";
  for (std::size_t i = 0; i < cat.classes.size(); ++i) {
    std::string v;
    for (int d : cat.classes[i].graph.valency_sequence()) v += std::to_string(d);
    char line[80];
    std::snprintf(line, sizeof line, "%-6c %-13s %7zu  %9zu\n", cat.classes[i].letter, v.c_str(), labeled[i],
                  witnessed[i]);
    out << line;
  }
  out << "graphs " << r.graphs << ", detected " << r.detected << ", witnessed " << r.witnessed
      << ", agreements " << r.agreements << ", disagreements " << r.graphs - r.agreements << "\n";
  out << "candidate triples " << r.with_candidate_triple << ", perfect matchings in complement "
      << r.complement_has_perfect_matching << "\n";
  out << (r.ok() ? "ok" : "DISAGREEMENT") << "\n";
  return out.str();
}

inline json to_json(const LemmaReport& r) {
  return {{"pairs_checked", r.pairs_checked},
          {"pairs_non_isomorphic", r.pairs_non_isomorphic},
          {"valencies_match", r.valencies_match},
          {"valency_separates_aef", r.valency_separates_aef},
          {"dg_valency24_adjacent_in_g_only", r.dg_valency24_adjacent_in_g_only},
          {"c_valency2_adjacent_bh_not", r.c_valency2_adjacent_bh_not},
          {"b_valency2_distance", r.b_valency2_distance},
          {"h_valency2_distance", r.h_valency2_distance},
          {"catalog_matches_drawings", r.catalog_matches_drawings},
          {"ok", r.ok()}};
}

/// The standard envelope written to stdout.
inline json result_document(const std::string& command, const std::vector<std::string>& args,
                            const std::optional<FieldSpec>& field, json payload,
                            const std::string& status = "ok") {
  json j;
  j["command"] = {{"name", command}, {"args", args}};
  j["field"] = field ? to_json(*field) : json(nullptr);
  j["payload"] = std::move(payload);
  j["status"] = status;
  return j;
}

inline json error_document(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace mac::io
