#pragma once

// Command-line front end. Every subcommand writes one JSON result document
// to `out`; failures write a JSON error object to `err`.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification
// disagreement, 3 internal invariant failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "io.hpp"
#include "mac.hpp"

namespace mac::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDisagreement = 2, kInvariant = 3 };

namespace detail {

struct FieldOptions {
  std::string name = "rational";
  std::uint32_t p = 0;
  void attach(CLI::App* app, const std::string& default_name) {
    name = default_name;
    app->add_option("--field", name, "gf2 | gfp (with --p) | gf<p> | rational")
        ->capture_default_str();
    app->add_option("--p", p, "prime modulus for --field gfp");
  }
  FieldSpec spec() const {
    try {
      return parse_field(name, p);
    } catch (const std::exception& e) {
      throw io::InputError(e.what());
    }
  }
};

struct ClassOptions {
  std::string json_text;
  std::string support;
  std::vector<std::string> terms;
  void attach(CLI::App* app, const std::string& name) {
    app->add_option("--" + name, json_text,
                    "class as a JSON cochain (list of {support, simplex, coeff}) or @file");
    app->add_option("--" + name + "-support", support, "support J of a single-piece class, e.g. 1,2");
    app->add_option("--" + name + "-cochain", terms, "terms simplex:coeff, e.g. 1:1 or 1-4:-1/2");
  }
  template <class F>
  MultiCochain<F> build(const F& field, int m, const std::string& name) const {
    if (!json_text.empty()) {
      std::string text = json_text[0] == '@' ? io::read_text(json_text.substr(1)) : json_text;
      return io::cochain_from_json(field, io::parse_json(text, "--" + name), m);
    }
    if (terms.empty()) throw io::InputError("class --" + name + " is missing");
    return io::cochain_from_spec(field, support, terms, m);
  }
};

inline SimplicialComplex load_complex(const std::string& path) {
  return io::build(io::parse_complex_document(io::parse_json(io::read_text(path), path)));
}

template <class F>
CohomologyClass<F> to_class(const CochainModel<F>& model, MultiCochain<F> rep,
                            const std::string& name) {
  try {
    return make_class(model, std::move(rep));
  } catch (const std::invalid_argument& e) {
    throw io::InputError("--" + name + ": " + e.what());
  }
}

}  // namespace detail

/// Parses args (without the program name) and runs one subcommand.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using nlohmann::json;
  CLI::App app{"Cohomology and triple Massey products of moment-angle complexes"};
  app.require_subcommand(1);

  std::string in_path;
  bool by_subset = false;
  int cap = kDefaultBettiCap;
  // one per subcommand, since each has its own default field
  detail::FieldOptions betti_field, cup_field, massey_field, verify_field, derive_field;
  detail::ClassOptions ca, cb, c1, c2, c3;
  std::size_t coset_samples = 0;
  std::uint64_t seed = 1;
  std::string mode_name = "graph";
  unsigned jobs = 0;
  bool summary_only = false;
  bool table = false;

  auto* betti = app.add_subcommand("betti", "bigraded Betti table via Hochster's decomposition");
  betti->add_option("--in", in_path, "complex document (JSON), '-' for stdin")->required();
  betti_field.attach(betti, "rational");
  betti->add_flag("--by-subset", by_subset, "list every nonzero H̃^p(K_J)");
  betti->add_option("--cap", cap, "largest m accepted")->capture_default_str();

  auto* cup = app.add_subcommand("cup", "product of two classes");
  cup->add_option("--in", in_path, "complex document")->required();
  cup_field.attach(cup, "rational");
  ca.attach(cup, "a");
  cb.attach(cup, "b");

  auto* massey = app.add_subcommand("massey", "triple Massey product <a1, a2, a3>");
  massey->add_option("--in", in_path, "complex document")->required();
  massey_field.attach(massey, "rational");
  c1.attach(massey, "a1");
  c2.attach(massey, "a2");
  c3.attach(massey, "a3");
  massey->add_option("--coset-samples", coset_samples, "run the perturbation coset check");
  massey->add_option("--seed", seed, "seed for --coset-samples")->capture_default_str();

  auto* detect_cmd = app.add_subcommand("detect", "obstruction graphs among 6-vertex full subcomplexes");
  detect_cmd->add_option("--in", in_path, "complex document")->required();

  auto* verify = app.add_subcommand("verify-theorem", "exhaustive sweep over all graphs on 6 vertices");
  verify_field.attach(verify, "gf2");
  verify->add_option("--mode", mode_name, "graph | flag")
      ->check(CLI::IsMember({"graph", "flag"}))
      ->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  verify->add_flag("--summary", summary_only, "omit the per-graph records");
  verify->add_flag("--table", table, "print a plain-text summary table instead of JSON");

  auto* derive = app.add_subcommand("derive-obstructions", "re-derive the obstruction graphs");
  derive_field.attach(derive, "gf2");

  auto* lemma = app.add_subcommand("verify-lemma", "pairwise non-isomorphism of the catalog");

  auto fail = [&err](const std::string& kind, const std::string& message, int code) {
    err << io::error_document(kind, message).dump() << "\n";
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), kUsage);
  }

  try {
    if (betti->parsed()) {
      auto k = detail::load_complex(in_path);
      auto spec = betti_field.spec();
      auto table = visit_field(spec, [&](const auto& f) {
        try {
          return betti_table(k, f, cap);
        } catch (const std::invalid_argument& e) {
          throw io::InputError(e.what());
        }
      });
      out << io::result_document("betti", args, spec, io::to_json(table, by_subset)).dump(2) << "\n";
      return kOk;
    }
    if (cup->parsed()) {
      auto k = detail::load_complex(in_path);
      auto spec = cup_field.spec();
      auto payload = visit_field(spec, [&](const auto& f) {
        CochainModel model(k, f);
        auto a = detail::to_class(model, ca.build(f, k.vertex_count(), "a"), "a");
        auto b = detail::to_class(model, cb.build(f, k.vertex_count(), "b"), "b");
        auto prod = cup_classes(model, a, b);
        json j;
        j["a"] = io::to_json(f, a.representative);
        j["b"] = io::to_json(f, b.representative);
        j["product"] = io::to_json(f, prod.representative);
        j["degree"] = prod.degree();
        j["zero_class"] = model.is_coboundary(prod.representative);
        return j;
      });
      out << io::result_document("cup", args, spec, payload).dump(2) << "\n";
      return kOk;
    }
    if (massey->parsed()) {
      auto k = detail::load_complex(in_path);
      auto spec = massey_field.spec();
      auto payload = visit_field(spec, [&](const auto& f) {
        CochainModel model(k, f);
        int m = k.vertex_count();
        auto a1 = detail::to_class(model, c1.build(f, m, "a1"), "a1");
        auto a2 = detail::to_class(model, c2.build(f, m, "a2"), "a2");
        auto a3 = detail::to_class(model, c3.build(f, m, "a3"), "a3");
        auto result = triple_massey(model, a1, a2, a3);
        auto j = io::to_json(f, result);
        if (coset_samples > 0 && result.defined) {
          j["coset_check"] = io::to_json(coset_check(model, result, coset_samples, seed));
        }
        return j;
      });
      out << io::result_document("massey", args, spec, payload).dump(2) << "\n";
      return kOk;
    }
    if (detect_cmd->parsed()) {
      auto k = detail::load_complex(in_path);
      std::vector<DetectionHit> hits;
      try {
        hits = detect(k);
      } catch (const std::invalid_argument& e) {
        throw io::InputError(e.what());
      }
      json payload{{"hits", io::to_json(hits)}, {"count", hits.size()}};
      out << io::result_document("detect", args, std::nullopt, payload).dump(2) << "\n";
      return kOk;
    }
    if (verify->parsed()) {
      auto spec = verify_field.spec();
      auto mode = mode_name == "flag" ? ComplexMode::flag : ComplexMode::graph;
      auto report = visit_field(spec, [&](const auto& f) { return verify_theorem(f, mode, jobs); });
      bool ok = report.ok();
      if (table) {
        out << io::summary_table(report);
      } else {
        out << io::result_document("verify-theorem", args, spec, io::to_json(report, !summary_only),
                                   ok ? "ok" : "disagreement")
                   .dump(2)
            << "\n";
      }
      if (!ok) {
        return fail("disagreement",
                    std::to_string(report.graphs - report.agreements) +
                        " graphs where detection and Massey witness search disagree",
                    kDisagreement);
      }
      return kOk;
    }
    if (derive->parsed()) {
      auto spec = derive_field.spec();
      auto derived = visit_field(spec, [](const auto& f) { return derive_minimal_obstructions(f); });
      const auto& cat = catalog();
      json graphs = json::array();
      bool matches = derived.size() == cat.classes.size();
      for (const auto& d : derived) {
        SmallGraph g(6, d.form);
        int idx = cat.index_of(d.form);
        if (idx < 0) matches = false;
        graphs.push_back({{"canonical", d.form},
                          {"edges", io::edges_json(g)},
                          {"valencies", g.valency_sequence()},
                          {"catalog_class", idx < 0 ? json(nullptr)
                                                    : json(std::string(1, cat.classes[idx].letter))},
                          {"labeled_count", d.labeled_count},
                          {"witness", io::to_json(d.witness)}});
      }
      json payload{{"count", derived.size()}, {"graphs", graphs}, {"matches_catalog", matches}};
      out << io::result_document("derive-obstructions", args, spec, payload,
                                 matches ? "ok" : "disagreement")
                 .dump(2)
          << "\n";
      if (!matches) return fail("disagreement", "derived graphs differ from the catalog", kDisagreement);
      return kOk;
    }
    if (lemma->parsed()) {
      auto report = verify_lemma();
      out << io::result_document("verify-lemma", args, std::nullopt, io::to_json(report),
                                 report.ok() ? "ok" : "disagreement")
                 .dump(2)
          << "\n";
      if (!report.ok()) return fail("disagreement", "lemma checks failed", kDisagreement);
      return kOk;
    }
  } catch (const io::InputError& e) {
    return fail("input", e.what(), kUsage);
  } catch (const InvariantError& e) {
    return fail("invariant", e.what(), kInvariant);
  } catch (const std::invalid_argument& e) {
    return fail("input", e.what(), kUsage);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kInvariant);
  }
  return fail("usage", "no subcommand", kUsage);
}

}  // namespace mac::cli
