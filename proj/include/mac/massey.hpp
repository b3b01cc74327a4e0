#pragma once

// Triple Massey products <a1, a2, a3> in the cochain model of Z_K. The
// product is reported intensionally: one representative class [omega] and a
// basis of the indeterminacy subspace; the full set is [omega] + span.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hochster.hpp"

namespace mac {

template <class F>
struct DefiningSystem {
  MultiCochain<F> a1, a2, a3;
  MultiCochain<F> a12;  // d(a12) = bar(a1) a2
  MultiCochain<F> a23;  // d(a23) = bar(a2) a3
};

template <class F>
struct MasseyResult {
  bool defined = false;
  MultiCochain<F> omega;  // bar(a1) a23 + bar(a12) a3
  bool omega_is_cocycle = false;
  std::vector<CohomologyClass<F>> indeterminacy_basis;
  bool trivial = false;
  DefiningSystem<F> system;
};

/// bar(a1) a23 + bar(a12) a3
template <class F>
MultiCochain<F> massey_cocycle(const CochainModel<F>& model, const MultiCochain<F>& a1,
                               const MultiCochain<F>& a12, const MultiCochain<F>& a23,
                               const MultiCochain<F>& a3) {
  const auto& field = model.field();
  return add(field, model.cup(bar(field, a1), a23), model.cup(bar(field, a12), a3));
}

/// Basis of a1·H^{p2+p3-1} + H^{p1+p2-1}·a3 inside H^{p1+p2+p3-1}. Only
/// Hochster summands whose support misses some piece of a1 (resp. a3) can
/// multiply nontrivially, so only those are enumerated.
template <class F>
std::vector<CohomologyClass<F>> indeterminacy(const CochainModel<F>& model,
                                              const MultiCochain<F>& a1,
                                              const MultiCochain<F>& a3, int middle_degree) {
  int left_degree = a1.degree() + middle_degree - 1;   // p1 + p2 - 1
  int right_degree = middle_degree + a3.degree() - 1;  // p2 + p3 - 1
  auto misses_some_piece = [](const MultiCochain<F>& a) {
    return [&a](VertexSet j) {
      for (const auto& [i, _] : a.pieces()) {
        if ((i & j) == 0) return true;
      }
      return false;
    };
  };
  std::vector<MultiCochain<F>> products;
  if (!a1.is_zero()) {
    for (const auto& x : model.class_basis(right_degree, misses_some_piece(a1))) {
      products.push_back(model.cup(a1, x));
    }
  }
  if (!a3.is_zero()) {
    for (const auto& x : model.class_basis(left_degree, misses_some_piece(a3))) {
      products.push_back(model.cup(x, a3));
    }
  }
  std::vector<CohomologyClass<F>> out;
  for (auto& c : independent_classes(model, products)) {
    out.push_back({std::move(c), model.field().spec()});
  }
  return out;
}

template <class F>
std::vector<MultiCochain<F>> representatives(const std::vector<CohomologyClass<F>>& classes) {
  std::vector<MultiCochain<F>> out;
  for (const auto& c : classes) out.push_back(c.representative);
  return out;
}

namespace detail {

template <class F>
void require_class(const CochainModel<F>& model, const CohomologyClass<F>& a, const char* name) {
  if (a.field != model.field().spec()) {
    throw std::invalid_argument(std::string("field mismatch for ") + name);
  }
  if (!is_subset(a.representative.support_union(), model.complex().vertex_set())) {
    throw std::invalid_argument(std::string(name) + " is supported outside the complex");
  }
  if (!model.is_cocycle(a.representative)) {
    throw std::invalid_argument(std::string(name) + " representative is not a cocycle");
  }
}

/// Core construction from explicit cocycle representatives. Returns an
/// undefined result when either cup product is nonzero in cohomology.
template <class F>
MasseyResult<F> massey_from(const CochainModel<F>& model, const MultiCochain<F>& a1,
                            const MultiCochain<F>& a2, const MultiCochain<F>& a3,
                            bool with_indeterminacy) {
  const auto& field = model.field();
  MasseyResult<F> result;
  auto a12 = model.solve(model.cup(bar(field, a1), a2));
  if (!a12) return result;
  auto a23 = model.solve(model.cup(bar(field, a2), a3));
  if (!a23) return result;
  result.defined = true;
  result.system = {a1, a2, a3, std::move(*a12), std::move(*a23)};
  result.omega = massey_cocycle(model, a1, result.system.a12, result.system.a23, a3);
  result.omega_is_cocycle = model.is_cocycle(result.omega);
  if (!result.omega_is_cocycle) {
    throw InvariantError("Massey cocycle bar(a1)a23 + bar(a12)a3 is not closed");
  }
  if (model.is_coboundary(result.omega)) {
    result.trivial = true;
    if (!with_indeterminacy) return result;
  }
  result.indeterminacy_basis = indeterminacy(model, a1, a3, a2.degree());
  result.trivial = in_span(model, representatives(result.indeterminacy_basis), result.omega);
  return result;
}

}  // namespace detail

template <class F>
MasseyResult<F> triple_massey(const CochainModel<F>& model, const CohomologyClass<F>& c1,
                              const CohomologyClass<F>& c2, const CohomologyClass<F>& c3) {
  detail::require_class(model, c1, "a1");
  detail::require_class(model, c2, "a2");
  detail::require_class(model, c3, "a3");
  return detail::massey_from(model, c1.representative, c2.representative, c3.representative, true);
}

/// Triviality verdict only; skips the indeterminacy computation whenever
/// omega is already a coboundary.
template <class F>
std::optional<bool> massey_is_trivial(const CochainModel<F>& model, const MultiCochain<F>& a1,
                                      const MultiCochain<F>& a2, const MultiCochain<F>& a3) {
  auto r = detail::massey_from(model, a1, a2, a3, false);
  if (!r.defined) return std::nullopt;
  return r.trivial;
}

// ---------------------------------------------------------------------------
// Coset check: re-run the construction with perturbed representatives and
// perturbed defining systems; every outcome must stay in
// [omega] + span(indeterminacy).
// ---------------------------------------------------------------------------

struct CosetReport {
  std::size_t samples = 0;
  std::size_t escapes = 0;
  std::size_t indeterminacy_dim = 0;
  std::size_t difference_rank = 0;     // rank of the produced differences
  bool spans_indeterminacy = false;    // difference_rank == indeterminacy_dim
  std::size_t distinct_classes = 0;    // finite fields only
  std::optional<std::uint64_t> coset_size;  // |k|^dim when finite and small
  bool fully_enumerated = false;       // distinct_classes == coset_size
};

/// Thrown when a perturbed construction produces a class outside the coset.
class CosetEscape : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

namespace detail {

template <class F, class Rng>
MultiCochain<F> random_cochain(const CochainModel<F>& model, int n, Rng& rng) {
  const auto& k = model.complex();
  const auto& field = model.field();
  MultiCochain<F> out(n);
  VertexSet all = k.vertex_set();
  for (VertexSet j = 0;; j = (j - all) & all) {
    int p = piece_degree(n, j);
    if (p >= -1 && p <= k.dimension() && rng() % 3 == 0) {
      for (VertexSet s : k.faces_within(j, p + 1)) out.add_term(field, j, s, field.random(rng));
    }
    if (j == all) break;
  }
  return out;
}

/// Uniformly random combination of a cohomology basis in degree n, plus a
/// random coboundary.
template <class F, class Rng>
MultiCochain<F> random_cocycle(const CochainModel<F>& model, int n, Rng& rng) {
  const auto& field = model.field();
  MultiCochain<F> out = model.d(random_cochain(model, n - 1, rng));
  for (const auto& b : model.class_basis(n, [](VertexSet) { return true; })) {
    out = add(field, std::move(out), scale(field, field.random(rng), b));
  }
  return out;
}

template <class F>
std::string describe(const F& field, const MultiCochain<F>& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, piece] : a.pieces()) {
    for (const auto& [s, c] : piece.terms) {
      if (!first) os << " + ";
      os << field.to_string(c) << "*chi" << set_to_string(s) << "@" << set_to_string(j);
      first = false;
    }
  }
  return first ? "0" : os.str();
}

}  // namespace detail

template <class F>
CosetReport coset_check(const CochainModel<F>& model, const MasseyResult<F>& result,
                        std::size_t samples, std::uint64_t seed = 1) {
  if (!result.defined) throw std::invalid_argument("coset_check needs a defined Massey product");
  const auto& field = model.field();
  const auto& sys = result.system;
  auto basis = representatives(result.indeterminacy_basis);
  std::mt19937_64 rng(seed);

  CosetReport report;
  report.samples = samples;
  report.indeterminacy_dim = basis.size();

  std::set<std::vector<std::string>> seen;  // coordinates of produced classes
  std::vector<MultiCochain<F>> differences;
  for (std::size_t i = 0; i < samples; ++i) {
    // (i) representatives moved by random coboundaries
    auto a1 = add(field, sys.a1, model.d(detail::random_cochain(model, sys.a1.degree() - 1, rng)));
    auto a2 = add(field, sys.a2, model.d(detail::random_cochain(model, sys.a2.degree() - 1, rng)));
    auto a3 = add(field, sys.a3, model.d(detail::random_cochain(model, sys.a3.degree() - 1, rng)));
    auto a12 = model.solve(model.cup(bar(field, a1), a2));
    auto a23 = model.solve(model.cup(bar(field, a2), a3));
    if (!a12 || !a23) {
      throw CosetEscape("perturbed representatives lost definedness: a1 = " +
                        detail::describe(field, a1));
    }
    // (ii) defining system moved by random cocycles
    auto z12 = detail::random_cocycle(model, a12->degree(), rng);
    auto z23 = detail::random_cocycle(model, a23->degree(), rng);
    auto b12 = add(field, *a12, z12);
    auto b23 = add(field, *a23, z23);
    auto omega = massey_cocycle(model, a1, b12, b23, a3);
    if (!model.is_cocycle(omega)) throw InvariantError("perturbed Massey cochain is not closed");
    auto diff = subtract(field, omega, result.omega);
    if (!in_span(model, basis, diff)) {
      ++report.escapes;
      throw CosetEscape("class escaped the coset; perturbation z12 = " +
                        detail::describe(field, z12) + ", z23 = " + detail::describe(field, z23) +
                        ", omega = " + detail::describe(field, omega));
    }
    differences.push_back(diff);
    std::vector<std::string> key;
    for (const auto& [j, v] : model.coordinates(omega)) {
      key.push_back(std::to_string(j));
      for (const auto& x : v) key.push_back(field.to_string(x));
    }
    seen.insert(std::move(key));
  }
  report.difference_rank = independent_classes(model, differences).size();
  report.spans_indeterminacy = report.difference_rank == report.indeterminacy_dim;
  if (field.spec().kind != FieldKind::rational) {
    report.distinct_classes = seen.size();
    std::uint64_t q = field.spec().modulus, size = 1;
    bool small = true;
    for (std::size_t i = 0; i < basis.size() && small; ++i) {
      if (size > (std::uint64_t{1} << 40) / q) small = false;
      size *= q;
    }
    if (small) {
      report.coset_size = size;
      report.fully_enumerated = report.distinct_classes == size;
    }
  }
  return report;
}

}  // namespace mac
