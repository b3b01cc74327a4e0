#pragma once

// Reduced simplicial cochains on full subcomplexes K_J, the coboundary with
// the ascending-order sign convention, and cohomology of each K_J.

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "field.hpp"
#include "linalg.hpp"

namespace mac {

/// A p-cochain on K_J: sparse sum of c_L * chi_L over p-simplices L ⊆ J.
/// Terms are kept in lexicographic simplex order with no zero coefficients.
template <class F>
struct SimplicialCochain {
  using value_type = typename F::value_type;

  VertexSet support = 0;
  int degree = -1;
  std::vector<std::pair<VertexSet, value_type>> terms;

  bool is_zero() const { return terms.empty(); }

  /// Coefficient of chi_simplex (zero when absent).
  value_type coefficient(const F& field, VertexSet simplex) const {
    auto it = find(simplex);
    return it != terms.end() && it->first == simplex ? it->second : field.zero();
  }

  /// Adds c * chi_simplex, dropping the term if it cancels.
  void add_term(const F& field, VertexSet simplex, const value_type& c) {
    if (field.is_zero(c)) return;
    auto it = find(simplex);
    if (it != terms.end() && it->first == simplex) {
      it->second = field.add(it->second, c);
      if (field.is_zero(it->second)) terms.erase(it);
    } else {
      terms.insert(it, {simplex, c});
    }
  }

  friend bool operator==(const SimplicialCochain&, const SimplicialCochain&) = default;

 private:
  auto find(VertexSet simplex) const {
    return std::lower_bound(terms.begin(), terms.end(), simplex,
                            [](const auto& t, VertexSet s) { return lex_less(t.first, s); });
  }
  auto find(VertexSet simplex) {
    return std::lower_bound(terms.begin(), terms.end(), simplex,
                            [](const auto& t, VertexSet s) { return lex_less(t.first, s); });
  }
};

/// chi_L with coefficient c on K_J; L must be a simplex inside J.
template <class F>
SimplicialCochain<F> basis_cochain(const F& field, VertexSet support, VertexSet simplex,
                                   typename F::value_type c) {
  if (!is_subset(simplex, support)) {
    throw std::invalid_argument("simplex " + set_to_string(simplex) + " is not inside support " +
                                set_to_string(support));
  }
  SimplicialCochain<F> out{support, cardinality(simplex) - 1, {}};
  out.add_term(field, simplex, c);
  return out;
}

template <class F>
SimplicialCochain<F> basis_cochain(const F& field, VertexSet support, VertexSet simplex) {
  return basis_cochain(field, support, simplex, field.one());
}

template <class F>
SimplicialCochain<F> add(const F& field, SimplicialCochain<F> a, const SimplicialCochain<F>& b) {
  if (a.support != b.support || a.degree != b.degree) {
    throw std::invalid_argument("adding cochains of different support or degree");
  }
  for (const auto& [s, c] : b.terms) a.add_term(field, s, c);
  return a;
}

template <class F>
SimplicialCochain<F> scale(const F& field, typename F::value_type c, SimplicialCochain<F> a) {
  if (field.is_zero(c)) {
    a.terms.clear();
    return a;
  }
  for (auto& t : a.terms) t.second = field.mul(c, t.second);
  return a;
}

/// Sign of chi_{L ∪ v} in d(chi_L): (-1)^i with v the i-th (0-based) vertex of L ∪ v.
constexpr int coboundary_sign(VertexSet l, int v) { return rank_below(v, l) % 2 == 0 ? 1 : -1; }

/// d: C^p(K_J) -> C^{p+1}(K_J).
template <class F>
SimplicialCochain<F> coboundary(const SimplicialComplex& k, const F& field,
                                const SimplicialCochain<F>& a) {
  SimplicialCochain<F> out{a.support, a.degree + 1, {}};
  VertexSet avail = a.support & k.vertex_set();
  for (const auto& [l, c] : a.terms) {
    for (VertexSet rest = avail & ~l; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest) + 1;
      VertexSet up = l | vertex_bit(v);
      if (!k.contains(up)) continue;
      out.add_term(field, up, coboundary_sign(l, v) > 0 ? c : field.neg(c));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cohomology of one summand (K_J, degree p), with the solvers needed for
// coboundary equations and class coordinates.
// ---------------------------------------------------------------------------

template <class F>
class Summand {
 public:
  using value_type = typename F::value_type;

  Summand(const SimplicialComplex& k, const F& field, VertexSet support, int degree)
      : field_(field),
        support_(support),
        degree_(degree),
        lower_(degree >= 0 ? k.faces_within(support, degree) : std::vector<VertexSet>{}),
        cells_(k.faces_within(support, degree + 1)),
        boundaries_(field, cells_.size()),
        quotient_(field, cells_.size()) {
    if (degree < -1) throw std::invalid_argument("cochain degree must be >= -1");
    // d^{p-1} columns: images of the (p-1)-simplices
    for (VertexSet s : lower_) {
      auto col = to_dense(coboundary(k, field, basis_cochain(field, support, s)));
      boundaries_.add(col);
      quotient_.add(col);
    }
    // d^p as a matrix with one row per (p+1)-simplex
    auto upper = k.faces_within(support, degree + 2);
    std::vector<Vec<F>> rows(upper.size(), Vec<F>(cells_.size(), field.zero()));
    for (std::size_t j = 0; j < cells_.size(); ++j) {
      auto col = coboundary(k, field, basis_cochain(field, support, cells_[j]));
      for (const auto& [s, c] : col.terms) {
        auto it = std::lower_bound(upper.begin(), upper.end(), s, lex_less);
        rows[static_cast<std::size_t>(it - upper.begin())][j] = c;
      }
    }
    // only independent classes become generators, so coordinates line up
    // with cocycles_
    for (auto& z : kernel_basis(field, std::move(rows), cells_.size())) {
      if (quotient_.contains(z)) continue;
      quotient_.add(z);
      cocycles_.push_back(std::move(z));
    }
  }

  VertexSet support() const { return support_; }
  int degree() const { return degree_; }
  /// dim H̃^p(K_J)
  std::size_t betti() const { return cocycles_.size(); }
  std::size_t cochain_dim() const { return cells_.size(); }
  std::size_t boundary_rank() const { return boundaries_.rank(); }
  const std::vector<VertexSet>& cells() const { return cells_; }

  SimplicialCochain<F> cocycle(std::size_t i) const { return from_dense(cocycles_.at(i), degree_); }
  std::vector<SimplicialCochain<F>> cocycle_basis() const {
    std::vector<SimplicialCochain<F>> out;
    for (std::size_t i = 0; i < betti(); ++i) out.push_back(cocycle(i));
    return out;
  }
  /// Independent coboundaries spanning B^p, as d(chi_s) for the first
  /// (p-1)-simplices s that enlarge the span.
  std::vector<SimplicialCochain<F>> coboundary_basis(const SimplicialComplex& k) const {
    std::vector<SimplicialCochain<F>> out;
    ColumnSpan<F> span(field_, cells_.size());
    for (VertexSet s : lower_) {
      auto col = coboundary(k, field_, basis_cochain(field_, support_, s));
      if (span.add(to_dense(col))) out.push_back(std::move(col));
    }
    return out;
  }

  bool is_coboundary(const SimplicialCochain<F>& x) const { return boundaries_.contains(to_dense(x)); }

  /// Some y of degree p-1 with d(y) = x, or nullopt. Fixed pivot order makes
  /// the answer reproducible.
  std::optional<SimplicialCochain<F>> solve(const SimplicialCochain<F>& x) const {
    auto coeffs = boundaries_.solve(to_dense(x));
    if (!coeffs) return std::nullopt;
    SimplicialCochain<F> y{support_, degree_ - 1, {}};
    for (std::size_t i = 0; i < lower_.size(); ++i) y.add_term(field_, lower_[i], (*coeffs)[i]);
    return y;
  }

  /// Coordinates of the class of a cocycle x in the cocycle basis.
  Vec<F> coordinates(const SimplicialCochain<F>& x) const {
    auto coeffs = quotient_.solve(to_dense(x));
    if (!coeffs) throw InvariantError("coordinates requested for a non-cocycle on " +
                                      set_to_string(support_));
    return Vec<F>(coeffs->begin() + static_cast<std::ptrdiff_t>(lower_.size()), coeffs->end());
  }

  Vec<F> to_dense(const SimplicialCochain<F>& x) const {
    if (x.support != support_ || x.degree != degree_) {
      throw std::invalid_argument("cochain does not live in C^" + std::to_string(degree_) + "(K_" +
                                  set_to_string(support_) + ")");
    }
    Vec<F> out(cells_.size(), field_.zero());
    for (const auto& [s, c] : x.terms) {
      auto it = std::lower_bound(cells_.begin(), cells_.end(), s, lex_less);
      if (it == cells_.end() || *it != s) {
        throw std::invalid_argument(set_to_string(s) + " is not a simplex of K_" +
                                    set_to_string(support_));
      }
      out[static_cast<std::size_t>(it - cells_.begin())] = c;
    }
    return out;
  }

  SimplicialCochain<F> from_dense(const Vec<F>& v, int degree) const {
    SimplicialCochain<F> out{support_, degree, {}};
    for (std::size_t i = 0; i < cells_.size(); ++i) out.add_term(field_, cells_[i], v[i]);
    return out;
  }

 private:
  F field_;
  VertexSet support_;
  int degree_;
  std::vector<VertexSet> lower_;  // (p-1)-simplices in J
  std::vector<VertexSet> cells_;  // p-simplices in J
  ColumnSpan<F> boundaries_;      // columns of d^{p-1}
  ColumnSpan<F> quotient_;        // columns of d^{p-1}, then the cocycle basis
  std::vector<Vec<F>> cocycles_;
};

/// H̃^p(K_J) with explicit bases.
template <class F>
struct CohomologySummand {
  VertexSet support = 0;
  int degree = -1;
  std::size_t betti = 0;
  std::vector<SimplicialCochain<F>> cocycle_basis;
  std::vector<SimplicialCochain<F>> coboundary_basis;
};

template <class F>
CohomologySummand<F> cohomology(const SimplicialComplex& k, VertexSet j, int p, const F& field) {
  if (!is_subset(j, full_set(k.vertex_count()))) throw std::invalid_argument("J not inside [m]");
  Summand<F> s(k, field, j, p);
  return {j, p, s.betti(), s.cocycle_basis(), s.coboundary_basis(k)};
}

/// Solves d(x) = target on K_{target.support}; nullopt when target is not a
/// coboundary.
template <class F>
std::optional<SimplicialCochain<F>> solve_coboundary(const SimplicialComplex& k,
                                                     const SimplicialCochain<F>& target,
                                                     const F& field) {
  return Summand<F>(k, field, target.support, target.degree).solve(target);
}

}  // namespace mac
