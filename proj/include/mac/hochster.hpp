#pragma once

// The multigraded cochain model of the moment-angle complex Z_K: a cochain
// of total degree n is a finite sum of pieces, one per support J ⊆ [m], the
// piece on J being a simplicial cochain on K_J of degree n - |J| - 1.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cochain.hpp"
#include "complex.hpp"
#include "field.hpp"
#include "linalg.hpp"

namespace mac {

/// Total degree in Z_K of a simplicial degree-p cochain supported on J.
constexpr int total_degree(int p, VertexSet j) { return p + cardinality(j) + 1; }
/// Simplicial degree of the J-piece of a total degree-n cochain.
constexpr int piece_degree(int n, VertexSet j) { return n - cardinality(j) - 1; }

template <class F>
class MultiCochain {
 public:
  using value_type = typename F::value_type;
  using Piece = SimplicialCochain<F>;

  MultiCochain() = default;
  explicit MultiCochain(int n) : degree_(n) {}
  /// A single simplicial cochain viewed in Z_K.
  explicit MultiCochain(Piece piece) : degree_(total_degree(piece.degree, piece.support)) {
    if (!piece.is_zero()) pieces_.emplace(piece.support, std::move(piece));
  }

  int degree() const { return degree_; }
  bool is_zero() const { return pieces_.empty(); }
  const std::map<VertexSet, Piece>& pieces() const { return pieces_; }

  /// Union of the piece supports.
  VertexSet support_union() const {
    VertexSet u = 0;
    for (const auto& [j, _] : pieces_) u |= j;
    return u;
  }

  void add_piece(const F& field, const Piece& piece) {
    if (piece.is_zero()) return;
    if (piece.degree != piece_degree(degree_, piece.support)) {
      throw std::invalid_argument("piece on " + set_to_string(piece.support) + " has degree " +
                                  std::to_string(piece.degree) + ", expected " +
                                  std::to_string(piece_degree(degree_, piece.support)));
    }
    auto it = pieces_.find(piece.support);
    if (it == pieces_.end()) {
      pieces_.emplace(piece.support, piece);
      return;
    }
    it->second = add(field, std::move(it->second), piece);
    if (it->second.is_zero()) pieces_.erase(it);
  }

  void add_term(const F& field, VertexSet support, VertexSet simplex, const value_type& c) {
    add_piece(field, basis_cochain(field, support, simplex, c));
  }

  friend bool operator==(const MultiCochain&, const MultiCochain&) = default;

 private:
  int degree_ = 0;
  std::map<VertexSet, Piece> pieces_;
};

template <class F>
MultiCochain<F> add(const F& field, MultiCochain<F> a, const MultiCochain<F>& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("adding cochains of different degree");
  for (const auto& [j, piece] : b.pieces()) a.add_piece(field, piece);
  return a;
}

template <class F>
MultiCochain<F> scale(const F& field, const typename F::value_type& c, const MultiCochain<F>& a) {
  MultiCochain<F> out(a.degree());
  for (const auto& [j, piece] : a.pieces()) out.add_piece(field, scale(field, c, piece));
  return out;
}

template <class F>
MultiCochain<F> subtract(const F& field, MultiCochain<F> a, const MultiCochain<F>& b) {
  return add(field, std::move(a), scale(field, field.neg(field.one()), b));
}

// ---------------------------------------------------------------------------
// Signs
// ---------------------------------------------------------------------------

/// (-1)^(r-1) for j the r-th element of J.
inline int eps(int j, VertexSet jset) {
  if (!(jset & vertex_bit(j))) {
    throw std::invalid_argument("vertex " + std::to_string(j) + " is not in " + set_to_string(jset));
  }
  return rank_below(j, jset) % 2 == 0 ? 1 : -1;
}

/// Product of eps(j, J) over j in L.
inline int eps_set(VertexSet l, VertexSet jset) {
  if (!is_subset(l, jset)) {
    throw std::invalid_argument(set_to_string(l) + " is not a subset of " + set_to_string(jset));
  }
  int parity = 0;
  for (VertexSet rest = l; rest; rest &= rest - 1) {
    parity += rank_below(std::countr_zero(rest) + 1, jset);
  }
  return parity % 2 == 0 ? 1 : -1;
}

/// Coefficient c_{L∪M} of chi_L (on I) times chi_M (on J), I and J disjoint:
/// eps(L,I) eps(M,J) zeta eps(L∪M, I∪J), zeta = prod_{k in I\L} eps(k, {k} ∪ (J\M)).
inline int product_sign(VertexSet l, VertexSet i, VertexSet m, VertexSet j) {
  int parity = 0;
  auto add_ranks = [&parity](VertexSet members, VertexSet within) {
    for (VertexSet rest = members; rest; rest &= rest - 1) {
      parity += rank_below(std::countr_zero(rest) + 1, within);
    }
  };
  add_ranks(l, i);
  add_ranks(m, j);
  add_ranks(i & ~l, j & ~m);  // rank of k in {k} ∪ (J\M) counts J\M below k
  add_ranks(l | m, i | j);
  return parity % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Cochain-level operations
// ---------------------------------------------------------------------------

template <class F>
MultiCochain<F> cup_cochain(const SimplicialComplex& k, const F& field, const MultiCochain<F>& a,
                            const MultiCochain<F>& b) {
  MultiCochain<F> out(a.degree() + b.degree());
  for (const auto& [i, x] : a.pieces()) {
    for (const auto& [j, y] : b.pieces()) {
      if (i & j) continue;
      SimplicialCochain<F> piece{i | j, x.degree + y.degree + 1, {}};
      for (const auto& [l, u] : x.terms) {
        for (const auto& [m, w] : y.terms) {
          if (!k.contains(l | m)) continue;
          auto c = field.mul(u, w);
          piece.add_term(field, l | m, product_sign(l, i, m, j) > 0 ? c : field.neg(c));
        }
      }
      out.add_piece(field, piece);
    }
  }
  return out;
}

/// (-1)^(1+n) a for a of total degree n.
template <class F>
MultiCochain<F> bar(const F& field, const MultiCochain<F>& a) {
  return (a.degree() % 2 != 0) ? a : scale(field, field.neg(field.one()), a);
}

template <class F>
MultiCochain<F> total_coboundary(const SimplicialComplex& k, const F& field,
                                 const MultiCochain<F>& a) {
  MultiCochain<F> out(a.degree() + 1);
  for (const auto& [j, piece] : a.pieces()) out.add_piece(field, coboundary(k, field, piece));
  return out;
}

// ---------------------------------------------------------------------------
// CochainModel: a complex plus a field, with a cache of per-(J, p) summand
// solvers. Lookups are serialized by a mutex; summands are immutable once
// built, so returned references stay valid for the model's lifetime.
// ---------------------------------------------------------------------------

/// Coordinates of a class in H^n(Z_K): one coordinate vector per support J
/// with nonzero component.
template <class F>
using ClassCoordinates = std::map<VertexSet, Vec<F>>;

template <class F>
class CochainModel {
 public:
  using value_type = typename F::value_type;

  CochainModel(SimplicialComplex k, F field) : complex_(std::move(k)), field_(std::move(field)) {}
  CochainModel(const CochainModel&) = delete;
  CochainModel& operator=(const CochainModel&) = delete;

  const SimplicialComplex& complex() const { return complex_; }
  const F& field() const { return field_; }

  /// Simplicial summand H̃^p(K_J).
  const Summand<F>& summand(VertexSet j, int p) const {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(j, p);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, std::make_unique<Summand<F>>(complex_, field_, j, p)).first;
    }
    return *it->second;
  }

  MultiCochain<F> cup(const MultiCochain<F>& a, const MultiCochain<F>& b) const {
    return cup_cochain(complex_, field_, a, b);
  }
  MultiCochain<F> d(const MultiCochain<F>& a) const { return total_coboundary(complex_, field_, a); }

  bool is_cocycle(const MultiCochain<F>& a) const { return d(a).is_zero(); }

  /// Solves d(x) = target piecewise; nullopt when target is not a coboundary.
  std::optional<MultiCochain<F>> solve(const MultiCochain<F>& target) const {
    MultiCochain<F> x(target.degree() - 1);
    for (const auto& [j, piece] : target.pieces()) {
      auto y = summand(j, piece.degree).solve(piece);
      if (!y) return std::nullopt;
      x.add_piece(field_, *y);
    }
    return x;
  }

  bool is_coboundary(const MultiCochain<F>& a) const {
    for (const auto& [j, piece] : a.pieces()) {
      if (!summand(j, piece.degree).is_coboundary(piece)) return false;
    }
    return true;
  }

  /// Coordinates of the class of a cocycle; supports with zero component are
  /// omitted.
  ClassCoordinates<F> coordinates(const MultiCochain<F>& a) const {
    ClassCoordinates<F> out;
    for (const auto& [j, piece] : a.pieces()) {
      auto v = summand(j, piece.degree).coordinates(piece);
      if (!is_zero_vec(field_, v)) out.emplace(j, std::move(v));
    }
    return out;
  }

  /// Cocycle representing a class given by coordinates in degree n.
  MultiCochain<F> representative(int n, const ClassCoordinates<F>& coords) const {
    MultiCochain<F> out(n);
    for (const auto& [j, v] : coords) {
      const auto& s = summand(j, piece_degree(n, j));
      for (std::size_t i = 0; i < v.size(); ++i) {
        out.add_piece(field_, scale(field_, v[i], s.cocycle(i)));
      }
    }
    return out;
  }

  /// Cohomology basis of H^n(Z_K) restricted to supports accepted by filter,
  /// walking J in increasing mask order.
  std::vector<MultiCochain<F>> class_basis(int n,
                                           const std::function<bool(VertexSet)>& filter) const {
    std::vector<MultiCochain<F>> out;
    VertexSet all = complex_.vertex_set();
    // submasks of all in increasing order
    for (VertexSet j = 0;; j = (j - all) & all) {
      int p = piece_degree(n, j);
      if (p >= -1 && p <= complex_.dimension() && filter(j)) {
        const auto& s = summand(j, p);
        for (std::size_t i = 0; i < s.betti(); ++i) out.emplace_back(s.cocycle(i));
      }
      if (j == all) break;
    }
    return out;
  }

 private:
  SimplicialComplex complex_;
  F field_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<VertexSet, int>, std::unique_ptr<Summand<F>>> cache_;
};

// ---------------------------------------------------------------------------
// Classes
// ---------------------------------------------------------------------------

template <class F>
struct CohomologyClass {
  MultiCochain<F> representative;
  FieldSpec field;

  int degree() const { return representative.degree(); }
};

template <class F>
CohomologyClass<F> make_class(const CochainModel<F>& model, MultiCochain<F> rep) {
  if (!model.is_cocycle(rep)) {
    throw std::invalid_argument("class representative is not a cocycle");
  }
  return {std::move(rep), model.field().spec()};
}

template <class F>
CohomologyClass<F> cup_classes(const CochainModel<F>& model, const CohomologyClass<F>& a,
                               const CohomologyClass<F>& b) {
  if (a.field != model.field().spec() || b.field != model.field().spec()) {
    throw std::invalid_argument("field mismatch in cup product");
  }
  return make_class(model, model.cup(a.representative, b.representative));
}

/// Exact class comparison: a - b is a coboundary.
template <class F>
bool same_class(const CochainModel<F>& model, const MultiCochain<F>& a, const MultiCochain<F>& b) {
  return model.is_coboundary(subtract(model.field(), a, b));
}

/// Whether the class of target lies in the span of the given classes (all
/// cocycles of one degree). On success, coefficients are returned.
template <class F>
std::optional<Vec<F>> span_coefficients(const CochainModel<F>& model,
                                        const std::vector<MultiCochain<F>>& classes,
                                        const MultiCochain<F>& target) {
  const auto& field = model.field();
  std::vector<ClassCoordinates<F>> coords;
  for (const auto& c : classes) coords.push_back(model.coordinates(c));
  auto goal = model.coordinates(target);
  // flatten over the union of supports
  std::map<VertexSet, std::size_t> offset;
  std::size_t dim = 0;
  auto note = [&](const ClassCoordinates<F>& cc) {
    for (const auto& [j, v] : cc) {
      if (offset.emplace(j, dim).second) dim += v.size();
    }
  };
  for (const auto& cc : coords) note(cc);
  note(goal);
  auto flatten = [&](const ClassCoordinates<F>& cc) {
    Vec<F> out(dim, field.zero());
    for (const auto& [j, v] : cc) std::copy(v.begin(), v.end(), out.begin() + offset[j]);
    return out;
  };
  ColumnSpan<F> span(field, dim);
  for (const auto& cc : coords) span.add(flatten(cc));
  return span.solve(flatten(goal));
}

template <class F>
bool in_span(const CochainModel<F>& model, const std::vector<MultiCochain<F>>& classes,
             const MultiCochain<F>& target) {
  return span_coefficients(model, classes, target).has_value();
}

/// Greedy independent subset (mod coboundaries), keeping input order.
template <class F>
std::vector<MultiCochain<F>> independent_classes(const CochainModel<F>& model,
                                                 const std::vector<MultiCochain<F>>& classes) {
  std::vector<MultiCochain<F>> kept;
  for (const auto& c : classes) {
    if (model.is_coboundary(c)) continue;
    if (!kept.empty() && in_span(model, kept, c)) continue;
    kept.push_back(c);
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Betti table: dim H̃^p(K_J) for every J, and dim H^n(Z_K) by Hochster's
// decomposition n = p + |J| + 1.
// ---------------------------------------------------------------------------

struct BettiEntry {
  VertexSet support;
  int degree;  // simplicial p
  std::size_t betti;
};

struct BettiTable {
  int m = 0;
  std::vector<BettiEntry> entries;             // nonzero entries, by J then p
  std::map<int, std::size_t> total;            // n -> dim H^n(Z_K)
  std::map<std::pair<int, int>, std::size_t> by_cardinality;  // (|J|, p) -> sum

  std::size_t entry(VertexSet j, int p) const {
    for (const auto& e : entries) {
      if (e.support == j && e.degree == p) return e.betti;
    }
    return 0;
  }
  std::size_t dim(int n) const {
    auto it = total.find(n);
    return it == total.end() ? 0 : it->second;
  }
};

inline constexpr int kDefaultBettiCap = 16;

template <class F>
BettiTable betti_table(const SimplicialComplex& k, const F& field, int cap = kDefaultBettiCap) {
  if (k.vertex_count() > cap) {
    throw std::invalid_argument("betti table sums over 2^m subsets; m = " +
                                std::to_string(k.vertex_count()) + " exceeds the cap of " +
                                std::to_string(cap) + " (raise it explicitly if intended)");
  }
  BettiTable table;
  table.m = k.vertex_count();
  VertexSet all = full_set(k.vertex_count());
  for (VertexSet j = 0;; ++j) {
    for (int p = -1; p < cardinality(j); ++p) {
      Summand<F> s(k, field, j, p);
      if (s.betti() == 0) continue;
      table.entries.push_back({j, p, s.betti()});
      table.total[total_degree(p, j)] += s.betti();
      table.by_cardinality[{cardinality(j), p}] += s.betti();
    }
    if (j == all) break;
  }
  return table;
}

}  // namespace mac
