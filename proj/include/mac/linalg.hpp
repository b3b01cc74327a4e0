#pragma once

// Dense exact linear algebra over a field policy. The matrices in this
// library are tiny (tens of rows), so everything is plain vectors and
// Gaussian elimination with a fixed pivot order: first nonzero coordinate,
// generators taken in the order they were supplied.

#include <cstddef>
#include <optional>
#include <vector>

namespace mac {

template <class F>
using Vec = std::vector<typename F::value_type>;

template <class F>
bool is_zero_vec(const F& field, const Vec<F>& v) {
  for (const auto& x : v) {
    if (!field.is_zero(x)) return false;
  }
  return true;
}

/// y += c * x
template <class F>
void axpy(const F& field, const typename F::value_type& c, const Vec<F>& x, Vec<F>& y) {
  if (field.is_zero(c)) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!field.is_zero(x[i])) y[i] = field.add(y[i], field.mul(c, x[i]));
  }
}

/// Span of an ordered list of generators in k^n. Each accepted generator is
/// kept in reduced form together with its expression in the original
/// generators, so membership queries also return coefficients.
template <class F>
class ColumnSpan {
 public:
  using value_type = typename F::value_type;

  ColumnSpan(F field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t generator_count() const { return generators_; }
  std::size_t rank() const { return rows_.size(); }

  /// Appends a generator; returns true when it enlarges the span.
  bool add(Vec<F> v) {
    Vec<F> combo(generators_ + 1, field_.zero());
    combo[generators_] = field_.one();
    ++generators_;
    for (auto& row : combos_) row.resize(generators_, field_.zero());
    reduce(v, combo);
    std::size_t pivot = 0;
    while (pivot < dim_ && field_.is_zero(v[pivot])) ++pivot;
    if (pivot == dim_) return false;
    auto scale = field_.inv(v[pivot]);
    for (auto& x : v) x = field_.mul(scale, x);
    for (auto& x : combo) x = field_.mul(scale, x);
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    pivots_.push_back(pivot);
    return true;
  }

  bool contains(Vec<F> target) const {
    Vec<F> combo(generators_, field_.zero());
    reduce(target, combo);
    return is_zero_vec(field_, target);
  }

  /// Coefficients c with sum_j c_j g_j = target, or nullopt. Deterministic:
  /// only accepted generators receive nonzero coefficients.
  std::optional<Vec<F>> solve(Vec<F> target) const {
    Vec<F> combo(generators_, field_.zero());
    reduce(target, combo);
    if (!is_zero_vec(field_, target)) return std::nullopt;
    for (auto& x : combo) x = field_.neg(x);
    return combo;
  }

 private:
  // Eliminates pivots in insertion order; each stored row vanishes at all
  // earlier pivots, so a single pass suffices. The same row operations are
  // applied to combo, in generator coordinates.
  void reduce(Vec<F>& v, Vec<F>& combo) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& c = v[pivots_[r]];
      if (field_.is_zero(c)) continue;
      auto factor = field_.neg(c);
      axpy(field_, factor, rows_[r], v);
      axpy(field_, factor, combos_[r], combo);
    }
  }

  F field_;
  std::size_t dim_;
  std::size_t generators_ = 0;
  std::vector<Vec<F>> rows_;
  std::vector<Vec<F>> combos_;
  std::vector<std::size_t> pivots_;
};

/// Basis of the null space of a rows x cols matrix (row-major), one vector
/// per free column of the reduced row echelon form, in column order.
template <class F>
std::vector<Vec<F>> kernel_basis(const F& field, std::vector<Vec<F>> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && field.is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    auto scale = field.inv(rows[r][c]);
    for (auto& x : rows[r]) x = field.mul(scale, x);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && !field.is_zero(rows[i][c])) axpy(field, field.neg(rows[i][c]), rows[r], rows[i]);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(cols, field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = field.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::size_t rank_of(const F& field, const std::vector<Vec<F>>& vectors, std::size_t dim) {
  ColumnSpan<F> span(field, dim);
  for (const auto& v : vectors) span.add(v);
  return span.rank();
}

}  // namespace mac
