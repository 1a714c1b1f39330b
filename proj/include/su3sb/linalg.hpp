#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "su3sb/fock.hpp"

namespace su3sb {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by Bareiss fraction-free elimination. Pivot: first nonzero entry
/// scanning columns left to right, rows top to bottom.
std::size_t fraction_free_rank(IntegerMatrix m);

/// Clears each row's denominators, then delegates to fraction_free_rank.
std::size_t rational_rank(const RationalMatrix& m);

template <Scalar S>
std::vector<std::vector<S>> gram_matrix(const std::vector<StateVector<S>>& states) {
  const std::size_t n = states.size();
  std::vector<std::vector<S>> g(n, std::vector<S>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      g[i][j] = inner_product(states[i], states[j]);
      g[j][i] = conj(g[i][j]);
    }
  }
  return g;
}

/// Exact rank of the Gram matrix of `states` (= dimension of their span).
std::size_t gram_rank_of(const std::vector<StateVector<Rational>>& states);

/// Coordinates c with Σ c_i basis[i] = target, or nullopt if target is outside
/// the span. Gauss-Jordan over the coefficient field; `basis` need not be independent.
template <Scalar S>
  requires requires(S x) { x / x; }
std::optional<std::vector<S>> solve_in_span(const std::vector<StateVector<S>>& basis, const StateVector<S>& target) {
  std::set<FockMonomial> support;
  for (const auto& v : basis) {
    for (const auto& [m, c] : v.terms()) {
      support.insert(m);
    }
  }
  for (const auto& [m, c] : target.terms()) {
    if (!support.contains(m)) {
      return std::nullopt;
    }
  }

  const std::size_t cols = basis.size();
  std::vector<std::vector<S>> rows;
  rows.reserve(support.size());
  for (const auto& m : support) {
    std::vector<S> row(cols + 1);
    for (std::size_t j = 0; j < cols; ++j) {
      row[j] = basis[j].coefficient(m);
    }
    row[cols] = target.coefficient(m);
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col].is_zero()) {
      ++p;
    }
    if (p == rows.size()) {
      continue;
    }
    std::swap(rows[p], rows[r]);
    S inv = S(Rational(1)) / rows[r][col];
    for (std::size_t j = col; j <= cols; ++j) {
      rows[r][j] *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) {
        continue;
      }
      S factor = rows[i][col];
      for (std::size_t j = col; j <= cols; ++j) {
        rows[i][j] -= factor * rows[r][j];
      }
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (!rows[i][cols].is_zero()) {
      return std::nullopt;
    }
  }
  std::vector<S> coords(cols);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    coords[pivot_cols[k]] = rows[k][cols];
  }
  return coords;
}

/// Indices of a maximal linearly independent subset, chosen greedily in input order.
template <Scalar S>
std::vector<std::size_t> independent_subset(const std::vector<StateVector<S>>& vectors) {
  std::vector<std::size_t> chosen;
  std::vector<StateVector<S>> basis;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].is_zero()) {
      continue;
    }
    if (!solve_in_span(basis, vectors[k])) {
      chosen.push_back(k);
      basis.push_back(vectors[k]);
    }
  }
  return chosen;
}

}  // namespace su3sb
