#pragma once

#include <klbt/scalars/cyclotomic.hpp>
#include <klbt/scalars/ratfunc.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace klbt {

// Pivot cost: cheaper entries keep the fill-in small. Units of Q[v, v^-1]
// (monomials) cost 0, so elimination by them never creates denominators.
inline std::size_t pivot_cost(const BigRational&) { return 0; }
inline std::size_t pivot_cost(const Cyclotomic& c) { return c.is_rational() ? 0 : c.cost(); }
inline std::size_t pivot_cost(const RationalFunction& f) {
  if (f.is_laurent() && f.num().num_coeffs() == 1) return 0;
  return f.cost();
}
inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }

// Incremental reduced row echelon form over an exact field F with dense rows of
// fixed width. Each stored row has a 1 in its pivot column and 0 in every other
// pivot column, so a vector reduces in one pass. The pivot of a new row is its
// cheapest entry (ties: lowest column), which keeps entries Laurent whenever a
// monomial entry exists; the choice is deterministic, so echelon forms are
// reproducible bit for bit.
template <class F>
class Echelon {
 public:
  explicit Echelon(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<F>& row(std::size_t i) const { return rows_[i].values; }
  std::size_t pivot_col(std::size_t i) const { return rows_[i].pivot; }

  // Reduces x in place against the stored rows.
  void reduce(std::vector<F>& x) const {
    for (const auto& r : rows_) {
      if (is_zero(x[r.pivot])) continue;
      const F c = x[r.pivot];
      for (std::size_t j : r.support) x[j] -= c * r.values[j];
    }
  }

  bool in_span(std::vector<F> x) const {
    reduce(x);
    for (const auto& e : x)
      if (!is_zero(e)) return false;
    return true;
  }

  // Adds x to the span; returns true when the rank grew.
  bool insert(std::vector<F> x) {
    reduce(x);
    std::size_t best = kNone, best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < width_; ++j) {
      if (is_zero(x[j])) continue;
      const std::size_t c = pivot_cost(x[j]);
      if (c < best_cost) {
        best = j;
        best_cost = c;
        if (c == 0) break;
      }
    }
    if (best == kNone) return false;
    const F inv = F(1) / x[best];
    Row nr;
    nr.pivot = best;
    for (std::size_t j = 0; j < width_; ++j) {
      if (is_zero(x[j])) continue;
      x[j] = j == best ? F(1) : x[j] * inv;
      nr.support.push_back(j);
    }
    nr.values = std::move(x);
    // Clear the new pivot column from existing rows.
    for (auto& r : rows_) {
      if (is_zero(r.values[best])) continue;
      const F c = r.values[best];
      for (std::size_t j : nr.support) r.values[j] -= c * nr.values[j];
      r.refresh_support();
    }
    rows_.push_back(std::move(nr));
    return true;
  }

  // Coordinates of x in terms of the inserted rows (RREF rows), if x is in the span.
  std::optional<std::vector<F>> solve(const std::vector<F>& x) const {
    std::vector<F> y = x, coeffs(rows_.size(), F(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) coeffs[i] = y[rows_[i].pivot];
    reduce(y);
    for (const auto& e : y)
      if (!is_zero(e)) return std::nullopt;
    return coeffs;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  struct Row {
    std::size_t pivot = kNone;
    std::vector<F> values;
    std::vector<std::size_t> support;
    void refresh_support() {
      support.clear();
      for (std::size_t j = 0; j < values.size(); ++j)
        if (!is_zero(values[j])) support.push_back(j);
    }
  };
  std::size_t width_;
  std::vector<Row> rows_;
};

// Solves A x = b exactly (A given by columns) when the solution is unique;
// returns nullopt when b is outside the column span or the columns are dependent.
template <class F>
std::optional<std::vector<F>> solve_unique(const std::vector<std::vector<F>>& columns, const std::vector<F>& b) {
  const std::size_t nrows = b.size(), k = columns.size();
  std::vector<std::vector<F>> m(nrows, std::vector<F>(k + 1, F(0)));
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = columns[j][i];
    m[i][k] = b[i];
  }
  // Gauss-Jordan, column by column, cheapest pivot within the column.
  std::size_t rank = 0;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t best = nrows, best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = rank; i < nrows; ++i) {
      if (is_zero(m[i][j])) continue;
      const std::size_t c = pivot_cost(m[i][j]);
      if (c < best_cost) {
        best = i;
        best_cost = c;
      }
    }
    if (best == nrows) return std::nullopt;  // free variable: not unique
    std::swap(m[rank], m[best]);
    const F inv = F(1) / m[rank][j];
    for (auto& e : m[rank]) e *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == rank || is_zero(m[i][j])) continue;
      const F c = m[i][j];
      for (std::size_t t = j; t <= k; ++t)
        if (!is_zero(m[rank][t])) m[i][t] -= c * m[rank][t];
    }
    ++rank;
  }
  for (std::size_t i = rank; i < nrows; ++i)
    if (!is_zero(m[i][k])) return std::nullopt;  // inconsistent
  std::vector<F> x(k, F(0));
  for (std::size_t j = 0; j < k; ++j) x[j] = m[j][k];
  return x;
}

}  // namespace klbt
