#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "shellseq/matrix.hpp"

namespace shellseq {

template <class Field>
using FieldMatrix = Matrix<typename Field::Element>;

template <class Field>
FieldMatrix<Field> lift(const Field& f, const Matrix<int>& m) {
  FieldMatrix<Field> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = f.from_int(m(r, c));
  return out;
}

// Reduced row echelon form in place; returns the pivot column of each pivot
// row. Pivots are chosen deterministically: leftmost nonzero column, topmost
// unused row.
template <class Field>
std::vector<std::size_t> reduced_row_echelon(const Field& f, FieldMatrix<Field>& m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && f.is_zero(m(pr, col))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pr, c));
    const auto inv = f.div(f.one(), m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

template <class Field>
std::size_t rank(const Field& f, FieldMatrix<Field> m) {
  return reduced_row_echelon(f, m).size();
}

// Basis of the kernel of m, one vector per non-pivot column, in ascending
// column order. Each vector has length m.cols().
template <class Field>
std::vector<std::vector<typename Field::Element>> kernel_basis(const Field& f,
                                                               FieldMatrix<Field> m) {
  const std::size_t n = m.cols();
  const auto pivot_cols = reduced_row_echelon(f, m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<typename Field::Element>> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<typename Field::Element> v(n, f.zero());
    v[j] = f.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      v[pivot_cols[i]] = f.neg(m(i, j));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incremental echelon basis of a span, remembering how each stored column
// decomposes over the vectors that were accepted by insert(). Used both to
// grow bases deterministically and to express vectors in a chosen basis.
template <class Field>
class SpanSolver {
 public:
  SpanSolver(const Field& f, std::size_t ambient_dim) : f_(f), ambient_(ambient_dim) {}

  std::size_t dim() const { return cols_.size(); }
  std::size_t ambient_dim() const { return ambient_; }

  bool contains(const std::vector<typename Field::Element>& v) const {
    auto r = v;
    std::vector<typename Field::Element> coeffs(cols_.size(), f_.zero());
    reduce(r, coeffs);
    return all_zero(r);
  }

  // Adds v to the basis if it is independent of the current span; returns
  // whether it was added. Accepted vectors, in insertion order, form the
  // reference basis for express().
  bool insert(const std::vector<typename Field::Element>& v) {
    if (v.size() != ambient_) throw std::invalid_argument("vector has wrong length");
    auto r = v;
    std::vector<typename Field::Element> coeffs(cols_.size(), f_.zero());
    reduce(r, coeffs);
    std::size_t pivot = 0;
    while (pivot < ambient_ && f_.is_zero(r[pivot])) ++pivot;
    if (pivot == ambient_) return false;

    const std::size_t k = cols_.size();
    const auto inv = f_.div(f_.one(), r[pivot]);
    for (auto& x : r) x = f_.mul(x, inv);

    // r = inv*v - inv*sum_j coeffs[j]*cols_[j].value, rewritten over the
    // accepted basis
    std::vector<typename Field::Element> combo(k + 1, f_.zero());
    for (std::size_t j = 0; j < k; ++j) {
      if (f_.is_zero(coeffs[j])) continue;
      const auto cj = f_.mul(inv, coeffs[j]);
      for (std::size_t i = 0; i < k; ++i)
        combo[i] = f_.sub(combo[i], f_.mul(cj, cols_[j].combo[i]));
    }
    combo[k] = inv;

    // keep the basis fully reduced: clear the new pivot row everywhere else
    for (auto& col : cols_) {
      col.combo.resize(k + 1, f_.zero());
      const auto factor = col.value[pivot];
      if (f_.is_zero(factor)) continue;
      for (std::size_t i = 0; i < ambient_; ++i)
        col.value[i] = f_.sub(col.value[i], f_.mul(factor, r[i]));
      for (std::size_t i = 0; i <= k; ++i)
        col.combo[i] = f_.sub(col.combo[i], f_.mul(factor, combo[i]));
    }

    cols_.push_back(Column{std::move(r), std::move(combo), pivot});
    return true;
  }

  // Coordinates of v over the accepted vectors, or nullopt if v is outside
  // the span.
  std::optional<std::vector<typename Field::Element>> express(
      const std::vector<typename Field::Element>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector has wrong length");
    auto r = v;
    std::vector<typename Field::Element> coeffs(cols_.size(), f_.zero());
    reduce(r, coeffs);
    if (!all_zero(r)) return std::nullopt;
    std::vector<typename Field::Element> out(cols_.size(), f_.zero());
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (f_.is_zero(coeffs[j])) continue;
      for (std::size_t i = 0; i < cols_[j].combo.size(); ++i)
        out[i] = f_.add(out[i], f_.mul(coeffs[j], cols_[j].combo[i]));
    }
    return out;
  }

 private:
  struct Column {
    std::vector<typename Field::Element> value;  // echelon-reduced, pivot entry 1
    std::vector<typename Field::Element> combo;  // value = sum combo[i] * accepted[i]
    std::size_t pivot;
  };

  // One pass suffices: every stored column is zero at the pivots of all the
  // others, so subtractions never reintroduce cleared entries.
  void reduce(std::vector<typename Field::Element>& r,
              std::vector<typename Field::Element>& coeffs) const {
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      const auto factor = r[cols_[j].pivot];
      if (f_.is_zero(factor)) continue;
      coeffs[j] = factor;
      for (std::size_t i = 0; i < ambient_; ++i)
        r[i] = f_.sub(r[i], f_.mul(factor, cols_[j].value[i]));
    }
  }

  bool all_zero(const std::vector<typename Field::Element>& v) const {
    for (const auto& x : v)
      if (!f_.is_zero(x)) return false;
    return true;
  }

  Field f_;
  std::size_t ambient_;
  std::vector<Column> cols_;
};

}  // namespace shellseq
