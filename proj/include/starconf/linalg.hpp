#pragma once

#include "starconf/field.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace starconf {

// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Coeff> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Coeff> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Coeff> values) {
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(data_[a * cols_ + k], data_[b * cols_ + k]);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

// Gaussian elimination in place. Row updates are accumulated without
// reduction and folded back before overflow is possible. Returns the pivot
// columns; afterwards rows [0, rank) hold a (reduced, if requested) echelon
// form with unit pivots and the remaining rows are zero.
inline std::vector<std::size_t> row_reduce(Matrix& m, const PrimeField& field, bool reduced) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::uint64_t p = field.modulus();
  const std::uint64_t safe = field.safe_accumulations();
  std::vector<std::uint64_t> pending(rows, 0);
  std::vector<std::size_t> pivots;
  auto fold = [&](std::size_t r) {
    for (auto& v : m.row(r)) v = field.reduce(v);
    pending[r] = 0;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pr = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      m(r, col) = field.reduce(m(r, col));
      if (m(r, col) != 0) {
        pr = r;
        break;
      }
    }
    if (pr == rows) continue;
    m.swap_rows(pr, rank);
    std::swap(pending[pr], pending[rank]);
    fold(rank);
    const Coeff inv = field.inv(m(rank, col));
    Coeff* piv = m.row(rank).data();
    for (std::size_t k = col; k < cols; ++k) piv[k] = field.mul(piv[k], inv);
    const std::size_t start = reduced ? 0 : rank + 1;
    for (std::size_t r = start; r < rows; ++r) {
      if (r == rank) continue;
      Coeff* row = m.row(r).data();
      const Coeff e = field.reduce(row[col]);
      row[col] = e;
      if (e == 0) continue;
      if (pending[r] >= safe) fold(r);
      const std::uint64_t factor = p - e;
      for (std::size_t k = col + 1; k < cols; ++k) row[k] += factor * piv[k];
      row[col] = 0;
      ++pending[r];
    }
    pivots.push_back(col);
    ++rank;
  }
  for (std::size_t r = 0; r < rows; ++r)
    if (pending[r] || r >= rank) fold(r);
  return pivots;
}

inline std::size_t rank(Matrix m, const PrimeField& field) {
  return row_reduce(m, field, false).size();
}

// A basis of the right kernel {v : m v = 0}; at most max_vectors vectors.
inline std::vector<std::vector<Coeff>> kernel_basis(Matrix m, const PrimeField& field,
                                                     std::size_t max_vectors = ~std::size_t{0}) {
  const auto pivots = row_reduce(m, field, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Coeff>> basis;
  for (std::size_t free = 0; free < m.cols() && basis.size() < max_vectors; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incrementally grown row space. Each stored row is reduced against all
// earlier rows, so reducing a vector by the rows in insertion order clears
// every pivot column.
class RowSpace {
 public:
  RowSpace(std::size_t width, const PrimeField& field) : width_(width), field_(field) {}

  std::size_t dimension() const { return pivots_.size(); }
  std::size_t width() const { return width_; }

  void reduce(std::vector<Coeff>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Coeff e = v[pivots_[k]];
      if (e == 0) continue;
      const Coeff factor = field_.neg(e);
      const auto& row = rows_[k];
      for (std::size_t j = pivots_[k]; j < width_; ++j)
        if (row[j]) v[j] = field_.add(v[j], field_.mul(factor, row[j]));
    }
  }

  // Adds v to the span; returns true when it was independent.
  bool insert(std::vector<Coeff> v) {
    reduce(v);
    std::size_t lead = 0;
    while (lead < width_ && v[lead] == 0) ++lead;
    if (lead == width_) return false;
    const Coeff inv = field_.inv(v[lead]);
    for (std::size_t j = lead; j < width_; ++j) v[j] = field_.mul(v[j], inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(lead);
    return true;
  }

  bool contains(std::vector<Coeff> v) const {
    reduce(v);
    for (auto c : v)
      if (c != 0) return false;
    return true;
  }

 private:
  std::size_t width_;
  PrimeField field_;
  std::vector<std::vector<Coeff>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace starconf
