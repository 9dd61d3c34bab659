#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "fillscope/integer.hpp"

namespace fillscope {

using IntVector = std::vector<Integer>;

// Dense row-major integer matrix. Used where elimination needs random access
// (Smith normal form, lattice solves).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const;
  IntMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source,
                        const Integer& factor);
  // col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source,
                        const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);

// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

// Sparse column-major matrix with rows sorted within each column and no
// stored zeros. Boundary maps are kept in this form.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Integer>;
  using Column = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  const Column& column(std::size_t c) const { return columns_[c]; }
  // Replaces column c; entries may be unsorted and contain duplicates or
  // zeros, which are merged away.
  void set_column(std::size_t c, Column entries);

  Integer at(std::size_t r, std::size_t c) const;
  bool is_zero() const;

  IntMatrix to_dense() const;
  static SparseMatrix from_dense(const IntMatrix& m);

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace fillscope
