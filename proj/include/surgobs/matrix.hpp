#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "surgobs/rational.hpp"

namespace surgobs {

// Dense integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  bool is_symmetric() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Square symmetric integer matrix; the constructor rejects asymmetric input.
class SymIntMatrix {
 public:
  SymIntMatrix() = default;
  explicit SymIntMatrix(IntMatrix m);
  SymIntMatrix(std::initializer_list<std::initializer_list<long>> rows)
      : SymIntMatrix(IntMatrix(rows)) {}

  std::size_t size() const { return m_.rows(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const IntMatrix& matrix() const { return m_; }

  friend bool operator==(const SymIntMatrix&, const SymIntMatrix&) = default;

 private:
  IntMatrix m_;
};

// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

}  // namespace surgobs
