#pragma once

#include <cstddef>
#include <vector>

#include "barw/rational.hpp"

namespace barw {

// Dense integer matrix with arbitrary-precision entries.  Row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[a] += c * row[b]
  void add_row(std::size_t a, std::size_t b, const Int& c);
  // col[a] += c * col[b]
  void add_col(std::size_t a, std::size_t b, const Int& c);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

  IntMatrix transposed() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

// Determinant by fraction-free Bareiss elimination.  Used as an independent
// oracle for unimodularity checks; not on any homology code path.
Int determinant(const IntMatrix& a);

}  // namespace barw
