#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mtinv {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

// Dense matrix of arbitrary-precision integers, stored row-major.
//
// A matrix with m rows and n columns represents the map Z^n -> Z^m acting on
// column vectors. Zero-sized dimensions are allowed everywhere.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix scalar(std::size_t n, const Integer& value);
  static IntMatrix from_column(std::span<const Integer> column);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);
  static IntMatrix diagonal(std::span<const Integer> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  IntMatrix select_columns(std::size_t first, std::size_t count) const;
  IntMatrix select_rows(std::size_t first, std::size_t count) const;
  IntMatrix transpose() const;

  bool is_zero() const;
  bool is_identity() const;
  // 0/1 entries with exactly one 1 in every row and column.
  bool is_permutation() const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(std::span<const Integer> v) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  IntMatrix scaled(const Integer& k) const;

  bool operator==(const IntMatrix& rhs) const = default;

  // Row operations used by elimination routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += k * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& k);
  // col[target] += k * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

// [a | b], requires equal row counts.
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
// [a ; b], requires equal column counts.
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);
// k copies of m along the diagonal.
IntMatrix repeat_diagonal(const IntMatrix& m, std::size_t k);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace mtinv
