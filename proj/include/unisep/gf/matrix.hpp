#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "unisep/gf/field.hpp"
#include "unisep/random.hpp"

namespace unisep::gf {

// Dense matrix over a prime field GF(p), p < 256.
//
// Storage is row-major. For p = 2 every row is a run of 64-bit words holding
// one entry per bit (bit j of a row lives in word j / 64 at position j % 64).
// For odd p every entry takes one byte; rows are still padded to whole words
// so both layouts share the same buffer type. Padding bits/bytes are always 0.
class Matrix {
 public:
  Matrix() = default;
  Matrix(unsigned prime, std::size_t rows, std::size_t cols);

  static Matrix identity(unsigned prime, std::size_t n);
  /// Entries are reduced mod p.
  static Matrix from_rows(unsigned prime, const std::vector<std::vector<int>>& rows);
  static Matrix from_rows(unsigned prime, std::initializer_list<std::initializer_list<int>> rows);
  static Matrix random(unsigned prime, std::size_t rows, std::size_t cols, Rng& rng);
  /// A uniformly random invertible n x n matrix (rejection sampling).
  static Matrix random_invertible(unsigned prime, std::size_t n, Rng& rng);

  unsigned prime() const noexcept { return prime_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool binary() const noexcept { return prime_ == 2; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  /// Number of 64-bit words per row.
  std::size_t stride() const noexcept { return stride_; }

  Elem operator()(std::size_t i, std::size_t j) const noexcept {
    if (prime_ == 2) return Elem((row(i)[j >> 6] >> (j & 63)) & 1u);
    return row_bytes(i)[j];
  }
  void set(std::size_t i, std::size_t j, Elem v) noexcept;

  std::uint64_t* row(std::size_t i) noexcept { return data_.data() + i * stride_; }
  const std::uint64_t* row(std::size_t i) const noexcept { return data_.data() + i * stride_; }
  std::uint8_t* row_bytes(std::size_t i) noexcept {
    return reinterpret_cast<std::uint8_t*>(row(i));
  }
  const std::uint8_t* row_bytes(std::size_t i) const noexcept {
    return reinterpret_cast<const std::uint8_t*>(row(i));
  }

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;
  std::size_t bytes() const noexcept { return data_.size() * sizeof(std::uint64_t); }

  void swap_rows(std::size_t i, std::size_t j) noexcept;
  /// Copies row src of other into row dst of *this (same prime and width).
  void copy_row_from(std::size_t dst, const Matrix& other, std::size_t src) noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

 private:
  unsigned prime_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Words needed for a row of `cols` entries over GF(p).
std::size_t row_stride(unsigned prime, std::size_t cols) noexcept;

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);

/// Standard product over GF(p); errors on shape or prime mismatch.
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& m, Elem c);
/// m + c*I.
Matrix add_scalar(const Matrix& m, Elem c);
Matrix transpose(const Matrix& m);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, std::uint64_t e);
Matrix block_diagonal(const std::vector<Matrix>& blocks);

Matrix select_rows(const Matrix& m, std::span<const std::size_t> rows);
Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols);
/// Rows of a stacked on top of rows of b.
Matrix vstack(const Matrix& a, const Matrix& b);

/// y = m * x for a column vector x given in row layout (one row of m.cols()).
void apply(const Matrix& m, const std::uint64_t* x, std::uint64_t* y);

}  // namespace unisep::gf
