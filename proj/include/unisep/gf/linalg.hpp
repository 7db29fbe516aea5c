#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "unisep/gf/matrix.hpp"
#include "unisep/gf/poly.hpp"

namespace unisep::gf {

/// Which end of a row is used as its pivot during row reduction.
enum class PivotOrder { Leading, Trailing };

struct Echelon {
  Matrix reduced;                   // rank x cols, fully reduced, pivot entries 1
  std::vector<std::size_t> pivots;  // pivot column of each row of `reduced`
};

/// Reduced row echelon form. With Trailing order the last nonzero entry of
/// each row is its pivot and columns are swept from right to left.
Echelon row_reduce(const Matrix& m, PivotOrder order = PivotOrder::Leading);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per row; ncols - rank rows.
Matrix nullspace(const Matrix& m);

Matrix mat_inverse(const Matrix& m);

/// Monic characteristic polynomial.
Poly char_poly(const Matrix& m);

/// The characteristic polynomial as the product of the polynomials of the
/// cyclic pieces found by Krylov iteration (each monic, product = char_poly).
std::vector<Poly> char_poly_factors(const Matrix& m);

/// f(m) by Horner evaluation.
Matrix eval_poly(const Poly& f, const Matrix& m);

// Growing basis of a subspace in semi-echelon form: each stored vector has a
// pivot entry equal to 1 at which every later vector is 0. Vectors are reduced
// against the stored ones in insertion order.
class EchelonBasis {
 public:
  EchelonBasis(unsigned prime, std::size_t ambient);

  unsigned prime() const noexcept { return prime_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return pivots_.size(); }
  std::size_t stride() const noexcept { return stride_; }
  bool full() const noexcept { return size() == ambient_; }

  /// Reduces v in place; returns true when the remainder is nonzero.
  bool reduce(std::uint64_t* v) const;
  /// Reduces v and appends the remainder if nonzero. v is clobbered.
  bool insert(std::uint64_t* v);

  const std::uint64_t* vector(std::size_t i) const noexcept {
    return rows_.data() + i * stride_;
  }
  std::size_t pivot(std::size_t i) const noexcept { return pivots_[i]; }
  bool is_pivot(std::size_t col) const noexcept { return pivot_mask_[col] != 0; }

  /// The stored vectors as the rows of a matrix.
  Matrix matrix() const;

 private:
  unsigned prime_;
  std::size_t ambient_;
  std::size_t stride_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint8_t> pivot_mask_;
};

}  // namespace unisep::gf
