#include "unisep/gf/linalg.hpp"

#include <algorithm>
#include <string>

#include "kernels.hpp"
#include "unisep/error.hpp"

namespace unisep::gf {

namespace {

// Eliminates column c from row i using pivot row r (pivot entry already 1).
// For GF(2) only the word range [w_lo, w_hi) can be touched.
inline void eliminate(Matrix& w, std::size_t i, std::size_t r, std::size_t c, std::size_t w_lo,
                      std::size_t w_hi) {
  if (w.binary()) {
    if (detail::test_bit(w.row(i), c)) detail::xor_words(w.row(i) + w_lo, w.row(r) + w_lo, w_hi - w_lo);
  } else {
    const Elem x = w.row_bytes(i)[c];
    if (x) detail::axpy_bytes(w.row_bytes(i), w.row_bytes(r), neg(x, w.prime()), w.cols(), w.prime());
  }
}

inline bool nonzero_at(const Matrix& w, std::size_t i, std::size_t c) {
  return w.binary() ? detail::test_bit(w.row(i), c) : w.row_bytes(i)[c] != 0;
}

inline void normalize_row(Matrix& w, std::size_t r, std::size_t c) {
  if (w.binary()) return;
  const Elem x = w.row_bytes(r)[c];
  if (x != 1) detail::scale_bytes(w.row_bytes(r), inv(x, w.prime()), w.cols(), w.prime());
}

}  // namespace

Echelon row_reduce(const Matrix& m, PivotOrder order) {
  Matrix w = m;
  std::vector<std::size_t> pivots;
  const std::size_t nr = w.rows(), nc = w.cols();
  std::size_t r = 0;
  for (std::size_t step = 0; step < nc && r < nr; ++step) {
    const std::size_t c = order == PivotOrder::Leading ? step : nc - 1 - step;
    std::size_t piv = r;
    while (piv < nr && !nonzero_at(w, piv, c)) ++piv;
    if (piv == nr) continue;
    w.swap_rows(piv, r);
    normalize_row(w, r, c);
    // Leading order: columns left of c are already clear in the pivot row.
    const std::size_t lo = order == PivotOrder::Leading ? c / 64 : 0;
    const std::size_t hi = order == PivotOrder::Leading ? w.stride() : c / 64 + 1;
    for (std::size_t i = 0; i < nr; ++i)
      if (i != r) eliminate(w, i, r, c, lo, hi);
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::size_t> keep(r);
  for (std::size_t i = 0; i < r; ++i) keep[i] = i;
  return {select_rows(w, keep), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  Matrix w = m;
  const std::size_t nr = w.rows(), nc = w.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && !nonzero_at(w, piv, c)) ++piv;
    if (piv == nr) continue;
    w.swap_rows(piv, r);
    normalize_row(w, r, c);
    for (std::size_t i = r + 1; i < nr; ++i) eliminate(w, i, r, c, c / 64, w.stride());
    ++r;
  }
  return r;
}

Matrix nullspace(const Matrix& m) {
  const auto [red, pivots] = row_reduce(m);
  const std::size_t nc = m.cols();
  std::vector<std::size_t> free_index(nc, nc);
  std::size_t nfree = 0;
  {
    std::vector<bool> is_pivot(nc, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < nc; ++c)
      if (!is_pivot[c]) free_index[c] = nfree++;
  }
  Matrix basis(m.prime(), nfree, nc);
  for (std::size_t c = 0; c < nc; ++c)
    if (free_index[c] != nc) basis.set(free_index[c], c, 1);
  const unsigned p = m.prime();
  for (std::size_t r = 0; r < red.rows(); ++r) {
    if (m.binary()) {
      const std::uint64_t* row = red.row(r);
      for (std::size_t c = detail::first_bit(row, nc); c < nc; c = detail::first_bit(row, nc, c + 1))
        if (free_index[c] != nc) basis.set(free_index[c], pivots[r], 1);
    } else {
      const std::uint8_t* row = red.row_bytes(r);
      for (std::size_t c = 0; c < nc; ++c)
        if (row[c] && free_index[c] != nc) basis.set(free_index[c], pivots[r], neg(row[c], p));
    }
  }
  return basis;
}

Matrix mat_inverse(const Matrix& m) {
  if (!m.square()) throw DimensionError("mat_inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix w = m;
  Matrix inv_m = Matrix::identity(m.prime(), n);
  const unsigned p = m.prime();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && !nonzero_at(w, piv, c)) ++piv;
    if (piv == n) throw SingularMatrix("mat_inverse: matrix is singular");
    w.swap_rows(piv, c);
    inv_m.swap_rows(piv, c);
    if (!m.binary()) {
      const Elem s = inv(w.row_bytes(c)[c], p);
      detail::scale_bytes(w.row_bytes(c), s, n, p);
      detail::scale_bytes(inv_m.row_bytes(c), s, n, p);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || !nonzero_at(w, i, c)) continue;
      if (m.binary()) {
        detail::xor_words(w.row(i), w.row(c), w.stride());
        detail::xor_words(inv_m.row(i), inv_m.row(c), w.stride());
      } else {
        const Elem f = neg(w.row_bytes(i)[c], p);
        detail::axpy_bytes(w.row_bytes(i), w.row_bytes(c), f, n, p);
        detail::axpy_bytes(inv_m.row_bytes(i), inv_m.row_bytes(c), f, n, p);
      }
    }
  }
  return inv_m;
}

Matrix Matrix::random_invertible(unsigned prime, std::size_t n, Rng& rng) {
  while (true) {
    Matrix m = random(prime, n, n, rng);
    if (rank(m) == n) return m;
  }
}

std::vector<Poly> char_poly_factors(const Matrix& m) {
  if (!m.square()) throw DimensionError("char_poly: matrix not square");
  const std::size_t n = m.rows();
  const unsigned p = m.prime();
  const bool bin = m.binary();
  std::vector<Poly> out;
  if (n == 0) return out;

  // Krylov iteration: spin standard basis vectors under m modulo the span of
  // the previous cycles, tracking each reduced vector as a combination of the
  // powers m^i e_j of the current cycle.
  const std::size_t vs = m.stride();
  const std::size_t cs = row_stride(p, n + 1);
  std::vector<std::uint64_t> basis(n * vs), coefs(n * cs);
  std::vector<std::size_t> pivots;
  std::vector<std::uint8_t> is_pivot(n, 0);
  std::vector<std::uint64_t> x(vs), y(vs), next(vs), c(cs);
  pivots.reserve(n);

  std::size_t next_free = 0;
  while (pivots.size() < n) {
    while (is_pivot[next_free]) ++next_free;
    const std::size_t start = pivots.size();
    std::fill(x.begin(), x.end(), 0);
    if (bin)
      detail::flip_bit(x.data(), next_free);
    else
      reinterpret_cast<std::uint8_t*>(x.data())[next_free] = 1;

    for (std::size_t k = 0;; ++k) {
      y = x;
      std::fill(c.begin(), c.end(), 0);
      if (bin)
        detail::flip_bit(c.data(), k);
      else
        reinterpret_cast<std::uint8_t*>(c.data())[k] = 1;

      for (std::size_t i = 0; i < pivots.size(); ++i) {
        const std::uint64_t* b = basis.data() + i * vs;
        if (bin) {
          if (!detail::test_bit(y.data(), pivots[i])) continue;
          detail::xor_words(y.data(), b, vs);
          if (i >= start) detail::xor_words(c.data(), coefs.data() + i * cs, cs);
        } else {
          auto* yb = reinterpret_cast<std::uint8_t*>(y.data());
          const Elem f = yb[pivots[i]];
          if (!f) continue;
          detail::axpy_bytes(yb, reinterpret_cast<const std::uint8_t*>(b), neg(f, p), n, p);
          if (i >= start)
            detail::axpy_bytes(reinterpret_cast<std::uint8_t*>(c.data()),
                               reinterpret_cast<const std::uint8_t*>(coefs.data() + i * cs), neg(f, p),
                               k + 1, p);
        }
      }

      const std::size_t piv = bin ? detail::first_bit(y.data(), n)
                                  : detail::first_nonzero_byte(reinterpret_cast<std::uint8_t*>(y.data()), n);
      if (piv == n) {
        std::vector<Elem> pc(k + 1);
        for (std::size_t i = 0; i <= k; ++i)
          pc[i] = bin ? Elem(detail::test_bit(c.data(), i)) : reinterpret_cast<std::uint8_t*>(c.data())[i];
        out.emplace_back(p, std::move(pc));
        break;
      }
      if (!bin) {
        auto* yb = reinterpret_cast<std::uint8_t*>(y.data());
        const Elem s = inv(yb[piv], p);
        detail::scale_bytes(yb, s, n, p);
        detail::scale_bytes(reinterpret_cast<std::uint8_t*>(c.data()), s, k + 1, p);
      }
      std::copy(y.begin(), y.end(), basis.begin() + std::ptrdiff_t(pivots.size() * vs));
      std::copy(c.begin(), c.end(), coefs.begin() + std::ptrdiff_t(pivots.size() * cs));
      pivots.push_back(piv);
      is_pivot[piv] = 1;
      apply(m, x.data(), next.data());
      std::swap(x, next);
    }
  }
  return out;
}

Poly char_poly(const Matrix& m) {
  Poly result = Poly::constant(m.prime(), 1);
  for (const auto& f : char_poly_factors(m)) result = result * f;
  return result;
}

Matrix eval_poly(const Poly& f, const Matrix& m) {
  if (f.prime() != m.prime()) throw PrimeMismatch("eval_poly: polynomial and matrix fields differ");
  if (!m.square()) throw DimensionError("eval_poly: matrix not square");
  const std::size_t n = m.rows();
  if (f.is_zero()) return Matrix(m.prime(), n, n);
  Matrix r = scaled(Matrix::identity(m.prime(), n), f.lead());
  for (int i = f.degree() - 1; i >= 0; --i) r = add_scalar(r * m, f[std::size_t(i)]);
  return r;
}

EchelonBasis::EchelonBasis(unsigned prime, std::size_t ambient)
    : prime_(prime), ambient_(ambient), stride_(row_stride(prime, ambient)), pivot_mask_(ambient, 0) {
  check_prime(prime);
}

bool EchelonBasis::reduce(std::uint64_t* v) const {
  if (prime_ == 2) {
    for (std::size_t i = 0; i < pivots_.size(); ++i)
      if (detail::test_bit(v, pivots_[i])) detail::xor_words(v, vector(i), stride_);
    return !detail::all_zero(v, stride_);
  }
  auto* vb = reinterpret_cast<std::uint8_t*>(v);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem f = vb[pivots_[i]];
    if (f)
      detail::axpy_bytes(vb, reinterpret_cast<const std::uint8_t*>(vector(i)), neg(f, prime_), ambient_,
                         prime_);
  }
  return detail::first_nonzero_byte(vb, ambient_) != ambient_;
}

bool EchelonBasis::insert(std::uint64_t* v) {
  if (!reduce(v)) return false;
  std::size_t piv;
  if (prime_ == 2) {
    piv = detail::first_bit(v, ambient_);
  } else {
    auto* vb = reinterpret_cast<std::uint8_t*>(v);
    piv = detail::first_nonzero_byte(vb, ambient_);
    if (vb[piv] != 1) detail::scale_bytes(vb, inv(vb[piv], prime_), ambient_, prime_);
  }
  rows_.insert(rows_.end(), v, v + stride_);
  pivots_.push_back(piv);
  pivot_mask_[piv] = 1;
  return true;
}

Matrix EchelonBasis::matrix() const {
  Matrix m(prime_, size(), ambient_);
  for (std::size_t i = 0; i < size(); ++i) std::copy(vector(i), vector(i) + stride_, m.row(i));
  return m;
}

}  // namespace unisep::gf
