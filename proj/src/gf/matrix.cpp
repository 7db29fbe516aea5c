#include "unisep/gf/matrix.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "kernels.hpp"
#include "unisep/error.hpp"

namespace unisep::gf {

namespace {

void require_same_prime(const Matrix& a, const Matrix& b, const char* op) {
  if (a.prime() != b.prime())
    throw PrimeMismatch(std::string(op) + ": operands over GF(" + std::to_string(a.prime()) +
                        ") and GF(" + std::to_string(b.prime()) + ")");
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  require_same_prime(a, b, op);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shape mismatch");
}

// In-place transpose of a 64x64 bit block stored as 64 words, LSB-first.
void transpose64(std::uint64_t* a) noexcept {
  std::uint64_t m = 0x00000000FFFFFFFFULL;
  for (unsigned j = 32; j != 0; j >>= 1, m ^= (m << j)) {
    for (unsigned k = 0; k < 64; k = ((k | j) + 1) & ~j) {
      std::uint64_t t = ((a[k] >> j) ^ a[k | j]) & m;
      a[k] ^= t << j;
      a[k | j] ^= t;
    }
  }
}

// dst (a row of dst_words words) ^= src bits placed at bit offset `off`.
void xor_bits_at(std::uint64_t* dst, std::size_t dst_words, std::size_t off,
                 const std::uint64_t* src, std::size_t nbits) noexcept {
  const std::size_t nw = (nbits + 63) / 64;
  const std::size_t w0 = off >> 6;
  const unsigned shift = unsigned(off & 63);
  if (shift == 0) {
    for (std::size_t i = 0; i < nw; ++i) dst[w0 + i] ^= src[i];
    return;
  }
  for (std::size_t i = 0; i < nw; ++i) {
    dst[w0 + i] ^= src[i] << shift;
    if (w0 + i + 1 < dst_words) dst[w0 + i + 1] ^= src[i] >> (64 - shift);
  }
}

// C = A * B over GF(2), naive row combination. Good for small row counts.
void mul_gf2_rows(const Matrix& a, const Matrix& b, Matrix& c) {
  const std::size_t nw = c.stride();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const std::uint64_t* ar = a.row(r);
    std::uint64_t* cr = c.row(r);
    for (std::size_t w = 0; w < a.stride(); ++w) {
      std::uint64_t bits = ar[w];
      while (bits) {
        std::size_t l = (w << 6) + std::size_t(std::countr_zero(bits));
        bits &= bits - 1;
        detail::xor_words(cr, b.row(l), nw);
      }
    }
  }
}

// C = A * B over GF(2), method of four Russians: for each word-column of A
// (64 rows of B) build eight 256-entry tables of row combinations, restricted
// to a stripe of output words so the tables stay cache-resident.
void mul_gf2_m4rm(const Matrix& a, const Matrix& b, Matrix& c) {
  constexpr std::size_t kStripe = 32;
  const std::size_t m = a.rows();
  const std::size_t k = a.cols();
  const std::size_t nw = c.stride();
  const std::size_t kw = a.stride();
  const std::size_t smax = std::min(kStripe, nw);
  std::vector<std::uint64_t> tab(8 * 256 * smax);

  for (std::size_t s0 = 0; s0 < nw; s0 += kStripe) {
    const std::size_t sw = std::min(kStripe, nw - s0);
    for (std::size_t g = 0; g < kw; ++g) {
      const std::size_t groups = std::min<std::size_t>(8, (k - 64 * g + 7) / 8);
      for (std::size_t t = 0; t < groups; ++t) {
        std::uint64_t* T = tab.data() + t * 256 * sw;
        std::fill(T, T + sw, 0);
        for (unsigned idx = 1; idx < 256; ++idx) {
          const std::size_t brow = 64 * g + 8 * t + std::size_t(std::countr_zero(idx));
          const std::uint64_t* prev = T + std::size_t(idx & (idx - 1)) * sw;
          std::uint64_t* cur = T + std::size_t(idx) * sw;
          if (brow < k) {
            const std::uint64_t* src = b.row(brow) + s0;
            for (std::size_t w = 0; w < sw; ++w) cur[w] = prev[w] ^ src[w];
          } else {
            std::copy(prev, prev + sw, cur);
          }
        }
      }
      for (std::size_t r = 0; r < m; ++r) {
        const std::uint64_t word = a.row(r)[g];
        if (!word) continue;
        std::uint64_t* dst = c.row(r) + s0;
        for (std::size_t t = 0; t < groups; ++t) {
          const unsigned byte = unsigned(word >> (8 * t)) & 255u;
          if (byte) detail::xor_words(dst, tab.data() + (t * 256 + byte) * sw, sw);
        }
      }
    }
  }
}

void mul_gfp(const Matrix& a, const Matrix& b, Matrix& c) {
  const unsigned p = a.prime();
  const std::size_t n = b.cols();
  std::vector<std::uint32_t> acc(n);
  // 250 * 250 * 68000 stays below 2^32; reduce early for wider inner dimensions.
  constexpr std::size_t kReduceEvery = 60000;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const std::uint8_t* ar = a.row_bytes(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const unsigned x = ar[l];
      if (x) {
        const std::uint8_t* br = b.row_bytes(l);
        for (std::size_t j = 0; j < n; ++j) acc[j] += x * br[j];
      }
      if ((l + 1) % kReduceEvery == 0)
        for (auto& v : acc) v %= p;
    }
    std::uint8_t* cr = c.row_bytes(i);
    for (std::size_t j = 0; j < n; ++j) cr[j] = Elem(acc[j] % p);
  }
}

}  // namespace

std::size_t row_stride(unsigned prime, std::size_t cols) noexcept {
  return prime == 2 ? (cols + 63) / 64 : (cols + 7) / 8;
}

Matrix::Matrix(unsigned prime, std::size_t rows, std::size_t cols)
    : prime_(prime), rows_(rows), cols_(cols), stride_(row_stride(prime, cols)) {
  check_prime(prime);
  data_.assign(rows_ * stride_, 0);
}

Matrix Matrix::identity(unsigned prime, std::size_t n) {
  Matrix m(prime, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(unsigned prime, const std::vector<std::vector<int>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(prime, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw DimensionError("from_rows: ragged rows");
    for (std::size_t j = 0; j < nc; ++j) {
      int v = rows[i][j] % int(prime);
      if (v < 0) v += int(prime);
      m.set(i, j, Elem(v));
    }
  }
  return m;
}

Matrix Matrix::from_rows(unsigned prime, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(prime, v);
}

Matrix Matrix::random(unsigned prime, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(prime, rows, cols);
  if (prime == 2) {
    const std::size_t tail = cols & 63;
    const std::uint64_t mask = tail ? (std::uint64_t(1) << tail) - 1 : ~std::uint64_t(0);
    for (std::size_t i = 0; i < rows; ++i) {
      std::uint64_t* r = m.row(i);
      for (std::size_t w = 0; w < m.stride_; ++w) r[w] = rng();
      if (m.stride_) r[m.stride_ - 1] &= mask;
    }
  } else {
    std::uniform_int_distribution<unsigned> dist(0, prime - 1);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.set(i, j, Elem(dist(rng)));
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Elem v) noexcept {
  if (prime_ == 2) {
    std::uint64_t& w = row(i)[j >> 6];
    const std::uint64_t bit = std::uint64_t(1) << (j & 63);
    if (v & 1u)
      w |= bit;
    else
      w &= ~bit;
  } else {
    row_bytes(i)[j] = v;
  }
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Matrix::is_identity() const noexcept {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) noexcept {
  if (i == j) return;
  std::swap_ranges(row(i), row(i) + stride_, row(j));
}

void Matrix::copy_row_from(std::size_t dst, const Matrix& other, std::size_t src) noexcept {
  std::copy(other.row(src), other.row(src) + stride_, row(dst));
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
  return a.prime_ == b.prime_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix c = a;
  if (a.binary()) {
    for (std::size_t i = 0; i < a.rows(); ++i) detail::xor_words(c.row(i), b.row(i), a.stride());
  } else {
    for (std::size_t i = 0; i < a.rows(); ++i)
      detail::axpy_bytes(c.row_bytes(i), b.row_bytes(i), 1, a.cols(), a.prime());
  }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "sub");
  if (a.binary()) return a + b;
  Matrix c = a;
  const Elem minus_one = Elem(a.prime() - 1);
  for (std::size_t i = 0; i < a.rows(); ++i)
    detail::axpy_bytes(c.row_bytes(i), b.row_bytes(i), minus_one, a.cols(), a.prime());
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_prime(a, b, "mat_mul");
  if (a.cols() != b.rows())
    throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix c(a.prime(), a.rows(), b.cols());
  if (c.empty() || a.cols() == 0) return c;
  if (!a.binary())
    mul_gfp(a, b, c);
  else if (a.rows() < 128)
    mul_gf2_rows(a, b, c);
  else
    mul_gf2_m4rm(a, b, c);
  return c;
}

Matrix scaled(const Matrix& m, Elem c) {
  c = Elem(c % m.prime());
  if (c == 1) return m;
  if (c == 0) return Matrix(m.prime(), m.rows(), m.cols());
  Matrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i) detail::scale_bytes(r.row_bytes(i), c, m.cols(), m.prime());
  return r;
}

Matrix add_scalar(const Matrix& m, Elem c) {
  if (!m.square()) throw DimensionError("add_scalar: matrix not square");
  c = Elem(c % m.prime());
  Matrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i) r.set(i, i, add(r(i, i), c, m.prime()));
  return r;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.prime(), m.cols(), m.rows());
  if (!m.binary()) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const std::uint8_t* r = m.row_bytes(i);
      for (std::size_t j = 0; j < m.cols(); ++j) t.row_bytes(j)[i] = r[j];
    }
    return t;
  }
  std::uint64_t block[64];
  const std::size_t rb = (m.rows() + 63) / 64;
  const std::size_t cb = m.stride();
  for (std::size_t bi = 0; bi < rb; ++bi) {
    for (std::size_t bj = 0; bj < cb; ++bj) {
      for (std::size_t r = 0; r < 64; ++r) {
        const std::size_t row = 64 * bi + r;
        block[r] = row < m.rows() ? m.row(row)[bj] : 0;
      }
      transpose64(block);
      for (std::size_t r = 0; r < 64; ++r) {
        const std::size_t row = 64 * bj + r;
        if (row >= t.rows()) break;
        t.row(row)[bi] = block[r];
      }
    }
  }
  return t;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_prime(a, b, "kronecker");
  Matrix k(a.prime(), a.rows() * b.rows(), a.cols() * b.cols());
  const unsigned p = a.prime();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      const std::size_t out = i * b.rows() + r;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const Elem x = a(i, j);
        if (!x) continue;
        if (p == 2) {
          xor_bits_at(k.row(out), k.stride(), j * b.cols(), b.row(r), b.cols());
        } else {
          std::uint8_t* dst = k.row_bytes(out) + j * b.cols();
          const std::uint8_t* src = b.row_bytes(r);
          for (std::size_t c = 0; c < b.cols(); ++c) dst[c] = mul(x, src[c], p);
        }
      }
    }
  }
  return k;
}

Matrix power(const Matrix& m, std::uint64_t e) {
  if (!m.square()) throw DimensionError("power: matrix not square");
  Matrix result = Matrix::identity(m.prime(), m.rows());
  Matrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix(2, 0, 0);
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) {
    require_same_prime(blocks.front(), b, "block_diagonal");
    nr += b.rows();
    nc += b.cols();
  }
  Matrix m(blocks.front().prime(), nr, nc);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m.set(r0 + i, c0 + j, b(i, j));
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

Matrix select_rows(const Matrix& m, std::span<const std::size_t> rows) {
  Matrix r(m.prime(), rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) r.copy_row_from(i, m, rows[i]);
  return r;
}

Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols) {
  Matrix r(m.prime(), m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.binary()) {
      const std::uint64_t* src = m.row(i);
      std::uint64_t* dst = r.row(i);
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (detail::test_bit(src, cols[j])) detail::flip_bit(dst, j);
    } else {
      for (std::size_t j = 0; j < cols.size(); ++j) r.row_bytes(i)[j] = m.row_bytes(i)[cols[j]];
    }
  }
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_prime(a, b, "vstack");
  if (a.cols() != b.cols()) throw DimensionError("vstack: column mismatch");
  Matrix r(a.prime(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) r.copy_row_from(i, a, i);
  for (std::size_t i = 0; i < b.rows(); ++i) r.copy_row_from(a.rows() + i, b, i);
  return r;
}

void apply(const Matrix& m, const std::uint64_t* x, std::uint64_t* y) {
  const std::size_t out_words = row_stride(m.prime(), m.rows());
  std::fill(y, y + out_words, 0);
  if (m.binary()) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (detail::dot_gf2(m.row(i), x, m.stride())) detail::flip_bit(y, i);
    return;
  }
  const unsigned p = m.prime();
  const auto* xb = reinterpret_cast<const std::uint8_t*>(x);
  auto* yb = reinterpret_cast<std::uint8_t*>(y);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::uint8_t* r = m.row_bytes(i);
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += unsigned(r[j]) * xb[j];
    yb[i] = Elem(acc % p);
  }
}

}  // namespace unisep::gf
