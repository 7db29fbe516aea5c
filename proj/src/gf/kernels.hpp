#pragma once

// Row kernels shared by the GF(2) and GF(p) code paths.

#include <bit>
#include <cstddef>
#include <cstdint>

#include "unisep/gf/field.hpp"

namespace unisep::gf::detail {

inline void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

inline bool test_bit(const std::uint64_t* row, std::size_t j) noexcept {
  return (row[j >> 6] >> (j & 63)) & 1u;
}

inline void flip_bit(std::uint64_t* row, std::size_t j) noexcept {
  row[j >> 6] ^= std::uint64_t(1) << (j & 63);
}

inline bool all_zero(const std::uint64_t* row, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i)
    if (row[i]) return false;
  return true;
}

/// Parity of popcount(a & b) over n words.
inline unsigned dot_gf2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) noexcept {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc ^= a[i] & b[i];
  return unsigned(std::popcount(acc) & 1);
}

/// Index of the first set bit at or after `from`, or `cols` if none.
inline std::size_t first_bit(const std::uint64_t* row, std::size_t cols, std::size_t from = 0) noexcept {
  std::size_t nw = (cols + 63) / 64;
  std::size_t w = from >> 6;
  if (w >= nw) return cols;
  std::uint64_t cur = row[w] & (~std::uint64_t(0) << (from & 63));
  while (true) {
    if (cur) {
      std::size_t j = (w << 6) + std::size_t(std::countr_zero(cur));
      return j < cols ? j : cols;
    }
    if (++w == nw) return cols;
    cur = row[w];
  }
}

/// Index of the last set bit, or `cols` if none.
inline std::size_t last_bit(const std::uint64_t* row, std::size_t cols) noexcept {
  std::size_t nw = (cols + 63) / 64;
  for (std::size_t w = nw; w-- > 0;) {
    if (row[w]) return (w << 6) + 63 - std::size_t(std::countl_zero(row[w]));
  }
  return cols;
}

/// dst += c * src over GF(p) (byte layout).
inline void axpy_bytes(std::uint8_t* dst, const std::uint8_t* src, Elem c, std::size_t n,
                       unsigned p) noexcept {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i) dst[i] = Elem((dst[i] + unsigned(c) * src[i]) % p);
}

inline void scale_bytes(std::uint8_t* row, Elem c, std::size_t n, unsigned p) noexcept {
  for (std::size_t i = 0; i < n; ++i) row[i] = Elem((unsigned(c) * row[i]) % p);
}

inline std::size_t first_nonzero_byte(const std::uint8_t* row, std::size_t n,
                                      std::size_t from = 0) noexcept {
  for (std::size_t i = from; i < n; ++i)
    if (row[i]) return i;
  return n;
}

inline std::size_t last_nonzero_byte(const std::uint8_t* row, std::size_t n) noexcept {
  for (std::size_t i = n; i-- > 0;)
    if (row[i]) return i;
  return n;
}

}  // namespace unisep::gf::detail
