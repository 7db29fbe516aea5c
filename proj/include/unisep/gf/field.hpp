#pragma once

#include <cstdint>

namespace unisep::gf {

/// A residue in {0, ..., p-1}; all primes in scope are below 256.
using Elem = std::uint8_t;

/// Throws DomainError unless p is a prime below 256.
void check_prime(unsigned p);

inline Elem add(Elem a, Elem b, unsigned p) noexcept {
  unsigned s = unsigned(a) + b;
  return Elem(s >= p ? s - p : s);
}

inline Elem sub(Elem a, Elem b, unsigned p) noexcept {
  return Elem(a >= b ? a - b : a + p - b);
}

inline Elem neg(Elem a, unsigned p) noexcept { return Elem(a == 0 ? 0 : p - a); }

inline Elem mul(Elem a, Elem b, unsigned p) noexcept {
  return Elem((unsigned(a) * b) % p);
}

/// Multiplicative inverse of a nonzero residue.
Elem inv(Elem a, unsigned p);

}  // namespace unisep::gf
