#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "unisep/gf/field.hpp"
#include "unisep/random.hpp"

namespace unisep::gf {

/// Univariate polynomial over GF(p); coefficients lowest degree first, with
/// trailing zeros trimmed so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(unsigned prime, std::vector<Elem> coeffs);

  static Poly zero(unsigned prime) { return Poly(prime, {}); }
  static Poly constant(unsigned prime, Elem c) { return Poly(prime, {c}); }
  /// c * x^d
  static Poly monomial(unsigned prime, std::size_t d, Elem c = 1);
  /// Coefficients lowest degree first; any integers, reduced mod p.
  static Poly from_coeffs(unsigned prime, const std::vector<int>& coeffs);

  unsigned prime() const noexcept { return prime_; }
  int degree() const noexcept { return int(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  Elem lead() const noexcept { return c_.empty() ? Elem(0) : c_.back(); }
  Elem operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem(0); }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }

  Poly monic() const;
  Poly derivative() const;
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.prime_ == b.prime_ && a.c_ == b.c_;
  }
  friend bool operator<(const Poly& a, const Poly& b) noexcept;

 private:
  unsigned prime_ = 2;
  std::vector<Elem> c_;
  void trim();
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Elem c, const Poly& a);
/// Quotient and remainder; throws DomainError on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);
/// base^e mod m.
Poly powmod(Poly base, unsigned long long e, const Poly& m);
/// base^(p^k) mod m by repeated Frobenius powering.
Poly frobenius_power(const Poly& base, std::size_t k, const Poly& m);

struct PolyFactor {
  Poly factor;  // monic irreducible
  std::size_t multiplicity;
  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// Complete factorization into monic irreducibles, sorted by (degree,
/// coefficients). Square-free decomposition, distinct-degree split, then
/// randomized equal-degree splitting drawing from rng.
std::vector<PolyFactor> factor_poly(const Poly& f, Rng& rng);

/// Irreducible factors of degree at most max_degree only (with their
/// multiplicities). Cost is independent of the high-degree part.
std::vector<PolyFactor> low_degree_factors(const Poly& f, std::size_t max_degree, Rng& rng);

/// Deterministic irreducibility test (Rabin).
bool is_irreducible_poly(const Poly& f);

}  // namespace unisep::gf
