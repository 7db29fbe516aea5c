#include "unisep/gf/field.hpp"

#include <string>

#include "unisep/error.hpp"

namespace unisep::gf {

void check_prime(unsigned p) {
  bool ok = p >= 2 && p < 256;
  for (unsigned d = 2; ok && d * d <= p; ++d) ok = p % d != 0;
  if (!ok) throw DomainError("GF(p) needs a prime p < 256, got " + std::to_string(p));
}

Elem inv(Elem a, unsigned p) {
  if (a % p == 0) throw DomainError("inverse of zero in GF(" + std::to_string(p) + ")");
  unsigned result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return Elem(result);
}

}  // namespace unisep::gf
