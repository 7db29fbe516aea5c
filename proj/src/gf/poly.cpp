#include "unisep/gf/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "unisep/error.hpp"

namespace unisep::gf {

namespace {

void require_same_prime(const Poly& a, const Poly& b) {
  if (a.prime() != b.prime()) throw PrimeMismatch("polynomials over different fields");
}

Poly x_poly(unsigned p) { return Poly::monomial(p, 1); }

// Remainder of a modulo m, computed in place on a coefficient buffer.
void reduce_in_place(std::vector<Elem>& r, const Poly& m) {
  const unsigned p = m.prime();
  const std::size_t dm = std::size_t(m.degree());
  const Elem li = inv(m.lead(), p);
  const auto& mc = m.coeffs();
  for (std::size_t top = r.size(); top-- > dm;) {
    const Elem t = r[top];
    if (!t) continue;
    const Elem f = mul(t, li, p);
    const Elem nf = neg(f, p);
    const std::size_t off = top - dm;
    for (std::size_t j = 0; j <= dm; ++j)
      if (mc[j]) r[off + j] = Elem((r[off + j] + unsigned(nf) * mc[j]) % p);
  }
  r.resize(std::min(r.size(), dm));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) {
  Poly prod = a * b;
  std::vector<Elem> r = prod.coeffs();
  reduce_in_place(r, m);
  return Poly(m.prime(), std::move(r));
}

// p-th root of a polynomial whose derivative vanishes: only exponents
// divisible by p occur and each coefficient is its own p-th power.
Poly pth_root(const Poly& f) {
  const unsigned p = f.prime();
  std::vector<Elem> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return Poly(p, std::move(c));
}

std::vector<PolyFactor> square_free(const Poly& f) {
  const unsigned p = f.prime();
  std::vector<PolyFactor> out;
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  std::size_t i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, j] : square_free(pth_root(c))) out.push_back({g, j * p});
  }
  return out;
}

// Distinct-degree split of a square-free monic g into (product of all
// irreducible factors of degree i, i); stops after max_degree.
std::vector<std::pair<Poly, std::size_t>> distinct_degree(Poly g, std::size_t max_degree) {
  const unsigned p = g.prime();
  std::vector<std::pair<Poly, std::size_t>> out;
  Poly h = x_poly(p) % g;
  for (std::size_t i = 1; i <= max_degree && g.degree() >= int(2 * i); ++i) {
    h = frobenius_power(h, 1, g);
    Poly d = gcd(g, h - x_poly(p));
    if (!d.is_one()) {
      out.emplace_back(d, i);
      g = g / d;
      h = h % g;
    }
  }
  if (g.degree() > 0 && std::size_t(g.degree()) <= max_degree) out.emplace_back(g, std::size_t(g.degree()));
  return out;
}

Poly random_poly_below(unsigned p, std::size_t deg, Rng& rng) {
  std::uniform_int_distribution<unsigned> dist(0, p - 1);
  std::vector<Elem> c(deg);
  for (auto& x : c) x = Elem(dist(rng));
  return Poly(p, std::move(c));
}

void equal_degree(const Poly& g, std::size_t i, Rng& rng, std::vector<Poly>& out) {
  const unsigned p = g.prime();
  if (std::size_t(g.degree()) == i) {
    out.push_back(g.monic());
    return;
  }
  while (true) {
    Poly a = random_poly_below(p, std::size_t(g.degree()), rng);
    if (a.degree() < 1) continue;
    Poly t;
    if (p == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(i-1)) lands in GF(2) on every factor.
      t = a;
      Poly s = a;
      for (std::size_t k = 1; k < i; ++k) {
        s = frobenius_power(s, 1, g);
        t = t + s;
      }
    } else {
      // Norm-like product a * a^p * ... * a^(p^(i-1)), then the quadratic character.
      Poly nrm = a;
      Poly s = a;
      for (std::size_t k = 1; k < i; ++k) {
        s = frobenius_power(s, 1, g);
        nrm = mulmod(nrm, s, g);
      }
      t = powmod(nrm, (p - 1) / 2, g) - Poly::constant(p, 1);
    }
    Poly b = gcd(g, t);
    if (b.degree() > 0 && b.degree() < g.degree()) {
      equal_degree(b, i, rng, out);
      equal_degree(g / b, i, rng, out);
      return;
    }
  }
}

std::vector<PolyFactor> factor_impl(const Poly& f, std::size_t max_degree, Rng& rng) {
  if (f.is_zero()) throw DomainError("factor_poly: zero polynomial");
  std::map<Poly, std::size_t> acc;
  for (const auto& [part, mult] : square_free(f.monic())) {
    for (const auto& [d, i] : distinct_degree(part, max_degree)) {
      std::vector<Poly> irr;
      equal_degree(d, i, rng, irr);
      for (auto& q : irr) acc[q] += mult;
    }
  }
  std::vector<PolyFactor> out;
  for (auto& [q, m] : acc) out.push_back({q, m});
  return out;
}

}  // namespace

Poly::Poly(unsigned prime, std::vector<Elem> coeffs) : prime_(prime), c_(std::move(coeffs)) {
  check_prime(prime);
  for (auto& x : c_) x = Elem(x % prime);
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(unsigned prime, std::size_t d, Elem c) {
  std::vector<Elem> v(d + 1, 0);
  v[d] = c;
  return Poly(prime, std::move(v));
}

Poly Poly::from_coeffs(unsigned prime, const std::vector<int>& coeffs) {
  std::vector<Elem> v;
  for (int x : coeffs) {
    int r = x % int(prime);
    v.push_back(Elem(r < 0 ? r + int(prime) : r));
  }
  return Poly(prime, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return inv(lead(), prime_) * *this;
}

Poly Poly::derivative() const {
  std::vector<Elem> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mul(c_[i], Elem(i % prime_), prime_));
  return Poly(prime_, std::move(d));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << unsigned(c_[i]);
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

bool operator<(const Poly& a, const Poly& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_prime(a, b);
  const unsigned p = a.prime();
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = add(a[i], b[i], p);
  return Poly(p, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_prime(a, b);
  const unsigned p = a.prime();
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub(a[i], b[i], p);
  return Poly(p, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_prime(a, b);
  const unsigned p = a.prime();
  if (a.is_zero() || b.is_zero()) return Poly::zero(p);
  std::vector<std::uint32_t> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (!ac[i]) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) acc[i + j] = (acc[i + j] + unsigned(ac[i]) * bc[j]) % p;
  }
  std::vector<Elem> c(acc.begin(), acc.end());
  return Poly(p, std::move(c));
}

Poly operator*(Elem c, const Poly& a) {
  std::vector<Elem> v = a.coeffs();
  for (auto& x : v) x = mul(x, Elem(c % a.prime()), a.prime());
  return Poly(a.prime(), std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same_prime(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const unsigned p = a.prime();
  if (a.degree() < b.degree()) return {Poly::zero(p), a};
  const std::size_t db = std::size_t(b.degree());
  std::vector<Elem> r = a.coeffs();
  std::vector<Elem> q(r.size() - db, 0);
  const Elem li = inv(b.lead(), p);
  const auto& bc = b.coeffs();
  for (std::size_t top = r.size(); top-- > db;) {
    const Elem t = r[top];
    if (!t) continue;
    const Elem f = mul(t, li, p);
    q[top - db] = f;
    const Elem nf = neg(f, p);
    for (std::size_t j = 0; j <= db; ++j) r[top - db + j] = Elem((r[top - db + j] + unsigned(nf) * bc[j]) % p);
  }
  r.resize(db);
  return {Poly(p, std::move(q)), Poly(p, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Elem> r = a.coeffs();
  reduce_in_place(r, b);
  return Poly(a.prime(), std::move(r));
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly gcd(Poly a, Poly b) {
  require_same_prime(a, b);
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(Poly base, unsigned long long e, const Poly& m) {
  Poly result = Poly::constant(m.prime(), 1) % m;
  base = base % m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return result;
}

Poly frobenius_power(const Poly& base, std::size_t k, const Poly& m) {
  const unsigned p = m.prime();
  std::vector<Elem> cur = (base % m).coeffs();
  for (std::size_t step = 0; step < k; ++step) {
    // (sum a_i x^i)^p = sum a_i x^(ip) since a_i lies in the prime field.
    std::vector<Elem> spread(cur.empty() ? 0 : (cur.size() - 1) * p + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) spread[i * p] = cur[i];
    reduce_in_place(spread, m);
    while (!spread.empty() && spread.back() == 0) spread.pop_back();
    cur = std::move(spread);
  }
  return Poly(p, std::move(cur));
}

std::vector<PolyFactor> factor_poly(const Poly& f, Rng& rng) {
  return factor_impl(f, f.is_zero() ? 0 : std::size_t(std::max(f.degree(), 0)), rng);
}

std::vector<PolyFactor> low_degree_factors(const Poly& f, std::size_t max_degree, Rng& rng) {
  return factor_impl(f, max_degree, rng);
}

bool is_irreducible_poly(const Poly& f) {
  if (f.degree() < 1) return false;
  const unsigned p = f.prime();
  const Poly g = f.monic();
  const std::size_t n = std::size_t(g.degree());
  const Poly x = x_poly(p) % g;
  if (!(frobenius_power(x, n, g) == x)) return false;
  std::size_t rest = n;
  for (std::size_t q = 2; q <= rest; ++q) {
    if (rest % q) continue;
    while (rest % q == 0) rest /= q;
    if (!gcd(g, frobenius_power(x, n / q, g) - x).is_one()) return false;
  }
  return true;
}

}  // namespace unisep::gf
