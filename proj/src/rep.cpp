#include "unisep/rep.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gf/kernels.hpp"
#include "unisep/error.hpp"
#include "unisep/gf/linalg.hpp"

namespace unisep {

using gf::Elem;
using gf::Matrix;

// ---------------------------------------------------------------- GroupWord

GroupWord::GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_)
    if (!std::isalpha(static_cast<unsigned char>(l.symbol))) throw DomainError("word: symbols must be letters");
  normalize();
}

void GroupWord::normalize() {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().symbol == l.symbol)
      out.back().exponent += l.exponent;
    else
      out.push_back(l);
  }
  letters_ = std::move(out);
}

GroupWord GroupWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    const char c = text[i];
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError("word: unexpected character '" + std::string(1, c) + "'");
    ++i;
    skip_ws();
    std::uint64_t e = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      e = 0;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) ||
                                 std::isspace(static_cast<unsigned char>(text[i])))) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
          if (e > (UINT64_MAX - 9) / 10) throw ParseError("word: exponent too large");
          e = e * 10 + std::uint64_t(text[i] - '0');
        }
        ++i;
      }
      if (e == 0) throw ParseError("word: exponent must be positive");
    }
    letters.push_back({c, e});
    skip_ws();
  }
  return GroupWord(std::move(letters));
}

std::uint64_t GroupWord::length() const noexcept {
  std::uint64_t n = 0;
  for (const auto& l : letters_) n += l.exponent;
  return n;
}

std::string GroupWord::to_string() const {
  std::string s;
  for (const auto& l : letters_) {
    s += l.symbol;
    if (l.exponent != 1) s += std::to_string(l.exponent);
  }
  return s;
}

GroupWord GroupWord::operator*(const GroupWord& other) const {
  std::vector<Letter> l = letters_;
  l.insert(l.end(), other.letters_.begin(), other.letters_.end());
  return GroupWord(std::move(l));
}

GroupWord GroupWord::pow(std::uint64_t k) const {
  std::vector<Letter> l;
  l.reserve(letters_.size() * std::size_t(std::min<std::uint64_t>(k, 1u << 20)));
  for (std::uint64_t i = 0; i < k; ++i) l.insert(l.end(), letters_.begin(), letters_.end());
  return GroupWord(std::move(l));
}

GroupWord GroupWord::reduced(const std::map<char, std::uint64_t>& orders) const {
  std::vector<Letter> cur = letters_;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Letter> next;
    for (auto l : cur) {
      auto it = orders.find(l.symbol);
      if (it != orders.end() && it->second > 0) l.exponent %= it->second;
      if (l.exponent == 0) {
        changed = true;
        continue;
      }
      if (!next.empty() && next.back().symbol == l.symbol) {
        next.back().exponent += l.exponent;
        changed = true;
      } else {
        next.push_back(l);
      }
    }
    cur = std::move(next);
  }
  GroupWord w;
  w.letters_ = std::move(cur);
  return w;
}

// ------------------------------------------------------------------- MatRep

void MatRep::validate_shape() const {
  if (names_.size() != gens_.size()) throw DimensionError("rep: names and generators differ in number");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!std::isalpha(static_cast<unsigned char>(names_[i]))) throw DomainError("rep: generator symbols must be letters");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw DomainError("rep: duplicate generator symbol");
  }
  for (const auto& g : gens_) {
    if (!g.square() || g.rows() != dim_) throw DimensionError("rep: generator shape mismatch");
    if (g.prime() != prime_) throw PrimeMismatch("rep: generator prime mismatch");
  }
}

MatRep::MatRep(std::vector<char> names, std::vector<Matrix> gens)
    : names_(std::move(names)), gens_(std::move(gens)) {
  if (gens_.empty()) throw DimensionError("rep: no generators");
  prime_ = gens_.front().prime();
  dim_ = gens_.front().rows();
  validate_shape();
  for (const auto& g : gens_)
    if (gf::rank(g) != dim_) throw SingularMatrix("rep: generator not invertible");
}

MatRep MatRep::trusted(std::vector<char> names, std::vector<Matrix> gens) {
  MatRep r;
  if (gens.empty()) throw DimensionError("rep: no generators");
  r.prime_ = gens.front().prime();
  r.dim_ = gens.front().rows();
  r.names_ = std::move(names);
  r.gens_ = std::move(gens);
  r.validate_shape();
  return r;
}

MatRep MatRep::trivial(std::vector<char> names, unsigned prime, std::size_t dim) {
  std::vector<Matrix> gens(names.size(), Matrix::identity(prime, dim));
  return trusted(std::move(names), std::move(gens));
}

std::size_t MatRep::index_of(char symbol) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == symbol) return i;
  throw DomainError(std::string("unknown generator symbol '") + symbol + "'");
}

Matrix evaluate_word(const MatRep& rep, const GroupWord& w) {
  Matrix result = Matrix::identity(rep.prime(), rep.dim());
  bool first = true;
  for (const auto& l : w.letters()) {
    Matrix f = gf::power(rep.gen(rep.index_of(l.symbol)), l.exponent);
    result = first ? std::move(f) : result * f;
    first = false;
  }
  return result;
}

namespace {

void require_compatible(const MatRep& a, const MatRep& b, const char* what) {
  if (a.prime() != b.prime()) throw PrimeMismatch(std::string(what) + ": prime mismatch");
  if (a.names() != b.names()) throw DomainError(std::string(what) + ": generator symbols differ");
}

}  // namespace

MatRep tensor(const MatRep& a, const MatRep& b) {
  require_compatible(a, b, "tensor");
  std::vector<Matrix> g;
  for (std::size_t i = 0; i < a.num_gens(); ++i) g.push_back(gf::kronecker(a.gen(i), b.gen(i)));
  return MatRep::trusted(a.names(), std::move(g));
}

MatRep direct_sum(const MatRep& a, const MatRep& b) {
  require_compatible(a, b, "direct_sum");
  std::vector<Matrix> g;
  for (std::size_t i = 0; i < a.num_gens(); ++i) g.push_back(gf::block_diagonal({a.gen(i), b.gen(i)}));
  return MatRep::trusted(a.names(), std::move(g));
}

MatRep dual(const MatRep& r) {
  std::vector<Matrix> g;
  for (const auto& m : r.gens()) g.push_back(gf::transpose(gf::mat_inverse(m)));
  return MatRep::trusted(r.names(), std::move(g));
}

// --------------------------------------------------------- exterior powers

std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t i) {
  std::vector<std::vector<std::size_t>> out;
  if (i > n) return out;
  std::vector<std::size_t> s(i);
  for (std::size_t k = 0; k < i; ++k) s[k] = k;
  while (true) {
    out.push_back(s);
    std::size_t j = 0;
    while (j < i && s[j] + 1 == (j + 1 < i ? s[j + 1] : n)) ++j;
    if (j == i) break;
    ++s[j];
    for (std::size_t k = 0; k < j; ++k) s[k] = k;
  }
  return out;
}

namespace {

// Determinant of a k x k matrix over GF(2) given as row bitmasks (k <= 64).
Elem det_gf2(std::vector<std::uint64_t> rows) {
  const std::size_t k = rows.size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t r = c;
    while (r < k && !((rows[r] >> c) & 1u)) ++r;
    if (r == k) return 0;
    std::swap(rows[r], rows[c]);
    for (std::size_t q = c + 1; q < k; ++q)
      if ((rows[q] >> c) & 1u) rows[q] ^= rows[c];
  }
  return 1;
}

Elem det_gfp(std::vector<std::vector<Elem>> a, unsigned p) {
  const std::size_t k = a.size();
  Elem det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t r = c;
    while (r < k && !a[r][c]) ++r;
    if (r == k) return 0;
    if (r != c) {
      std::swap(a[r], a[c]);
      det = gf::neg(det, p);
    }
    det = gf::mul(det, a[c][c], p);
    const Elem pinv = gf::inv(a[c][c], p);
    for (std::size_t q = c + 1; q < k; ++q) {
      if (!a[q][c]) continue;
      const Elem f = gf::neg(gf::mul(a[q][c], pinv, p), p);
      for (std::size_t j = c; j < k; ++j) a[q][j] = gf::add(a[q][j], gf::mul(f, a[c][j], p), p);
    }
  }
  return det;
}

}  // namespace

Matrix exterior_power(const Matrix& g, std::size_t i) {
  if (!g.square()) throw DimensionError("exterior_power: matrix not square");
  const std::size_t n = g.rows();
  if (i < 1 || i > n) throw DomainError("exterior_power: degree out of range");
  if (g.binary() && i > 64) throw DomainError("exterior_power: degree above 64 unsupported");
  const auto subsets = colex_subsets(n, i);
  const std::size_t N = subsets.size();
  const unsigned p = g.prime();
  Matrix out(p, N, N);
  for (std::size_t s = 0; s < N; ++s) {
    const auto& S = subsets[s];
    for (std::size_t t = 0; t < N; ++t) {
      const auto& T = subsets[t];
      Elem d;
      if (p == 2) {
        std::vector<std::uint64_t> rows(i, 0);
        for (std::size_t a = 0; a < i; ++a)
          for (std::size_t b = 0; b < i; ++b)
            if (g(S[a], T[b])) rows[a] |= std::uint64_t(1) << b;
        d = det_gf2(std::move(rows));
      } else {
        std::vector<std::vector<Elem>> a(i, std::vector<Elem>(i));
        for (std::size_t x = 0; x < i; ++x)
          for (std::size_t y = 0; y < i; ++y) a[x][y] = g(S[x], T[y]);
        d = det_gfp(std::move(a), p);
      }
      if (d) out.set(s, t, d);
    }
  }
  return out;
}

MatRep exterior_power(const MatRep& r, std::size_t i) {
  if (i < 1 || i > r.dim()) throw DomainError("exterior_power: degree out of range");
  std::vector<Matrix> g;
  for (const auto& m : r.gens()) g.push_back(exterior_power(m, i));
  return MatRep::trusted(r.names(), std::move(g));
}

// ------------------------------------------------------------------ spinning

Matrix spin_right(const std::vector<Matrix>& ops, const Matrix& seeds) {
  const unsigned p = seeds.prime();
  const std::size_t n = seeds.cols();
  for (const auto& h : ops)
    if (!h.square() || h.rows() != n) throw DimensionError("spin: operator shape mismatch");
  gf::EchelonBasis basis(p, n);
  std::vector<std::uint64_t> buf(basis.stride());
  auto insert_rows = [&](const Matrix& m) {
    for (std::size_t i = 0; i < m.rows() && !basis.full(); ++i) {
      std::copy(m.row(i), m.row(i) + basis.stride(), buf.begin());
      basis.insert(buf.data());
    }
  };
  insert_rows(seeds);
  constexpr std::size_t kBatch = 2048;
  std::size_t done = 0;
  while (done < basis.size() && !basis.full()) {
    const std::size_t hi = std::min(basis.size(), done + kBatch);
    Matrix batch(p, hi - done, n);
    for (std::size_t i = done; i < hi; ++i)
      std::copy(basis.vector(i), basis.vector(i) + basis.stride(), batch.row(i - done));
    done = hi;
    for (const auto& h : ops) {
      if (basis.full()) break;
      insert_rows(batch * h);
    }
  }
  return basis.matrix();
}

Matrix spin(const std::vector<Matrix>& gens, const Matrix& seeds) {
  std::vector<Matrix> ops;
  for (const auto& g : gens) ops.push_back(gf::transpose(g));
  return spin_right(ops, seeds);
}

Matrix spin(const MatRep& r, const Matrix& seeds) {
  if (seeds.cols() != r.dim()) throw DimensionError("spin: seed length differs from dimension");
  if (seeds.prime() != r.prime()) throw PrimeMismatch("spin: prime mismatch");
  return spin(r.gens(), seeds);
}

// -------------------------------------------------------------- sub/quotient

SubQuotient sub_quotient(const MatRep& r, const Matrix& basis) {
  const std::size_t n = r.dim();
  const unsigned p = r.prime();
  if (basis.cols() != n) throw DimensionError("sub_quotient: basis vectors have wrong length");
  if (basis.prime() != p) throw PrimeMismatch("sub_quotient: prime mismatch");
  const std::size_t k = basis.rows();
  if (k == 0) return {MatRep::trivial(r.names(), p, 0), r};

  const gf::Echelon e = gf::row_reduce(basis, gf::PivotOrder::Trailing);
  if (e.pivots.size() != k) throw DomainError("sub_quotient: basis vectors are dependent");
  std::vector<std::uint8_t> is_pivot(n, 0);
  for (auto c : e.pivots) is_pivot[c] = 1;
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) comp.push_back(c);

  const Matrix tinv = gf::mat_inverse(gf::select_columns(basis, e.pivots));
  std::vector<Matrix> sub, quot;
  for (const auto& g : r.gens()) {
    const Matrix gt = gf::transpose(g);
    // Rows of y are the images g b_i; they must lie in the span.
    const Matrix y = basis * gt;
    const Matrix coords = gf::select_columns(y, e.pivots);
    if (!(coords * e.reduced == y)) throw DomainError("sub_quotient: subspace is not invariant");
    sub.push_back(gf::transpose(coords * tinv));
    if (!comp.empty()) {
      // Images of the complement vectors, reduced modulo the subspace.
      const Matrix m = gf::select_rows(gt, comp);
      const Matrix red = m - gf::select_columns(m, e.pivots) * e.reduced;
      quot.push_back(gf::transpose(gf::select_columns(red, comp)));
    } else {
      quot.push_back(Matrix(p, 0, 0));
    }
  }
  return {MatRep::trusted(r.names(), std::move(sub)), MatRep::trusted(r.names(), std::move(quot))};
}

}  // namespace unisep
