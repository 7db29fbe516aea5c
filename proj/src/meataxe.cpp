#include "unisep/meataxe.hpp"

#include <algorithm>
#include <tuple>

#include "unisep/gf/linalg.hpp"

namespace unisep {

using gf::Matrix;
using gf::Poly;

// ------------------------------------------------------------ sampling

AlgebraSampler::AlgebraSampler(const MatRep& rep, MeataxeConfig config) : rep_(&rep), config_(config) {
  if (config_.min_terms < 1 || config_.max_terms < config_.min_terms || config_.max_word_length < 1)
    throw DomainError("meataxe: invalid sampling configuration");
}

std::vector<AlgebraTerm> AlgebraSampler::random_recipe(Rng& rng) const {
  const auto& names = rep_->names();
  std::uniform_int_distribution<std::size_t> nterms(config_.min_terms, config_.max_terms);
  std::uniform_int_distribution<std::size_t> len(1, config_.max_word_length);
  std::uniform_int_distribution<std::size_t> letter(0, names.size() - 1);
  std::uniform_int_distribution<unsigned> coeff(1, rep_->prime() - 1);
  // Two generators give 126 distinct words of length <= 6; cap below that.
  std::size_t distinct = 0;
  for (std::size_t l = 1, pw = names.size(); l <= config_.max_word_length && distinct < 1000; ++l, pw *= names.size())
    distinct += pw;
  const std::size_t want = std::min(nterms(rng), distinct);
  std::vector<AlgebraTerm> terms;
  std::vector<std::string> seen;
  while (terms.size() < want) {
    std::string s;
    const std::size_t l = len(rng);
    for (std::size_t i = 0; i < l; ++i) s += names[letter(rng)];
    const gf::Elem c = gf::Elem(coeff(rng));
    if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
    seen.push_back(s);
    terms.push_back({c, GroupWord::parse(s)});
  }
  return terms;
}

Matrix AlgebraSampler::word_image(const GroupWord& w) {
  std::string letters;
  for (const auto& l : w.letters()) letters.append(std::size_t(l.exponent), l.symbol);
  if (letters.empty()) return Matrix::identity(rep_->prime(), rep_->dim());
  std::size_t k = letters.size();
  while (k > 0 && !cache_.count(letters.substr(0, k))) --k;
  Matrix cur = k ? cache_.at(letters.substr(0, k)) : Matrix();
  for (std::size_t i = k; i < letters.size(); ++i) {
    const Matrix& g = rep_->gen(rep_->index_of(letters[i]));
    cur = i == 0 ? g : cur * g;
    if (cached_bytes_ + cur.bytes() <= config_.word_cache_bytes) {
      cached_bytes_ += cur.bytes();
      cache_.emplace(letters.substr(0, i + 1), cur);
    }
  }
  return cur;
}

Matrix AlgebraSampler::evaluate(const std::vector<AlgebraTerm>& recipe) {
  Matrix acc(rep_->prime(), rep_->dim(), rep_->dim());
  for (const auto& t : recipe) acc = acc + gf::scaled(word_image(t.word), t.coeff);
  return acc;
}

Matrix random_algebra_element(const MatRep& rep, Rng& rng, const MeataxeConfig& config) {
  AlgebraSampler s(rep, config);
  return s.evaluate(s.random_recipe(rng));
}

// -------------------------------------------------------- irreducibility

namespace {

Matrix row_of(const Matrix& m, std::size_t i) {
  const std::size_t idx[] = {i};
  return gf::select_rows(m, idx);
}

struct Spinner {
  const MatRep& rep;
  std::vector<Matrix> column_ops;  // g^T: v -> v g^T is g acting on columns

  explicit Spinner(const MatRep& r) : rep(r) {
    for (const auto& g : r.gens()) column_ops.push_back(gf::transpose(g));
  }
  Matrix spin(const Matrix& v) const { return spin_right(column_ops, v); }
  Matrix spin_dual(const Matrix& w) const { return spin_right(rep.gens(), w); }
};

// Low-degree irreducible factors of the characteristic polynomial with their
// multiplicities, ordered by the bound deg * mult on the nullity.
std::vector<gf::PolyFactor> candidate_factors(const Matrix& theta, const MeataxeConfig& cfg, Rng& rng) {
  std::map<Poly, std::size_t> acc;
  for (const auto& piece : gf::char_poly_factors(theta))
    for (const auto& pf : gf::low_degree_factors(piece, cfg.max_factor_degree, rng)) acc[pf.factor] += pf.multiplicity;
  std::vector<gf::PolyFactor> out;
  for (auto& [f, m] : acc) out.push_back({f, m});
  std::stable_sort(out.begin(), out.end(), [](const gf::PolyFactor& a, const gf::PolyFactor& b) {
    return std::size_t(a.factor.degree()) * a.multiplicity < std::size_t(b.factor.degree()) * b.multiplicity;
  });
  return out;
}

enum class Outcome { Split, Irreducible, Unknown };

Outcome try_element(const Spinner& sp, const std::vector<AlgebraTerm>& recipe, const Matrix& theta,
                    const MeataxeConfig& cfg, Rng& rng, Matrix& witness, IrreducibilityCertificate& cert) {
  const std::size_t n = sp.rep.dim();
  auto cands = candidate_factors(theta, cfg, rng);
  if (cands.size() > cfg.factors_per_element) cands.resize(cfg.factors_per_element);
  for (const auto& pf : cands) {
    const Matrix ft = gf::eval_poly(pf.factor, theta);
    const Matrix ker = gf::nullspace(ft);
    const Matrix v = row_of(ker, 0);
    Matrix s = sp.spin(v);
    if (s.rows() < n) {
      witness = std::move(s);
      return Outcome::Split;
    }
    if (ker.rows() != std::size_t(pf.factor.degree())) continue;
    const Matrix w = row_of(gf::nullspace(gf::transpose(ft)), 0);
    const Matrix d = sp.spin_dual(w);
    if (d.rows() < n) {
      witness = gf::nullspace(d);
      return Outcome::Split;
    }
    cert = {recipe, pf.factor, ker.rows(), v, w};
    return Outcome::Irreducible;
  }
  return Outcome::Unknown;
}

}  // namespace

IrreducibilityResult is_irreducible(const MatRep& r, Rng& rng, const MeataxeConfig& config) {
  if (r.dim() == 0) throw DomainError("is_irreducible: zero-dimensional module");
  Spinner sp(r);
  AlgebraSampler sampler(r, config);
  for (std::size_t attempt = 0; attempt < config.max_elements; ++attempt) {
    const auto recipe = sampler.random_recipe(rng);
    const Matrix theta = sampler.evaluate(recipe);
    IrreducibilityResult res;
    IrreducibilityCertificate cert;
    switch (try_element(sp, recipe, theta, config, rng, res.witness, cert)) {
      case Outcome::Split:
        return res;
      case Outcome::Irreducible:
        res.irreducible = true;
        res.certificate = std::move(cert);
        return res;
      case Outcome::Unknown:
        break;
    }
  }
  throw ResourceLimit("is_irreducible: no decision after " + std::to_string(config.max_elements) +
                      " algebra elements (dim " + std::to_string(r.dim()) + ")");
}

bool verify_certificate(const MatRep& r, const IrreducibilityCertificate& cert) {
  const std::size_t n = r.dim();
  if (n == 0 || cert.factor.prime() != r.prime() || !gf::is_irreducible_poly(cert.factor)) return false;
  if (cert.nullity != std::size_t(cert.factor.degree())) return false;
  if (cert.vector.rows() != 1 || cert.vector.cols() != n || cert.vector.is_zero()) return false;
  if (cert.dual_vector.rows() != 1 || cert.dual_vector.cols() != n || cert.dual_vector.is_zero()) return false;
  AlgebraSampler sampler(r);
  const Matrix ft = gf::eval_poly(cert.factor, sampler.evaluate(cert.theta));
  if (n - gf::rank(ft) != cert.nullity) return false;
  if (!(cert.vector * gf::transpose(ft)).is_zero()) return false;
  if (!(cert.dual_vector * ft).is_zero()) return false;
  Spinner sp(r);
  return sp.spin(cert.vector).rows() == n && sp.spin_dual(cert.dual_vector).rows() == n;
}

// ------------------------------------------------------- fingerprints

namespace {

std::vector<std::size_t> nullity_sequence(const Matrix& g) {
  const std::size_t n = g.rows();
  const Matrix x = gf::add_scalar(g, gf::Elem(g.prime() - 1));
  std::vector<std::size_t> seq;
  Matrix pw = x;
  while (true) {
    const std::size_t nul = n - gf::rank(pw);
    if (!seq.empty() && seq.back() == nul) break;
    seq.push_back(nul);
    if (nul == n) break;
    pw = pw * x;
  }
  return seq;
}

}  // namespace

Fingerprint fingerprint(const MatRep& r) {
  Fingerprint fp;
  for (const auto& g : r.gens()) fp.push_back(nullity_sequence(g));
  if (r.num_gens() >= 2) {
    const char a = r.names()[0], b = r.names()[1];
    const std::string probes[] = {std::string{a, b}, std::string{a, b, b}, std::string{a, a, b, a, b}};
    for (const auto& w : probes) fp.push_back(nullity_sequence(evaluate_word(r, GroupWord::parse(w))));
  }
  return fp;
}

// ----------------------------------------------------- isomorphism

namespace {

struct StandardBasis {
  Matrix vectors;                                     // rows b_0, b_1, ...
  std::vector<std::pair<std::size_t, std::size_t>> recipe;  // b_k = b_src * op_j
};

StandardBasis standard_basis(const std::vector<Matrix>& ops, const Matrix& v) {
  const std::size_t n = v.cols();
  gf::EchelonBasis eb(v.prime(), n);
  std::vector<std::uint64_t> buf(eb.stride());
  std::vector<Matrix> rows{v};
  std::copy(v.row(0), v.row(0) + eb.stride(), buf.begin());
  eb.insert(buf.data());
  StandardBasis sb;
  for (std::size_t i = 0; i < rows.size() && rows.size() < n; ++i) {
    for (std::size_t j = 0; j < ops.size() && rows.size() < n; ++j) {
      Matrix x = rows[i] * ops[j];
      std::copy(x.row(0), x.row(0) + eb.stride(), buf.begin());
      if (eb.insert(buf.data())) {
        rows.push_back(std::move(x));
        sb.recipe.emplace_back(i, j);
      }
    }
  }
  sb.vectors = Matrix(v.prime(), rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) sb.vectors.copy_row_from(i, rows[i], 0);
  return sb;
}

// Replays a standard-basis recipe from a new start vector.
Matrix replay(const std::vector<Matrix>& ops, const Matrix& w, const StandardBasis& sb) {
  std::vector<Matrix> rows{w};
  for (const auto& [src, j] : sb.recipe) rows.push_back(rows[src] * ops[j]);
  Matrix out(w.prime(), rows.size(), w.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.copy_row_from(i, rows[i], 0);
  return out;
}

std::vector<Matrix> action_in_basis(const std::vector<Matrix>& ops, const Matrix& t) {
  const Matrix tinv = gf::mat_inverse(t);
  std::vector<Matrix> out;
  for (const auto& h : ops) out.push_back(t * h * tinv);
  return out;
}

}  // namespace

bool are_isomorphic(const MatRep& a, const IrreducibilityCertificate& cert, const MatRep& b) {
  if (a.dim() != b.dim() || a.prime() != b.prime() || a.names() != b.names()) return false;
  const std::size_t n = a.dim();
  const unsigned p = a.prime();
  AlgebraSampler sb_sampler(b);
  const Matrix kb = gf::nullspace(gf::eval_poly(cert.factor, sb_sampler.evaluate(cert.theta)));
  if (kb.rows() != cert.nullity) return false;

  Spinner spa(a), spb(b);
  const StandardBasis std_a = standard_basis(spa.column_ops, cert.vector);
  if (std_a.vectors.rows() != n) throw DomainError("are_isomorphic: certificate vector does not spin");
  const auto act_a = action_in_basis(spa.column_ops, std_a.vectors);

  // Enumerate kernel vectors up to scalars (first nonzero coefficient 1).
  const std::size_t k = kb.rows();
  std::vector<unsigned> c(k, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t x = code;
    for (std::size_t i = 0; i < k; ++i, x /= p) c[i] = unsigned(x % p);
    std::size_t first = 0;
    while (c[first] == 0) ++first;
    if (c[first] != 1) continue;
    Matrix w(p, 1, n);
    for (std::size_t i = 0; i < k; ++i)
      if (c[i]) w = w + gf::scaled(row_of(kb, i), gf::Elem(c[i]));
    const Matrix t = replay(spb.column_ops, w, std_a);
    if (gf::rank(t) != n) continue;
    if (action_in_basis(spb.column_ops, t) == act_a) return true;
  }
  return false;
}

// --------------------------------------------------------------- chop

std::size_t CompositionFactors::total_dim() const {
  std::size_t d = 0;
  for (const auto& f : factors) d += f.rep.dim() * f.multiplicity;
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> CompositionFactors::dimensions() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& f : factors) out.emplace_back(f.rep.dim(), f.multiplicity);
  return out;
}

namespace {

struct Piece {
  MatRep rep;
  IrreducibilityCertificate cert;
};

// Splits r into irreducible pieces, discarding any piece of dimension below
// min_dim without examining it.
std::vector<Piece> split_all(const MatRep& r, std::size_t min_dim, Rng& rng, const MeataxeConfig& cfg) {
  std::vector<Piece> out;
  std::vector<MatRep> stack{r};
  while (!stack.empty()) {
    MatRep cur = std::move(stack.back());
    stack.pop_back();
    if (cur.dim() == 0 || cur.dim() < min_dim) continue;
    auto res = is_irreducible(cur, rng, cfg);
    if (res.irreducible) {
      out.push_back({std::move(cur), std::move(*res.certificate)});
      continue;
    }
    auto sq = sub_quotient(cur, res.witness);
    stack.push_back(std::move(sq.quot));
    stack.push_back(std::move(sq.sub));
  }
  return out;
}

}  // namespace

CompositionFactors chop(const MatRep& r, Rng& rng, const MeataxeConfig& config) {
  auto pieces = split_all(r, 0, rng, config);
  struct Group {
    Piece piece;
    std::size_t mult;
    std::optional<Fingerprint> fp;
  };
  std::vector<Group> groups;
  for (auto& pc : pieces) {
    std::optional<Fingerprint> fp;
    bool merged = false;
    for (auto& g : groups) {
      if (g.piece.rep.dim() != pc.rep.dim()) continue;
      if (!g.fp) g.fp = fingerprint(g.piece.rep);
      if (!fp) fp = fingerprint(pc.rep);
      if (*g.fp != *fp) continue;
      if (!are_isomorphic(g.piece.rep, g.piece.cert, pc.rep))
        throw FingerprintAmbiguity("chop: non-isomorphic factors of dimension " + std::to_string(pc.rep.dim()) +
                                   " share a fingerprint");
      ++g.mult;
      merged = true;
      break;
    }
    if (!merged) groups.push_back({std::move(pc), 1, std::move(fp)});
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const Group& a, const Group& b) { return a.piece.rep.dim() < b.piece.rep.dim(); });
  CompositionFactors cf;
  for (auto& g : groups) cf.factors.push_back({std::move(g.piece.rep), g.mult, std::move(g.piece.cert)});
  if (cf.total_dim() != r.dim()) throw Error("chop: factor dimensions do not add up");
  return cf;
}

MatRep find_factor_of_dim(const MatRep& r, std::size_t d, Rng& rng, const MeataxeConfig& config) {
  if (d == 0 || d > r.dim())
    throw FactorNotFound("no composition factor of dimension " + std::to_string(d) + " in a module of dimension " +
                         std::to_string(r.dim()));
  auto pieces = split_all(r, d, rng, config);
  std::vector<MatRep> hits;
  for (auto& pc : pieces)
    if (pc.rep.dim() == d) hits.push_back(std::move(pc.rep));
  if (hits.empty()) throw FactorNotFound("no composition factor of dimension " + std::to_string(d));
  if (hits.size() > 1)
    throw FactorNotUnique(std::to_string(hits.size()) + " composition factors of dimension " + std::to_string(d));
  return std::move(hits.front());
}

}  // namespace unisep
