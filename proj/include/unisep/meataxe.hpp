#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unisep/error.hpp"
#include "unisep/gf/matrix.hpp"
#include "unisep/gf/poly.hpp"
#include "unisep/random.hpp"
#include "unisep/rep.hpp"

namespace unisep {

class FactorNotFound : public Error {
 public:
  using Error::Error;
};

class FactorNotUnique : public Error {
 public:
  using Error::Error;
};

/// Two factors share a fingerprint but are not isomorphic.
class FingerprintAmbiguity : public Error {
 public:
  using Error::Error;
};

struct MeataxeConfig {
  /// Random algebra elements tried per module before giving up.
  std::size_t max_elements = 50;
  /// Char-poly factors of larger degree are ignored.
  std::size_t max_factor_degree = 6;
  /// Candidate factors examined per algebra element.
  std::size_t factors_per_element = 3;
  /// Terms in a random algebra element.
  std::size_t min_terms = 3;
  std::size_t max_terms = 8;
  std::size_t max_word_length = 6;
  /// Memory for memoized word images per module.
  std::size_t word_cache_bytes = std::size_t(1) << 30;
};

/// One term c * w of an algebra element.
struct AlgebraTerm {
  gf::Elem coeff;
  GroupWord word;
  friend bool operator==(const AlgebraTerm&, const AlgebraTerm&) = default;
};

/// Draws random algebra elements of one representation, memoizing word images.
class AlgebraSampler {
 public:
  AlgebraSampler(const MatRep& rep, MeataxeConfig config = {});

  /// A linear combination of distinct short random words.
  std::vector<AlgebraTerm> random_recipe(Rng& rng) const;
  gf::Matrix evaluate(const std::vector<AlgebraTerm>& recipe);
  gf::Matrix word_image(const GroupWord& w);

 private:
  const MatRep* rep_;
  MeataxeConfig config_;
  std::map<std::string, gf::Matrix> cache_;
  std::size_t cached_bytes_ = 0;
};

/// Convenience wrapper returning only the matrix.
gf::Matrix random_algebra_element(const MatRep& rep, Rng& rng, const MeataxeConfig& config = {});

/// Evidence that a module is irreducible: f is an irreducible factor of the
/// characteristic polynomial of theta with nullity(f(theta)) = deg f, a kernel
/// vector spins to the whole space, and a kernel vector of f(theta)^T spins to
/// the whole dual space under the transposed generators.
struct IrreducibilityCertificate {
  std::vector<AlgebraTerm> theta;
  gf::Poly factor;
  std::size_t nullity = 0;
  gf::Matrix vector;       // 1 x dim
  gf::Matrix dual_vector;  // 1 x dim
};

struct IrreducibilityResult {
  bool irreducible = false;
  std::optional<IrreducibilityCertificate> certificate;
  /// Basis of a proper nonzero invariant subspace when reducible.
  gf::Matrix witness;
};

/// Throws ResourceLimit when no decision is reached within the configured
/// number of algebra elements.
IrreducibilityResult is_irreducible(const MatRep& r, Rng& rng, const MeataxeConfig& config = {});

/// Re-checks a certificate from scratch.
bool verify_certificate(const MatRep& r, const IrreducibilityCertificate& cert);

/// Nullity sequences of (g - 1)^k, k = 1, 2, ... until stable, for every
/// generator and for the probe words AB, ABB, AABAB in the first two symbols.
using Fingerprint = std::vector<std::vector<std::size_t>>;
Fingerprint fingerprint(const MatRep& r);

/// Standard-basis isomorphism test for irreducible modules; `cert` must
/// certify `a`.
bool are_isomorphic(const MatRep& a, const IrreducibilityCertificate& cert, const MatRep& b);

struct CompositionFactor {
  MatRep rep;
  std::size_t multiplicity = 0;
  IrreducibilityCertificate certificate;
};

struct CompositionFactors {
  std::vector<CompositionFactor> factors;  // sorted by dimension
  std::size_t total_dim() const;
  /// One (dim, multiplicity) pair per isomorphism class, sorted by dim.
  std::vector<std::pair<std::size_t, std::size_t>> dimensions() const;
};

/// Composition factors with multiplicities. Factors of equal dimension are
/// compared by fingerprint and then by an isomorphism test.
CompositionFactors chop(const MatRep& r, Rng& rng, const MeataxeConfig& config = {});

/// The unique composition factor of dimension d. Pieces smaller than d are
/// discarded unsplit, so the search never chops what cannot contain it.
MatRep find_factor_of_dim(const MatRep& r, std::size_t d, Rng& rng, const MeataxeConfig& config = {});

}  // namespace unisep
