#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "unisep/gf/matrix.hpp"

namespace unisep {

/// A word in named generators, e.g. B^4 A B^6 A B^5 A. Symbols are single
/// ASCII letters; adjacent equal symbols are merged.
class GroupWord {
 public:
  struct Letter {
    char symbol;
    std::uint64_t exponent;
    friend bool operator==(const Letter&, const Letter&) = default;
  };

  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters);

  /// Grammar: (<letter><optional decimal exponent>)*, whitespace ignored.
  static GroupWord parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  /// Total number of generator applications (sum of exponents).
  std::uint64_t length() const noexcept;
  std::string to_string() const;

  GroupWord operator*(const GroupWord& other) const;
  GroupWord pow(std::uint64_t k) const;
  /// Exponents reduced modulo the given generator orders; vanishing letters
  /// are dropped and neighbours re-merged.
  GroupWord reduced(const std::map<char, std::uint64_t>& orders) const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Letter> letters_;
  void normalize();
};

/// A matrix representation: named invertible generator images of a common
/// dimension over a common prime field.
class MatRep {
 public:
  MatRep() = default;
  /// Validates squareness, common shape and prime, invertibility and symbols.
  MatRep(std::vector<char> names, std::vector<gf::Matrix> gens);
  /// Skips the invertibility check (for constructions that preserve it).
  static MatRep trusted(std::vector<char> names, std::vector<gf::Matrix> gens);
  /// dim-dimensional trivial representation.
  static MatRep trivial(std::vector<char> names, unsigned prime, std::size_t dim = 1);

  unsigned prime() const noexcept { return prime_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_gens() const noexcept { return gens_.size(); }
  const std::vector<gf::Matrix>& gens() const noexcept { return gens_; }
  const gf::Matrix& gen(std::size_t i) const { return gens_.at(i); }
  const std::vector<char>& names() const noexcept { return names_; }
  /// Throws DomainError for an unknown symbol.
  std::size_t index_of(char symbol) const;

  friend bool operator==(const MatRep&, const MatRep&) = default;

 private:
  unsigned prime_ = 2;
  std::size_t dim_ = 0;
  std::vector<char> names_;
  std::vector<gf::Matrix> gens_;
  void validate_shape() const;
};

/// Ordered product of generator powers, left to right.
gf::Matrix evaluate_word(const MatRep& rep, const GroupWord& w);

/// Generator-wise Kronecker product.
MatRep tensor(const MatRep& a, const MatRep& b);
/// Generator-wise block diagonal sum.
MatRep direct_sum(const MatRep& a, const MatRep& b);
/// Generator-wise inverse transpose.
MatRep dual(const MatRep& r);

/// i-th exterior power of a matrix on the basis of i-subsets in colex order;
/// entry (S, T) is the minor with rows S and columns T.
gf::Matrix exterior_power(const gf::Matrix& g, std::size_t i);
MatRep exterior_power(const MatRep& r, std::size_t i);
/// The i-subsets of {0..n-1} in colexicographic order.
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t i);

/// Basis (as matrix rows) of the smallest subspace containing the seed rows
/// and closed under every generator (acting on column vectors).
gf::Matrix spin(const std::vector<gf::Matrix>& gens, const gf::Matrix& seeds);
gf::Matrix spin(const MatRep& r, const gf::Matrix& seeds);
/// Same closure for operators acting on row vectors from the right (v -> v h).
/// Returns the basis in the semi-echelon form built during spinning.
gf::Matrix spin_right(const std::vector<gf::Matrix>& ops, const gf::Matrix& seeds);

struct SubQuotient {
  MatRep sub;
  MatRep quot;
};

/// Induced actions on an invariant subspace (in the given basis, rows of
/// `basis`) and on the quotient, whose coordinates are the standard basis
/// vectors completing the subspace greedily by first extendable index.
/// Throws DomainError if the rows are dependent or do not span an invariant
/// subspace.
SubQuotient sub_quotient(const MatRep& r, const gf::Matrix& basis);

// File format: "p dim ngens", then per generator a line "gen <symbol>"
// followed by the matrix in the gf text format.
void write_rep(std::ostream& os, const MatRep& r);
/// Throws ParseError on malformed input.
MatRep read_rep(std::istream& is);

}  // namespace unisep
