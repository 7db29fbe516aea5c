#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unisep/jordan.hpp"

namespace unisep {

/// Dominant weight a_1 w_1 + ... + a_l w_l in fundamental-weight coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<unsigned> coeffs) : a_(std::move(coeffs)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<unsigned>(rank, 0)); }
  /// The fundamental weight w_i (1-based).
  static Weight fundamental(std::size_t rank, std::size_t i);
  /// Digit string such as "10100"; each character is one coefficient.
  static Weight parse(std::string_view digits);

  std::size_t rank() const noexcept { return a_.size(); }
  const std::vector<unsigned>& coeffs() const noexcept { return a_; }
  unsigned operator[](std::size_t i) const { return a_.at(i); }
  bool is_zero() const noexcept;
  bool is_restricted(unsigned p) const noexcept;
  /// 1-based indices i with a_i != 0.
  std::vector<std::size_t> support() const;
  std::string to_string() const;

  friend Weight operator+(const Weight& a, const Weight& b);
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<unsigned> a_;
};

struct TwistedWeight {
  Weight weight;        // p-restricted
  unsigned twist = 0;   // Frobenius exponent
  friend bool operator==(const TwistedWeight&, const TwistedWeight&) = default;
};

/// lambda = sum_i p^i lambda_i with p-restricted lambda_i; zero digits are
/// omitted except that the zero weight yields [(0, 0)].
std::vector<TwistedWeight> steinberg_decompose(const Weight& lambda, unsigned p);

/// For a 2-restricted weight of type C_l: (a_1 w_1 + ... + a_{l-1} w_{l-1}, a_l w_l).
std::pair<Weight, Weight> type_c_split(const Weight& lambda);

struct TableEntry {
  std::size_t dim = 0;
  bool tilting = false;
  /// Published Jordan type of the counterexample pair, when known.
  std::optional<JordanType> reference;
};

/// Dimensions of the 2-restricted irreducibles of C_l that the planner needs.
class DimensionTable {
 public:
  DimensionTable() = default;
  explicit DimensionTable(std::size_t rank) : rank_(rank) {}

  /// rank 5: the sixteen weights with a_5 = 0 or support {5}, plus zero;
  /// ranks 1-4: frozen bootstrap data (fundamental weights and a few sums).
  static DimensionTable builtin(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  void insert(const Weight& w, TableEntry e);
  bool contains(const Weight& w) const { return entries_.count(w) != 0; }
  /// Throws DomainError when absent.
  const TableEntry& at(const Weight& w) const;
  const std::map<Weight, TableEntry>& entries() const noexcept { return entries_; }
  /// Rows in the order of the published table (rank 5 only; otherwise sorted).
  std::vector<Weight> rows() const;

 private:
  std::size_t rank_ = 0;
  std::map<Weight, TableEntry> entries_;
  std::vector<Weight> order_;
};

enum class StepKind { NaturalModule, ExteriorPower, Tensor, ChopToDim };

struct BuildStep {
  StepKind kind;
  std::vector<std::size_t> sources;  // indices of earlier steps
  std::size_t param = 0;             // exterior degree or target dimension
  std::size_t dim = 0;               // dimension of the step's result
  std::optional<Weight> yields;      // set when the result is some L(mu)
};

struct BuildPlan {
  Weight target;
  std::vector<BuildStep> steps;
  std::size_t max_dim() const;
  std::string to_string() const;
};

/// Recipe realizing L(lambda) from the natural module. Throws DomainError if
/// a weight the recipe needs is missing from the table or the support has
/// more than three weights below w_l.
BuildPlan build_plan(const Weight& lambda, const DimensionTable& table);

/// (p^k)^(dim / p^k); DomainError unless p^k divides dim.
JordanType steinberg_block_predictor(std::uint64_t order, std::size_t dim);

/// All blocks equal to the order for L(w_1 + ... + w_{l-1}) in type C_l,
/// p = 2; requires order 2^k > 2 dividing dim.
JordanType c_l_presteinberg_predictor(std::uint64_t order, std::size_t dim);

/// w_1 + ... + w_{l-1}.
Weight presteinberg_weight(std::size_t rank);

}  // namespace unisep
