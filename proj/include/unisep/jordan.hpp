#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unisep/gf/matrix.hpp"

namespace unisep {

struct JordanBlock {
  std::size_t size;
  std::size_t multiplicity;
  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// Multiset of Jordan block sizes of a unipotent map, written (d1^n1, ..., dt^nt)
/// with d1 < ... < dt.
class JordanType {
 public:
  JordanType() = default;
  /// Blocks may come in any order and repeat; they are merged and sorted.
  explicit JordanType(std::vector<JordanBlock> blocks);
  static JordanType from_sizes(const std::vector<std::size_t>& sizes);
  /// Accepts "(2^2, 6)", "2^2, 6", "1^2 2^2 6^5 8" and similar.
  static JordanType parse(std::string_view text);

  const std::vector<JordanBlock>& blocks() const noexcept { return blocks_; }
  std::size_t dimension() const noexcept;
  std::size_t block_count() const noexcept;
  std::size_t largest() const noexcept { return blocks_.empty() ? 0 : blocks_.back().size; }
  std::string to_string() const;

  friend bool operator==(const JordanType&, const JordanType&) = default;
  friend bool operator<(const JordanType& a, const JordanType& b);

 private:
  std::vector<JordanBlock> blocks_;
};

/// r_k = rank((m - I)^k) for k = 0, 1, ... up to the first zero. Throws
/// DomainError when the sequence stalls above zero (m not unipotent).
std::vector<std::size_t> unipotent_rank_sequence(const gf::Matrix& m);

/// True iff (m - I)^n = 0; DimensionError on non-square input.
bool is_unipotent(const gf::Matrix& m);

/// Block multiplicities from the rank sequence: n_k = r_{k-1} - 2 r_k + r_{k+1}.
JordanType jordan_type(const gf::Matrix& m);

/// Smallest p^k with m^(p^k) = I.
std::uint64_t unipotent_order(const gf::Matrix& m);
/// p^ceil(log_p d_max) for the largest block of t.
std::uint64_t order_of_type(const JordanType& t, unsigned p);

/// Jordan type of the Kronecker product a (x) b.
JordanType jordan_type_tensor(const gf::Matrix& a, const gf::Matrix& b);

/// I + superdiagonal ones, d x d.
gf::Matrix jordan_block(unsigned p, std::size_t d);
/// Block-diagonal unipotent matrix realizing t.
gf::Matrix jordan_matrix(unsigned p, const JordanType& t);

}  // namespace unisep
