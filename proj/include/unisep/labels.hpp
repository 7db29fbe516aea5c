#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "unisep/jordan.hpp"
#include "unisep/rep.hpp"
#include "unisep/symplectic.hpp"

namespace unisep {

struct SearchParams {
  std::uint64_t seed = 1;
  /// Stop after this many consecutive words without a new label.
  std::size_t saturation = 20000;
  /// Hard cap on words per worker.
  std::size_t max_words = 5'000'000;
  /// Word length in syllables (maximal powers of one generator).
  std::size_t min_length = 1;
  std::size_t max_length = 30;
  std::size_t workers = 1;
};

struct LabelWitness {
  HesselinkLabel label;
  GroupWord word;  // shortest witness found
  JordanType jordan;
  std::uint64_t order = 1;
};

struct LabelSearchResult {
  std::vector<LabelWitness> labels;  // sorted by label
  bool saturated = false;
  std::size_t words_tried = 0;
};

/// Random word whose syllables alternate between generators, with exponents
/// uniform below each generator's order.
GroupWord random_syllable_word(const std::vector<char>& names, const std::vector<std::uint64_t>& orders,
                               std::size_t length, Rng& rng);

/// Multiplicative order of an invertible matrix; throws ResourceLimit above `limit`.
std::uint64_t element_order(const gf::Matrix& g, std::uint64_t limit = 1u << 20);

/// Random search for unipotent classes. Every word g contributes the
/// unipotent elements g^(m 2^j), where m is the odd part of its order.
/// With several workers each runs its own seeded stream and the label sets
/// are merged.
LabelSearchResult collect_labels(const MatRep& rep, const SymplecticForm& form, const SearchParams& params);

}  // namespace unisep
