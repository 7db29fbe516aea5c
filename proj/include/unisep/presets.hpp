#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "unisep/rep.hpp"
#include "unisep/symplectic.hpp"

namespace unisep {

/// Generators of Sp_{2l}(2) with the anti-diagonal form and named words.
struct Preset {
  std::string name;
  std::size_t rank = 0;
  unsigned prime = 2;
  MatRep gens;
  SymplecticForm form;
  std::map<std::string, GroupWord> words;
  /// Order of the generated group, for verification by tests and tools.
  std::uint64_t group_order = 0;
};

/// "sp2", "sp4", "sp6", "sp8", "sp10". Generators are checked to be
/// isometries of the form and to have their recorded orders.
Preset load_preset(std::string_view name);
std::vector<std::string> preset_names();

/// |Sp_{2l}(q)| = q^(l^2) prod_{i=1..l} (q^(2i) - 1).
std::uint64_t symplectic_group_order(std::size_t l, std::uint64_t q);

}  // namespace unisep
