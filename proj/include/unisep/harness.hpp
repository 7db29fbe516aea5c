#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "unisep/jordan.hpp"
#include "unisep/meataxe.hpp"
#include "unisep/presets.hpp"
#include "unisep/symplectic.hpp"

namespace unisep {

const char* version() noexcept;

struct RunConfig {
  std::string preset = "sp10";
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::size_t budget = 32000;
  std::size_t saturation = 20000;
  std::string out;  // JSON report path; empty for none
  MeataxeConfig meataxe;
};

/// Applies a flat key=value file (keys: preset, seed, workers, budget,
/// saturation, out; '#' starts a comment) on top of `base`.
RunConfig load_config_file(const std::string& path, RunConfig base = {});
RunConfig parse_config(std::string_view text, RunConfig base = {});

struct Report {
  nlohmann::json json;
  std::string text;
  bool ok = true;  // every hard assertion held
};

using Logger = std::function<void(const std::string&)>;

nlohmann::json to_json(const JordanType& t);
nlohmann::json to_json(const HesselinkLabel& l);

/// Unipotency, order, natural-module Jordan type and label of a word.
Report cmd_classify(const Preset& p, std::string_view word, const RunConfig& cfg);

/// Jordan types of the preset's words u and u' on every row of the rank-5
/// table: built within the budget, predicted for w1+w2+w3+w4, reference
/// otherwise. Fails unless u and u' agree on every built or predicted row and
/// built rows match the reference.
Report cmd_table3(const Preset& p, const RunConfig& cfg, const Logger& log = {});

/// Collects class labels and reports pairs with equal Jordan types on all
/// fundamental modules L(w_1), ..., L(w_l).
Report cmd_separate(const Preset& p, const RunConfig& cfg, const Logger& log = {});

/// Chops a module given by an expression:
///   E := nat | ext(E, i) | tensor(E, E) | dual(E) | L(digits) | file(path)
Report cmd_chop(const Preset& p, std::string_view expr, const RunConfig& cfg);

/// Dumps the collected class labels with witnesses.
Report cmd_labels(const Preset& p, const RunConfig& cfg);

/// Builds the module described by a chop expression (budget enforced).
MatRep evaluate_module_expr(const Preset& p, std::string_view expr, const RunConfig& cfg);

}  // namespace unisep
