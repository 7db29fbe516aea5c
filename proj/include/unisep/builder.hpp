#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "unisep/jordan.hpp"
#include "unisep/meataxe.hpp"
#include "unisep/rep.hpp"
#include "unisep/weights.hpp"

namespace unisep {

/// Realizes irreducible modules L(mu) of a symplectic group from its natural
/// representation by executing build plans. Results are cached per weight;
/// the cache is shared between threads and every key is written with one
/// value only (a second, different value is a fatal error).
class ModuleBuilder {
 public:
  ModuleBuilder(MatRep natural, DimensionTable table, std::uint64_t seed, std::size_t budget,
                MeataxeConfig config = {});

  const MatRep& natural() const noexcept { return natural_; }
  const DimensionTable& table() const noexcept { return table_; }
  std::size_t budget() const noexcept { return budget_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// Plan for a 2-restricted weight (no construction).
  BuildPlan plan(const Weight& mu) const { return build_plan(mu, table_); }
  /// True when the plan's largest intermediate fits the budget.
  bool fits(const Weight& mu) const;
  /// Builds (or fetches) L(mu); throws BudgetExceeded when the plan does not fit.
  std::shared_ptr<const MatRep> build(const Weight& mu);

  /// Seed used by the chop that yields L(mu).
  std::uint64_t chop_seed(const Weight& mu) const;

  /// Optional progress callback (message per executed step).
  void set_logger(std::function<void(const std::string&)> log) { log_ = std::move(log); }

 private:
  MatRep natural_;
  DimensionTable table_;
  std::uint64_t seed_;
  std::size_t budget_;
  MeataxeConfig config_;
  std::mutex mu_;
  std::map<Weight, std::shared_ptr<const MatRep>> cache_;
  std::function<void(const std::string&)> log_;

  void store(const Weight& w, std::shared_ptr<const MatRep> m);
  std::shared_ptr<const MatRep> lookup(const Weight& w);
};

/// Jordan type of the word w on L(lambda) for any dominant lambda: the
/// Steinberg factors are built and their images Kronecker-combined (Frobenius
/// twists act trivially on matrices with prime-field entries). Throws
/// BudgetExceeded when any factor plan or the product exceeds the budget.
JordanType jordan_on_weight(const Weight& lambda, const GroupWord& w, ModuleBuilder& builder);

}  // namespace unisep
