#include <chrono>
#include <sstream>

#include "unisep/builder.hpp"
#include "unisep/error.hpp"

namespace unisep {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

ModuleBuilder::ModuleBuilder(MatRep natural, DimensionTable table, std::uint64_t seed, std::size_t budget,
                             MeataxeConfig config)
    : natural_(std::move(natural)), table_(std::move(table)), seed_(seed), budget_(budget), config_(config) {
  if (natural_.dim() != 2 * table_.rank())
    throw DimensionError("module builder: natural module dimension does not match the table rank");
}

bool ModuleBuilder::fits(const Weight& mu) const { return plan(mu).max_dim() <= budget_; }

std::uint64_t ModuleBuilder::chop_seed(const Weight& mu) const { return mix_seed(seed_, fnv1a(mu.to_string())); }

std::shared_ptr<const MatRep> ModuleBuilder::lookup(const Weight& w) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(w);
  return it == cache_.end() ? nullptr : it->second;
}

void ModuleBuilder::store(const Weight& w, std::shared_ptr<const MatRep> m) {
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.emplace(w, m);
  if (!inserted && !(*it->second == *m))
    throw Error("module builder: two different modules computed for L(" + w.to_string() + ")");
}

std::shared_ptr<const MatRep> ModuleBuilder::build(const Weight& mu) {
  if (auto hit = lookup(mu)) return hit;
  const BuildPlan p = plan(mu);
  if (p.max_dim() > budget_)
    throw BudgetExceeded("L(" + mu.to_string() + ") needs an intermediate of dimension " +
                         std::to_string(p.max_dim()) + " > budget " + std::to_string(budget_));

  std::vector<std::shared_ptr<const MatRep>> done(p.steps.size());
  std::function<std::shared_ptr<const MatRep>(std::size_t)> eval = [&](std::size_t i) {
    if (done[i]) return done[i];
    const BuildStep& s = p.steps[i];
    if (s.yields)
      if (auto hit = lookup(*s.yields)) return done[i] = hit;
    const auto t0 = std::chrono::steady_clock::now();
    std::shared_ptr<const MatRep> out;
    switch (s.kind) {
      case StepKind::NaturalModule:
        out = std::make_shared<const MatRep>(natural_);
        break;
      case StepKind::ExteriorPower:
        out = std::make_shared<const MatRep>(exterior_power(*eval(s.sources[0]), s.param));
        break;
      case StepKind::Tensor:
        out = std::make_shared<const MatRep>(tensor(*eval(s.sources[0]), *eval(s.sources[1])));
        break;
      case StepKind::ChopToDim: {
        const auto src = eval(s.sources[0]);
        Rng rng(chop_seed(*s.yields));
        out = std::make_shared<const MatRep>(find_factor_of_dim(*src, s.param, rng, config_));
        break;
      }
    }
    if (log_ && s.kind != StepKind::NaturalModule) {
      const auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      std::ostringstream os;
      os << "step " << i << " of L(" << mu.to_string() << "): dim " << out->dim() << " in " << ms << " ms";
      log_(os.str());
    }
    if (s.yields) store(*s.yields, out);
    return done[i] = out;
  };
  return eval(p.steps.size() - 1);
}

JordanType jordan_on_weight(const Weight& lambda, const GroupWord& w, ModuleBuilder& builder) {
  const auto parts = steinberg_decompose(lambda, 2);
  std::size_t total = 1;
  for (const auto& tw : parts) {
    total *= builder.table().at(tw.weight).dim;
    if (!builder.fits(tw.weight))
      throw BudgetExceeded("L(" + tw.weight.to_string() + ") does not fit the budget " +
                           std::to_string(builder.budget()));
  }
  if (total > builder.budget())
    throw BudgetExceeded("L(" + lambda.to_string() + ") has dimension " + std::to_string(total) + " > budget " +
                         std::to_string(builder.budget()));
  gf::Matrix image;
  for (const auto& tw : parts) {
    const auto m = builder.build(tw.weight);
    gf::Matrix g = evaluate_word(*m, w);
    image = image.rows() == 0 && image.cols() == 0 ? std::move(g) : gf::kronecker(image, g);
  }
  return jordan_type(image);
}

}  // namespace unisep
