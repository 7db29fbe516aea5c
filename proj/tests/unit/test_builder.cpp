#include <doctest.h>

#include <thread>

#include "unisep/builder.hpp"
#include "unisep/error.hpp"
#include "unisep/labels.hpp"
#include "unisep/presets.hpp"

using namespace unisep;

TEST_CASE("fixture dimension tables bootstrap from the planned constructions") {
  Rng rng(1);
  for (const char* name : {"sp2", "sp4", "sp6", "sp8"}) {
    const Preset p = load_preset(name);
    const DimensionTable t = DimensionTable::builtin(p.rank);
    ModuleBuilder b(p.gens, t, 1, 32000);
    for (const auto& w : t.rows()) {
      CAPTURE(name);
      CAPTURE(w.to_string());
      const auto m = b.build(w);
      CHECK(m->dim() == t.at(w).dim);
      CHECK(is_irreducible(*m, rng).irreducible);
    }
  }
}

TEST_CASE("trivial weight and twists") {
  const Preset p = load_preset("sp4");
  ModuleBuilder b(p.gens, DimensionTable::builtin(2), 3, 1000);
  for (const char* w : {"A", "B", "AB", "AB2AB3"})
    CHECK(jordan_on_weight(Weight::parse("00"), GroupWord::parse(w), b) == JordanType::parse("1"));
  GroupWord u;
  SearchParams sp;
  sp.saturation = 200;
  for (const auto& lw : collect_labels(p.gens, p.form, sp).labels)
    if (lw.order == 4) u = lw.word;
  REQUIRE_FALSE(u.empty());
  // Squaring fixes GF(2) entries, so twisted factors act like untwisted ones.
  CHECK(jordan_on_weight(Weight::parse("20"), u, b) == jordan_on_weight(Weight::parse("10"), u, b));
  CHECK(jordan_on_weight(Weight::parse("21"), u, b) == jordan_on_weight(Weight::parse("11"), u, b));
  CHECK(jordan_on_weight(Weight::parse("22"), u, b) == jordan_on_weight(Weight::parse("11"), u, b));
}

TEST_CASE("budget enforcement") {
  const Preset p = load_preset("sp10");
  ModuleBuilder b(p.gens, DimensionTable::builtin(5), 1, 100);
  CHECK(b.fits(Weight::parse("01000")));
  CHECK_FALSE(b.fits(Weight::parse("00100")));
  CHECK_THROWS_AS(jordan_on_weight(Weight::parse("00100"), p.words.at("u"), b), BudgetExceeded);
  CHECK_THROWS_AS(jordan_on_weight(Weight::parse("20010"), p.words.at("u"), b), BudgetExceeded);
  CHECK_THROWS_AS(b.build(Weight::parse("00010")), BudgetExceeded);
}

TEST_CASE("cache and determinism") {
  const Preset p = load_preset("sp6");
  ModuleBuilder a(p.gens, DimensionTable::builtin(3), 17, 32000);
  ModuleBuilder b(p.gens, DimensionTable::builtin(3), 17, 32000);
  const Weight w = Weight::parse("110");
  CHECK(a.build(w) == a.build(w));
  CHECK(*a.build(w) == *b.build(w));
  CHECK(a.chop_seed(w) != a.chop_seed(Weight::parse("010")));

  ModuleBuilder c(p.gens, DimensionTable::builtin(3), 17, 32000);
  std::vector<std::shared_ptr<const MatRep>> got(4);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < got.size(); ++i) pool.emplace_back([&, i] { got[i] = c.build(w); });
  for (auto& t : pool) t.join();
  for (const auto& g : got) CHECK(*g == *a.build(w));
}

TEST_CASE("sp10 fundamental modules on the counterexample pair") {
  const Preset p = load_preset("sp10");
  ModuleBuilder b(p.gens, DimensionTable::builtin(5), 1, 7216);
  for (std::size_t i = 1; i <= 5; ++i) {
    const Weight w = Weight::fundamental(5, i);
    const JordanType tu = jordan_on_weight(w, p.words.at("u"), b);
    CHECK(tu == jordan_on_weight(w, p.words.at("u'"), b));
    CHECK(tu == *b.table().at(w).reference);
  }
}

TEST_CASE("the sp4 Steinberg module has blocks of full size") {
  const Preset p = load_preset("sp4");
  ModuleBuilder b(p.gens, DimensionTable::builtin(2), 1, 1000);
  for (const char* w : {"A", "B3", "AB", "B3AB"}) {
    const GroupWord g = GroupWord::parse(w);
    const gf::Matrix m = evaluate_word(p.gens, g);
    std::uint64_t ord = element_order(m);
    if (ord & (ord - 1)) continue;
    CHECK(jordan_on_weight(Weight::parse("11"), g, b) == steinberg_block_predictor(ord, 16));
  }
}
