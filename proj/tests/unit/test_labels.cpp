#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "unisep/error.hpp"
#include "unisep/labels.hpp"
#include "unisep/presets.hpp"

using namespace unisep;

TEST_CASE("random syllable words alternate and respect orders") {
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const GroupWord w = random_syllable_word({'A', 'B'}, {2, 10}, 1 + std::size_t(t % 30), rng);
    CHECK(w.letters().size() == 1 + std::size_t(t % 30));
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
      const auto& l = w.letters()[i];
      CHECK(l.exponent >= 1);
      CHECK(l.exponent < (l.symbol == 'A' ? 2u : 10u));
      if (i) CHECK(l.symbol != w.letters()[i - 1].symbol);
    }
  }
}

TEST_CASE("element order") {
  const Preset p = load_preset("sp10");
  CHECK(element_order(p.gens.gen(0)) == 2);
  CHECK(element_order(p.gens.gen(1)) == 10);
  CHECK(element_order(gf::Matrix::identity(2, 3)) == 1);
  CHECK_THROWS_AS(element_order(p.gens.gen(1), 5), ResourceLimit);
}

TEST_CASE("sp4 labels: complete and witnessed") {
  const Preset p = load_preset("sp4");
  SearchParams sp;
  sp.saturation = 500;
  const auto res = collect_labels(p.gens, p.form, sp);
  CHECK(res.saturated);
  std::set<std::string> got;
  for (const auto& lw : res.labels) {
    got.insert(lw.label.to_string());
    const gf::Matrix g = evaluate_word(p.gens, lw.word);
    CHECK(hesselink_label(g, p.form) == lw.label);
    CHECK(lw.jordan == lw.label.jordan_type());
    CHECK(lw.order == element_order(g));
  }
  // Exhaustive oracle: every unipotent element of Sp4(2).
  std::set<std::string> all;
  for (const auto& g : oracle::enumerate_group(p.gens.gens()))
    if (is_unipotent(g)) all.insert(hesselink_label(g, p.form).to_string());
  CHECK(got == all);
}

TEST_CASE("label search is reproducible and mergeable") {
  const Preset p = load_preset("sp6");
  SearchParams sp;
  sp.saturation = 300;
  sp.seed = 99;
  const auto a = collect_labels(p.gens, p.form, sp);
  const auto b = collect_labels(p.gens, p.form, sp);
  REQUIRE(a.labels.size() == b.labels.size());
  for (std::size_t i = 0; i < a.labels.size(); ++i) CHECK(a.labels[i].word == b.labels[i].word);
  sp.workers = 2;
  const auto c = collect_labels(p.gens, p.form, sp);
  const auto d = collect_labels(p.gens, p.form, sp);
  REQUIRE(c.labels.size() == d.labels.size());
  for (std::size_t i = 0; i < c.labels.size(); ++i) CHECK(c.labels[i].word == d.labels[i].word);
  CHECK(c.words_tried == d.words_tried);
}

TEST_CASE("label search input checks") {
  const Preset p = load_preset("sp4");
  const Preset q = load_preset("sp6");
  CHECK_THROWS_AS(collect_labels(p.gens, q.form, {}), DimensionError);
  SearchParams sp;
  sp.min_length = 0;
  CHECK_THROWS_AS(collect_labels(p.gens, p.form, sp), DomainError);
}
