#include <doctest.h>

#include "unisep/error.hpp"
#include "unisep/weights.hpp"

using namespace unisep;

TEST_CASE("weights") {
  const Weight w = Weight::parse("10110");
  CHECK(w.rank() == 5);
  CHECK(w.to_string() == "10110");
  CHECK(w.support() == std::vector<std::size_t>{1, 3, 4});
  CHECK(w.is_restricted(2));
  CHECK_FALSE(Weight::parse("0200").is_restricted(2));
  CHECK(Weight::fundamental(5, 2) == Weight::parse("01000"));
  CHECK(Weight::fundamental(3, 1) + Weight::fundamental(3, 2) == Weight::parse("110"));
  CHECK(Weight::zero(4).is_zero());
  CHECK_THROWS_AS(Weight::parse("1a0"), ParseError);
  CHECK_THROWS_AS(Weight::fundamental(3, 0), DomainError);
  CHECK_THROWS_AS(Weight::fundamental(3, 4), DomainError);
  CHECK_THROWS_AS(Weight::parse("10") + Weight::parse("100"), DimensionError);
}

TEST_CASE("steinberg decomposition") {
  CHECK(steinberg_decompose(Weight::parse("10110"), 2) == std::vector<TwistedWeight>{{Weight::parse("10110"), 0}});
  const auto d = steinberg_decompose(Weight::parse("3021"), 2);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == TwistedWeight{Weight::parse("1001"), 0});
  CHECK(d[1] == TwistedWeight{Weight::parse("1010"), 1});
  CHECK(steinberg_decompose(Weight::parse("000"), 2) == std::vector<TwistedWeight>{{Weight::parse("000"), 0}});
  CHECK(steinberg_decompose(Weight::parse("40"), 2) == std::vector<TwistedWeight>{{Weight::parse("10"), 2}});
}

TEST_CASE("type C split") {
  const auto [h, t] = type_c_split(Weight::parse("11011"));
  CHECK(h == Weight::parse("11010"));
  CHECK(t == Weight::parse("00001"));
  CHECK_THROWS_AS(type_c_split(Weight::parse("20")), DomainError);
}

TEST_CASE("built-in tables") {
  const DimensionTable t = DimensionTable::builtin(5);
  CHECK(t.rows().size() == 17);
  CHECK(t.rows().front() == Weight::parse("10000"));
  CHECK(t.at(Weight::parse("01010")).dim == 3124);
  CHECK(t.at(Weight::parse("10010")).tilting);
  CHECK(t.at(Weight::parse("00001")).reference == JordanType::parse("2^4, 6^4"));
  for (const auto& [w, e] : t.entries())
    if (e.reference) CHECK(e.reference->dimension() == e.dim);
  CHECK(DimensionTable::builtin(2).at(Weight::parse("11")).dim == 16);
  CHECK_THROWS_AS(t.at(Weight::parse("00011")), DomainError);
  CHECK_THROWS_AS(DimensionTable::builtin(6), DomainError);
}

TEST_CASE("build plans") {
  const DimensionTable t = DimensionTable::builtin(5);
  const BuildPlan nat = build_plan(Weight::parse("10000"), t);
  CHECK(nat.steps.size() == 1);
  CHECK(nat.max_dim() == 10);
  CHECK(build_plan(Weight::parse("01000"), t).max_dim() == 45);
  CHECK(build_plan(Weight::parse("00000"), t).steps.back().dim == 1);
  CHECK(build_plan(Weight::parse("01010"), t).max_dim() == 44 * 164);
  CHECK(build_plan(Weight::parse("01100"), t).max_dim() == 44 * 100);
  CHECK(build_plan(Weight::parse("00110"), t).max_dim() == 100 * 164);
  CHECK(build_plan(Weight::parse("11010"), t).max_dim() == 10 * 3124);
  CHECK(build_plan(Weight::parse("11100"), t).max_dim() == 10 * 2708);
  // Exterior powers are planned once even when several factors need them.
  const BuildPlan p = build_plan(Weight::parse("11010"), t);
  CHECK(p.steps.back().yields == Weight::parse("11010"));
  std::size_t ext4 = 0;
  for (const auto& s : p.steps) ext4 += s.kind == StepKind::ExteriorPower && s.param == 4;
  CHECK(ext4 == 1);
  CHECK_FALSE(p.to_string().empty());
  CHECK_THROWS_AS(build_plan(Weight::parse("11110"), t), DomainError);
  CHECK_THROWS_AS(build_plan(Weight::parse("00011"), t), DomainError);
  CHECK_THROWS_AS(build_plan(Weight::parse("1100"), t), DimensionError);
}

TEST_CASE("block predictors") {
  CHECK(steinberg_block_predictor(4, 16) == JordanType::parse("4^4"));
  CHECK(c_l_presteinberg_predictor(8, 1048576) == JordanType::parse("8^131072"));
  CHECK(c_l_presteinberg_predictor(4, 12) == JordanType::parse("4^3"));
  CHECK_THROWS_AS(c_l_presteinberg_predictor(2, 16), DomainError);
  CHECK_THROWS_AS(c_l_presteinberg_predictor(6, 12), DomainError);
  CHECK_THROWS_AS(steinberg_block_predictor(8, 12), DomainError);
  CHECK(presteinberg_weight(5) == Weight::parse("11110"));
  CHECK(presteinberg_weight(3) == Weight::parse("110"));
}
