#include <doctest.h>

#include <map>
#include <set>

#include "oracle.hpp"
#include "unisep/error.hpp"
#include "unisep/labels.hpp"
#include "unisep/presets.hpp"
#include "unisep/symplectic.hpp"

using namespace unisep;
using gf::Matrix;

TEST_CASE("form validation") {
  CHECK_NOTHROW(SymplecticForm::anti_diagonal(2, 10));
  CHECK_NOTHROW(SymplecticForm::anti_diagonal(3, 4));
  CHECK_THROWS_AS(SymplecticForm::anti_diagonal(2, 3), DimensionError);
  CHECK_THROWS_AS(SymplecticForm(Matrix::identity(2, 2)), DomainError);                 // diagonal
  CHECK_THROWS_AS(SymplecticForm(Matrix::from_rows(3, {{0, 1}, {1, 0}})), DomainError);  // symmetric
  CHECK_THROWS_AS(SymplecticForm(Matrix(2, 2, 2)), DomainError);                         // degenerate
  const auto g = SymplecticForm::anti_diagonal(3, 4).gram();
  CHECK((g + transpose(g)).is_zero());
}

TEST_CASE("hesselink label text form") {
  const HesselinkLabel l = HesselinkLabel::parse("(2_1^2, 6_3)");
  CHECK(l.to_string() == "(2_1^2, 6_3)");
  CHECK(l.jordan_type() == JordanType::parse("(2^2, 6)"));
  CHECK(HesselinkLabel::parse("(2_0^2, 6_3)") != l);
  CHECK_THROWS_AS(HesselinkLabel::parse("(2^2, 6_3)"), ParseError);
}

TEST_CASE("labels of the sp10 words") {
  const Preset p = load_preset("sp10");
  const Matrix u = evaluate_word(p.gens, p.words.at("u"));
  const Matrix v = evaluate_word(p.gens, p.words.at("u'"));
  CHECK(is_isometry(u, p.form));
  CHECK(is_isometry(v, p.form));
  CHECK(hesselink_label(u, p.form).to_string() == "(2_1^2, 6_3)");
  CHECK(hesselink_label(v, p.form).to_string() == "(2_0^2, 6_3)");
  CHECK(chi(u, p.form, 2) == 1);
  CHECK(chi(v, p.form, 2) == 0);
  CHECK(chi(u, p.form, 6) == 3);
}

TEST_CASE("chi rejects bad input") {
  const Preset p = load_preset("sp4");
  CHECK_THROWS_AS(chi(Matrix::from_rows(2, {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), p.form, 1),
                  DomainError);  // not an isometry
  CHECK_THROWS_AS(chi(p.gens.gen(1), p.form, 1), DomainError);  // B has odd order part
}

TEST_CASE("a transvection has chi 1 on its block of size 2") {
  // x -> x + beta(x, e1) e1 on the anti-diagonal form of dimension 4.
  const auto form = SymplecticForm::anti_diagonal(2, 4);
  const Matrix t = Matrix::from_rows(2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}});
  REQUIRE(is_isometry(t, form));
  CHECK(hesselink_label(t, form).to_string() == "(1_0^2, 2_1)");
}

TEST_CASE("labels are constant on Sp4(2) conjugacy classes") {
  const Preset p = load_preset("sp4");
  const auto elems = oracle::enumerate_group(p.gens.gens());
  REQUIRE(elems.size() == 720);
  std::vector<oracle::Mat> om, oinv;
  for (const auto& g : elems) {
    om.push_back(oracle::from_gf(g));
    oinv.push_back(oracle::inverse(om.back()));
  }
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < om.size(); ++i) index[om[i].a] = i;

  std::vector<int> cls(elems.size(), -1);
  int ncls = 0;
  std::map<int, std::set<std::string>> labels_of_class;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!is_unipotent(elems[i])) continue;
    if (cls[i] < 0) {
      for (std::size_t g = 0; g < om.size(); ++g)
        cls[index.at(oracle::mul(oracle::mul(oinv[g], om[i]), om[g]).a)] = ncls;
      ++ncls;
    }
    const std::string l = hesselink_label(elems[i], p.form).to_string();
    labels_of_class[cls[i]].insert(l);
    labels.insert(l);
  }
  // Sp4(2) = S6 has six classes of 2-elements; the algebraic group has five
  // unipotent classes.
  CHECK(ncls == 6);
  for (const auto& [c, ls] : labels_of_class) CHECK(ls.size() == 1);
  CHECK(labels == std::set<std::string>{"(1_0^4)", "(1_0^2, 2_1)", "(2_0^2)", "(2_1^2)", "(4_2)"});
}
