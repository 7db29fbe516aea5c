#include <doctest.h>

#include <sstream>

#include "oracle.hpp"
#include "unisep/error.hpp"
#include "unisep/gf/linalg.hpp"
#include "unisep/presets.hpp"
#include "unisep/rep.hpp"

using namespace unisep;
using gf::Matrix;

TEST_CASE("word parsing and printing") {
  const GroupWord w = GroupWord::parse("B4AB6AB5A");
  CHECK(w.letters().size() == 6);
  CHECK(w.length() == 18);
  CHECK(w.to_string() == "B4AB6AB5A");
  CHECK(GroupWord::parse(" B 4 A ") == GroupWord::parse("B4A"));
  CHECK(GroupWord::parse("AAB").to_string() == "A2B");
  CHECK(GroupWord::parse("").empty());
  CHECK_THROWS_AS(GroupWord::parse("A0"), ParseError);
  CHECK_THROWS_AS(GroupWord::parse("4A"), ParseError);
  CHECK_THROWS_AS(GroupWord::parse("A-1"), ParseError);
}

TEST_CASE("word algebra") {
  const GroupWord a = GroupWord::parse("AB2");
  CHECK((a * GroupWord::parse("B3A")).to_string() == "AB5A");
  CHECK(a.pow(3).to_string() == "AB2AB2AB2");
  CHECK(a.pow(0).empty());
  CHECK(GroupWord::parse("AB10A").reduced({{'A', 3}, {'B', 10}}).to_string() == "A2");
  // Vanishing letters let neighbours merge and reduce again.
  CHECK(GroupWord::parse("AB10A").reduced({{'A', 2}, {'B', 10}}).empty());
  CHECK(GroupWord::parse("B13").reduced({{'B', 10}}).to_string() == "B3");
}

TEST_CASE("word evaluation is left to right") {
  const Preset p = load_preset("sp10");
  const Matrix a = p.gens.gen(0), b = p.gens.gen(1);
  CHECK(evaluate_word(p.gens, GroupWord::parse("AB2")) == a * b * b);
  CHECK(evaluate_word(p.gens, GroupWord()).is_identity());
  CHECK_THROWS_AS(evaluate_word(p.gens, GroupWord::parse("C")), DomainError);
}

TEST_CASE("representation validation") {
  const Matrix i2 = Matrix::identity(2, 2);
  CHECK_THROWS_AS(MatRep({'A'}, {Matrix(2, 2, 2)}), SingularMatrix);
  CHECK_THROWS_AS(MatRep({'A', 'A'}, {i2, i2}), DomainError);
  CHECK_THROWS_AS(MatRep({'A', 'B'}, {i2, Matrix::identity(2, 3)}), DimensionError);
  CHECK_THROWS_AS(MatRep({'A', 'B'}, {i2, Matrix::identity(3, 2)}), PrimeMismatch);
  CHECK_THROWS_AS(MatRep({}, {}), DimensionError);
  CHECK(MatRep::trivial({'A', 'B'}, 2, 3).dim() == 3);
}

TEST_CASE("constructions") {
  const Preset p = load_preset("sp6");
  const MatRep& v = p.gens;
  const MatRep t = tensor(v, v);
  CHECK(t.dim() == 36);
  CHECK(oracle::from_gf(t.gen(1)) == oracle::kronecker(oracle::from_gf(v.gen(1)), oracle::from_gf(v.gen(1))));
  const MatRep s = direct_sum(v, MatRep::trivial(v.names(), 2, 2));
  CHECK(s.dim() == 8);
  const MatRep d = dual(v);
  CHECK(d.gen(0) * transpose(v.gen(0)) == Matrix::identity(2, 6));
  CHECK(dual(d) == v);
  // Homomorphism: words evaluate consistently in every construction.
  const GroupWord w = GroupWord::parse("AB3AB");
  CHECK(evaluate_word(t, w) == gf::kronecker(evaluate_word(v, w), evaluate_word(v, w)));
}

TEST_CASE("exterior powers") {
  CHECK(colex_subsets(4, 2) ==
        std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
  Rng rng(3);
  for (unsigned p : {2u, 3u}) {
    const Matrix a = Matrix::random_invertible(p, 6, rng), b = Matrix::random_invertible(p, 6, rng);
    for (std::size_t i = 1; i <= 6; ++i) {
      const Matrix ea = exterior_power(a, i), eb = exterior_power(b, i);
      CHECK(exterior_power(a * b, i) == ea * eb);  // functoriality
    }
    CHECK(exterior_power(a, 1) == a);
    CHECK(exterior_power(a, 6).rows() == 1);
    // Top power is the determinant.
    CHECK(exterior_power(a, 6)(0, 0) != 0);
  }
  const Preset p = load_preset("sp10");
  CHECK(exterior_power(p.gens, 2).dim() == 45);
  CHECK_THROWS_AS(exterior_power(p.gens, 11), DomainError);
  CHECK_THROWS_AS(exterior_power(p.gens, 0), DomainError);
}

TEST_CASE("spinning") {
  const Preset p = load_preset("sp6");
  const MatRep e2 = exterior_power(p.gens, 2);
  // The symplectic form, as a vector of the second exterior power's dual,
  // spans an invariant line in the dual.
  Matrix seed(2, 1, 6);
  seed.set(0, 0, 1);
  CHECK(spin(p.gens, seed).rows() == 6);
  Matrix x(2, 1, 15);
  x.set(0, 0, 1);
  const Matrix s = spin(e2, x);
  CHECK(s.rows() >= 1);
  CHECK(s.rows() <= 15);
  for (const auto& g : e2.gens()) CHECK(gf::rank(vstack(s, transpose(g * transpose(s)))) == s.rows());
}

TEST_CASE("sub and quotient actions") {
  const Preset p = load_preset("sp6");
  const MatRep e2 = exterior_power(p.gens, 2);
  // Find a proper invariant subspace of the 15-dimensional module by
  // spinning basis vectors.
  Matrix sub;
  for (std::size_t i = 0; i < 15 && sub.empty(); ++i) {
    Matrix x(2, 1, 15);
    x.set(0, i, 1);
    const Matrix s = spin(e2, x);
    if (s.rows() < 15) sub = s;
  }
  REQUIRE_FALSE(sub.empty());
  const SubQuotient sq = sub_quotient(e2, sub);
  CHECK(sq.sub.dim() + sq.quot.dim() == 15);
  // The pieces are representations: relations of the group survive.
  const GroupWord w = GroupWord::parse("AB");
  for (const MatRep* r : {&sq.sub, &sq.quot}) {
    CHECK(gf::power(r->gen(0), 2).is_identity());
    CHECK(gf::power(evaluate_word(*r, w), 15).is_identity());
  }
  Matrix bad(2, 1, 15);
  bad.set(0, 14, 1);
  if (spin(e2, bad).rows() != 1) CHECK_THROWS_AS(sub_quotient(e2, bad), DomainError);
}

TEST_CASE("representation file round trip") {
  const Preset p = load_preset("sp4");
  std::stringstream ss;
  write_rep(ss, p.gens);
  CHECK(read_rep(ss) == p.gens);
  std::stringstream bad("2 4 1\ngen\n");
  CHECK_THROWS_AS(read_rep(bad), ParseError);
}
