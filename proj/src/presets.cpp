#include "unisep/presets.hpp"

#include <tuple>

#include "unisep/error.hpp"
#include "unisep/labels.hpp"

namespace unisep {

namespace {

using gf::Matrix;

// 1-based E_{i,j} added into m.
void add_e(Matrix& m, std::size_t i, std::size_t j) { m.set(i - 1, j - 1, gf::add(m(i - 1, j - 1), 1, 2)); }

// A = I + E_{1,l} + E_{1,2l} + E_{l+1,2l};
// B = sum_{i<l} E_{i+1,i} + E_{2l,l} + sum_{l<i<2l} E_{i,i+1} + E_{1,l+1}.
std::pair<Matrix, Matrix> pattern_generators(std::size_t l) {
  const std::size_t n = 2 * l;
  Matrix a = Matrix::identity(2, n);
  add_e(a, 1, l);
  add_e(a, 1, n);
  add_e(a, l + 1, n);
  Matrix b(2, n, n);
  for (std::size_t i = 1; i < l; ++i) add_e(b, i + 1, i);
  add_e(b, n, l);
  for (std::size_t i = l + 1; i < n; ++i) add_e(b, i, i + 1);
  add_e(b, 1, l + 1);
  return {a, b};
}

struct Recorded {
  std::size_t rank;
  std::uint64_t order_a, order_b, order_ab;
};

Recorded recorded(std::string_view name) {
  if (name == "sp2") return {1, 2, 2, 3};
  if (name == "sp4") return {2, 2, 6, 6};
  if (name == "sp6") return {3, 2, 6, 15};
  if (name == "sp8") return {4, 2, 8, 17};
  if (name == "sp10") return {5, 2, 10, 31};
  throw DomainError("unknown preset '" + std::string(name) + "' (expected sp2, sp4, sp6, sp8 or sp10)");
}

}  // namespace

std::vector<std::string> preset_names() { return {"sp2", "sp4", "sp6", "sp8", "sp10"}; }

std::uint64_t symplectic_group_order(std::size_t l, std::uint64_t q) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < l * l; ++i) r *= q;
  std::uint64_t qi = 1;
  for (std::size_t i = 1; i <= l; ++i) {
    qi *= q * q;
    r *= qi - 1;
  }
  return r;
}

Preset load_preset(std::string_view name) {
  const Recorded s = recorded(name);
  Matrix a, b;
  if (s.rank == 1) {
    a = Matrix::from_rows(2, {{1, 1}, {0, 1}});
    b = Matrix::from_rows(2, {{0, 1}, {1, 0}});
  } else {
    std::tie(a, b) = pattern_generators(s.rank);
    // The rank-2 pattern only reaches the derived subgroup of index 2.
    if (s.rank == 2) add_e(b, 2, 4);
  }
  Preset p{std::string(name), s.rank, 2, MatRep({'A', 'B'}, {a, b}), SymplecticForm::anti_diagonal(2, 2 * s.rank),
           {}, symplectic_group_order(s.rank, 2)};
  for (const auto& g : p.gens.gens())
    if (!is_isometry(g, p.form)) throw DomainError("preset " + p.name + ": generator is not an isometry");
  if (element_order(a) != s.order_a || element_order(b) != s.order_b || element_order(a * b) != s.order_ab)
    throw DomainError("preset " + p.name + ": generator orders differ from the recorded values");
  if (s.rank == 5) {
    p.words.emplace("u", GroupWord::parse("B4AB6AB5A"));
    p.words.emplace("u'", GroupWord::parse("BAB2AB4AB3A"));
  }
  return p;
}

}  // namespace unisep
