#include "unisep/jordan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "unisep/error.hpp"
#include "unisep/gf/linalg.hpp"

namespace unisep {

JordanType::JordanType(std::vector<JordanBlock> blocks) {
  std::map<std::size_t, std::size_t> merged;
  for (const auto& b : blocks) {
    if (b.size == 0) throw DomainError("Jordan block of size 0");
    if (b.multiplicity) merged[b.size] += b.multiplicity;
  }
  for (const auto& [s, m] : merged) blocks_.push_back({s, m});
}

JordanType JordanType::from_sizes(const std::vector<std::size_t>& sizes) {
  std::vector<JordanBlock> b;
  for (auto s : sizes) b.push_back({s, 1});
  return JordanType(std::move(b));
}

JordanType JordanType::parse(std::string_view text) {
  std::vector<JordanBlock> blocks;
  std::size_t i = 0;
  auto read_num = [&](std::size_t& out) {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out = out * 10 + std::size_t(text[i++] - '0');
    return true;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t size = 0, mult = 1;
    if (!read_num(size)) throw ParseError("Jordan type: unexpected '" + std::string(1, c) + "'");
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (!read_num(mult)) throw ParseError("Jordan type: missing multiplicity after '^'");
    }
    if (size == 0 || mult == 0) throw ParseError("Jordan type: sizes and multiplicities must be positive");
    blocks.push_back({size, mult});
  }
  return JordanType(std::move(blocks));
}

std::size_t JordanType::dimension() const noexcept {
  std::size_t d = 0;
  for (const auto& b : blocks_) d += b.size * b.multiplicity;
  return d;
}

std::size_t JordanType::block_count() const noexcept {
  std::size_t n = 0;
  for (const auto& b : blocks_) n += b.multiplicity;
  return n;
}

std::string JordanType::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << ", ";
    os << blocks_[i].size;
    if (blocks_[i].multiplicity != 1) os << '^' << blocks_[i].multiplicity;
  }
  os << ')';
  return os.str();
}

bool operator<(const JordanType& a, const JordanType& b) {
  return std::lexicographical_compare(
      a.blocks_.begin(), a.blocks_.end(), b.blocks_.begin(), b.blocks_.end(),
      [](const JordanBlock& x, const JordanBlock& y) {
        return x.size != y.size ? x.size < y.size : x.multiplicity < y.multiplicity;
      });
}

std::vector<std::size_t> unipotent_rank_sequence(const gf::Matrix& m) {
  if (!m.square()) throw DimensionError("unipotent_rank_sequence: matrix not square");
  const unsigned p = m.prime();
  const gf::Matrix x = add_scalar(m, gf::Elem(p - 1));
  std::vector<std::size_t> r{m.rows()};
  gf::Matrix pw = x;
  while (r.back() != 0) {
    const std::size_t rk = gf::rank(pw);
    if (rk == r.back()) throw DomainError("matrix is not unipotent");
    r.push_back(rk);
    if (rk != 0) pw = pw * x;
  }
  return r;
}

bool is_unipotent(const gf::Matrix& m) {
  if (!m.square()) throw DimensionError("is_unipotent: matrix not square");
  try {
    unipotent_rank_sequence(m);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

JordanType jordan_type(const gf::Matrix& m) {
  const auto r = unipotent_rank_sequence(m);
  std::vector<JordanBlock> blocks;
  std::size_t total = 0;
  for (std::size_t k = 1; k < r.size(); ++k) {
    const long long next = k + 1 < r.size() ? static_cast<long long>(r[k + 1]) : 0;
    const long long mult = static_cast<long long>(r[k - 1]) - 2 * static_cast<long long>(r[k]) + next;
    if (mult < 0) throw Error("jordan_type: negative block multiplicity");
    if (mult > 0) blocks.push_back({k, std::size_t(mult)});
    total += k * std::size_t(mult);
  }
  if (total != m.rows()) throw Error("jordan_type: block sizes do not sum to the dimension");
  return JordanType(std::move(blocks));
}

std::uint64_t order_of_type(const JordanType& t, unsigned p) {
  std::uint64_t q = 1;
  while (q < t.largest()) q *= p;
  return q;
}

std::uint64_t unipotent_order(const gf::Matrix& m) {
  return order_of_type(jordan_type(m), m.prime());
}

JordanType jordan_type_tensor(const gf::Matrix& a, const gf::Matrix& b) {
  if (a.prime() != b.prime()) throw PrimeMismatch("jordan_type_tensor: different primes");
  return jordan_type(gf::kronecker(a, b));
}

gf::Matrix jordan_block(unsigned p, std::size_t d) {
  gf::Matrix j = gf::Matrix::identity(p, d);
  for (std::size_t i = 0; i + 1 < d; ++i) j.set(i, i + 1, 1);
  return j;
}

gf::Matrix jordan_matrix(unsigned p, const JordanType& t) {
  std::vector<gf::Matrix> blocks;
  for (const auto& b : t.blocks())
    for (std::size_t k = 0; k < b.multiplicity; ++k) blocks.push_back(jordan_block(p, b.size));
  if (blocks.empty()) return gf::Matrix(p, 0, 0);
  return gf::block_diagonal(blocks);
}

}  // namespace unisep
