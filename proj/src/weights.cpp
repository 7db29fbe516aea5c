#include "unisep/weights.hpp"

#include <algorithm>
#include <sstream>

#include "unisep/error.hpp"

namespace unisep {

Weight Weight::fundamental(std::size_t rank, std::size_t i) {
  if (i < 1 || i > rank) throw DomainError("fundamental weight index out of range");
  std::vector<unsigned> a(rank, 0);
  a[i - 1] = 1;
  return Weight(std::move(a));
}

Weight Weight::parse(std::string_view digits) {
  std::vector<unsigned> a;
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError("weight: expected a digit string such as 10100");
    a.push_back(unsigned(c - '0'));
  }
  if (a.empty()) throw ParseError("weight: empty");
  return Weight(std::move(a));
}

bool Weight::is_zero() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](unsigned x) { return x == 0; });
}

bool Weight::is_restricted(unsigned p) const noexcept {
  return std::all_of(a_.begin(), a_.end(), [p](unsigned x) { return x < p; });
}

std::vector<std::size_t> Weight::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i]) s.push_back(i + 1);
  return s;
}

std::string Weight::to_string() const {
  std::string s;
  for (unsigned x : a_) {
    if (x > 9) {
      std::ostringstream os;
      os << '[';
      for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i];
      os << ']';
      return os.str();
    }
    s += char('0' + x);
  }
  return s;
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw DimensionError("weights of different rank");
  std::vector<unsigned> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.a_[i] + b.a_[i];
  return Weight(std::move(c));
}

std::vector<TwistedWeight> steinberg_decompose(const Weight& lambda, unsigned p) {
  if (p < 2) throw DomainError("steinberg_decompose: p must be a prime");
  std::vector<TwistedWeight> out;
  std::vector<unsigned> rest = lambda.coeffs();
  for (unsigned twist = 0; std::any_of(rest.begin(), rest.end(), [](unsigned x) { return x; }); ++twist) {
    std::vector<unsigned> digit(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) {
      digit[i] = rest[i] % p;
      rest[i] /= p;
    }
    Weight w(std::move(digit));
    if (!w.is_zero()) out.push_back({std::move(w), twist});
  }
  if (out.empty()) out.push_back({Weight::zero(lambda.rank()), 0});
  return out;
}

std::pair<Weight, Weight> type_c_split(const Weight& lambda) {
  if (!lambda.is_restricted(2)) throw DomainError("type_c_split: weight is not 2-restricted");
  if (lambda.rank() == 0) throw DomainError("type_c_split: rank 0");
  std::vector<unsigned> head = lambda.coeffs();
  std::vector<unsigned> tail(lambda.rank(), 0);
  tail.back() = head.back();
  head.back() = 0;
  return {Weight(std::move(head)), Weight(std::move(tail))};
}

// ------------------------------------------------------------------ table

void DimensionTable::insert(const Weight& w, TableEntry e) {
  if (w.rank() != rank_) throw DimensionError("dimension table: weight of wrong rank");
  if (!entries_.count(w)) order_.push_back(w);
  entries_[w] = std::move(e);
}

const TableEntry& DimensionTable::at(const Weight& w) const {
  auto it = entries_.find(w);
  if (it == entries_.end()) throw DomainError("weight " + w.to_string() + " is not in the dimension table");
  return it->second;
}

std::vector<Weight> DimensionTable::rows() const { return order_; }

DimensionTable DimensionTable::builtin(std::size_t rank) {
  DimensionTable t(rank);
  auto add = [&](const char* w, std::size_t dim, bool tilting = false, const char* ref = nullptr) {
    TableEntry e{dim, tilting, std::nullopt};
    if (ref) e.reference = JordanType::parse(ref);
    t.insert(Weight::parse(w), std::move(e));
  };
  switch (rank) {
    case 1:
      add("0", 1, true);
      add("1", 2, true);
      break;
    case 2:
      add("00", 1, true);
      add("10", 4, true);
      add("01", 4);
      add("11", 16, true);
      break;
    case 3:
      add("000", 1, true);
      add("100", 6, true);
      add("010", 14);
      add("001", 8);
      add("110", 64);
      break;
    case 4:
      add("0000", 1, true);
      add("1000", 8, true);
      add("0100", 26);
      add("0010", 48);
      add("0001", 16);
      break;
    case 5:
      add("10000", 10, true, "2^2, 6");
      add("01000", 44, true, "1^2, 2^2, 6^5, 8");
      add("00100", 100, false, "2^2, 6^8, 8^6");
      add("00010", 164, false, "2^8, 6^6, 8^14");
      add("00001", 32, false, "2^4, 6^4");
      add("11000", 320, true, "2^16, 6^16, 8^24");
      add("10100", 670, false, "2^8, 4, 6^23, 8^64");
      add("10010", 1408, true, "2^32, 6^32, 8^144");
      add("01100", 2708, false, "2^36, 6^34, 8^304");
      add("01010", 3124, false, "2^6, 4^6, 6^16, 8^374");
      add("00110", 8832, false, "2^32, 6^32, 8^1072");
      add("11100", 17920, true, "2^128, 6^128, 8^2112");
      add("11010", 22408, false, "2^24, 4^36, 6^44, 8^2744");
      add("10110", 52710, false, "2^38, 4^14, 6^54, 7^2, 8^6530");
      add("01110", 183040, true, "2^64, 6^64, 8^22816");
      add("11110", 1048576, true, "8^131072");
      add("00000", 1, true, "1");
      break;
    default:
      throw DomainError("no built-in dimension table for rank " + std::to_string(rank));
  }
  return t;
}

// ------------------------------------------------------------------- plans

std::size_t BuildPlan::max_dim() const {
  std::size_t m = 0;
  for (const auto& s : steps) m = std::max(m, s.dim);
  return m;
}

std::string BuildPlan::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    os << '#' << i << " = ";
    switch (s.kind) {
      case StepKind::NaturalModule:
        os << "natural";
        break;
      case StepKind::ExteriorPower:
        os << "ext(#" << s.sources[0] << ", " << s.param << ')';
        break;
      case StepKind::Tensor:
        os << "tensor(#" << s.sources[0] << ", #" << s.sources[1] << ')';
        break;
      case StepKind::ChopToDim:
        os << "chop(#" << s.sources[0] << ", " << s.param << ')';
        break;
    }
    os << "  [dim " << s.dim;
    if (s.yields) os << ", L(" << s.yields->to_string() << ')';
    os << "]\n";
  }
  return os.str();
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

class Planner {
 public:
  Planner(const DimensionTable& t) : table_(t), l_(t.rank()) {}

  std::size_t module(const Weight& mu) {
    if (auto it = made_.find(mu); it != made_.end()) return it->second;
    std::size_t idx;
    const auto [head, tail] = type_c_split(mu);
    const auto hs = head.support();
    if (mu.is_zero()) {
      idx = ext(natural(), 2 * l_);
    } else if (!tail.is_zero() && !head.is_zero()) {
      idx = tensor(module(head), module(tail));
    } else if (hs.size() <= 1) {
      const std::size_t i = mu.support().front();
      idx = i == 1 ? natural() : chop(ext(natural(), i), table_.at(mu).dim);
    } else if (hs.size() == 2) {
      idx = chop(tensor(module(Weight::fundamental(l_, hs[0])), module(Weight::fundamental(l_, hs[1]))),
                 table_.at(mu).dim);
    } else if (hs.size() == 3) {
      const Weight rest = Weight::fundamental(l_, hs[1]) + Weight::fundamental(l_, hs[2]);
      idx = chop(tensor(module(Weight::fundamental(l_, hs[0])), module(rest)), table_.at(mu).dim);
    } else {
      throw DomainError("build_plan: no recipe for L(" + mu.to_string() + ")");
    }
    if (steps_[idx].dim != table_.at(mu).dim)
      throw DomainError("build_plan: recipe for L(" + mu.to_string() + ") has dimension " +
                        std::to_string(steps_[idx].dim) + ", table says " + std::to_string(table_.at(mu).dim));
    steps_[idx].yields = mu;
    made_[mu] = idx;
    return idx;
  }

  std::vector<BuildStep> take() { return std::move(steps_); }

 private:
  const DimensionTable& table_;
  std::size_t l_;
  std::vector<BuildStep> steps_;
  std::map<Weight, std::size_t> made_;
  std::optional<std::size_t> natural_;
  std::map<std::size_t, std::size_t> ext_;

  std::size_t push(BuildStep s) {
    steps_.push_back(std::move(s));
    return steps_.size() - 1;
  }
  std::size_t natural() {
    if (!natural_) natural_ = push({StepKind::NaturalModule, {}, 0, 2 * l_, std::nullopt});
    return *natural_;
  }
  std::size_t ext(std::size_t src, std::size_t i) {
    if (i == 1) return src;
    if (auto it = ext_.find(i); it != ext_.end()) return it->second;
    return ext_[i] = push({StepKind::ExteriorPower, {src}, i, binomial(steps_[src].dim, i), std::nullopt});
  }
  std::size_t tensor(std::size_t a, std::size_t b) {
    return push({StepKind::Tensor, {a, b}, 0, steps_[a].dim * steps_[b].dim, std::nullopt});
  }
  std::size_t chop(std::size_t src, std::size_t d) {
    if (steps_[src].dim == d) return src;
    return push({StepKind::ChopToDim, {src}, d, d, std::nullopt});
  }
};

}  // namespace

BuildPlan build_plan(const Weight& lambda, const DimensionTable& table) {
  if (lambda.rank() != table.rank()) throw DimensionError("build_plan: weight rank differs from table rank");
  if (!lambda.is_restricted(2)) throw DomainError("build_plan: weight is not 2-restricted");
  table.at(lambda);
  Planner pl(table);
  pl.module(lambda);
  return {lambda, pl.take()};
}

// -------------------------------------------------------------- predictors

namespace {

bool is_power_of_two(std::uint64_t x) { return x && !(x & (x - 1)); }

}  // namespace

JordanType steinberg_block_predictor(std::uint64_t order, std::size_t dim) {
  if (order == 0 || dim % order) throw DomainError("predictor: order does not divide the dimension");
  return JordanType({{std::size_t(order), dim / order}});
}

JordanType c_l_presteinberg_predictor(std::uint64_t order, std::size_t dim) {
  if (!is_power_of_two(order) || order <= 2) throw DomainError("predictor: requires unipotent order 2^k > 2");
  return steinberg_block_predictor(order, dim);
}

Weight presteinberg_weight(std::size_t rank) {
  if (rank < 2) throw DomainError("presteinberg_weight: rank must be at least 2");
  std::vector<unsigned> a(rank, 1);
  a.back() = 0;
  return Weight(std::move(a));
}

}  // namespace unisep
