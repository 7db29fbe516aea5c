#include "unisep/labels.hpp"

#include <algorithm>
#include <thread>

#include "unisep/error.hpp"

namespace unisep {

GroupWord random_syllable_word(const std::vector<char>& names, const std::vector<std::uint64_t>& orders,
                               std::size_t length, Rng& rng) {
  if (names.empty()) throw DomainError("random word: no generators");
  std::vector<GroupWord::Letter> letters;
  std::size_t prev = names.size();
  for (std::size_t s = 0; s < length; ++s) {
    std::size_t g;
    if (names.size() == 1) {
      g = 0;
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, names.size() - (prev < names.size() ? 2 : 1));
      g = pick(rng);
      if (prev < names.size() && g >= prev) ++g;
    }
    const std::uint64_t hi = orders[g] > 1 ? orders[g] - 1 : 1;
    std::uniform_int_distribution<std::uint64_t> ex(1, hi);
    letters.push_back({names[g], ex(rng)});
    prev = g;
  }
  return GroupWord(std::move(letters));
}

std::uint64_t element_order(const gf::Matrix& g, std::uint64_t limit) {
  if (!g.square()) throw DimensionError("element_order: matrix not square");
  gf::Matrix x = g;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (x.is_identity()) return k;
    x = x * g;
  }
  throw ResourceLimit("element_order: order exceeds " + std::to_string(limit));
}

namespace {

bool shorter(const GroupWord& a, const GroupWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.to_string() < b.to_string();
}

using LabelMap = std::map<HesselinkLabel, LabelWitness>;

bool offer(LabelMap& found, LabelWitness w) {
  auto it = found.find(w.label);
  if (it == found.end()) {
    found.emplace(w.label, std::move(w));
    return true;
  }
  if (shorter(w.word, it->second.word)) it->second = std::move(w);
  return false;
}

struct WorkerResult {
  LabelMap found;
  bool saturated = false;
  std::size_t tried = 0;
};

WorkerResult search(const MatRep& rep, const SymplecticForm& form, const SearchParams& params, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::uint64_t> orders;
  std::map<char, std::uint64_t> order_map;
  for (std::size_t i = 0; i < rep.num_gens(); ++i) {
    orders.push_back(element_order(rep.gen(i)));
    order_map[rep.names()[i]] = orders.back();
  }
  std::uniform_int_distribution<std::size_t> len(params.min_length, params.max_length);
  WorkerResult res;
  std::size_t quiet = 0;
  const gf::Matrix id = gf::Matrix::identity(rep.prime(), rep.dim());
  while (res.tried < params.max_words) {
    const GroupWord w = random_syllable_word(rep.names(), orders, len(rng), rng);
    ++res.tried;
    const gf::Matrix g = evaluate_word(rep, w);
    std::uint64_t m = element_order(g);
    while (m % rep.prime() == 0) m /= rep.prime();
    gf::Matrix x = gf::power(g, m);
    std::uint64_t e = m;
    bool fresh = false;
    while (true) {
      const HesselinkLabel lab = hesselink_label(x, form);
      LabelWitness lw{lab, w.pow(e).reduced(order_map), lab.jordan_type(), order_of_type(lab.jordan_type(), rep.prime())};
      fresh |= offer(res.found, std::move(lw));
      if (x == id) break;
      x = gf::power(x, rep.prime());
      e *= rep.prime();
    }
    quiet = fresh ? 0 : quiet + 1;
    if (quiet >= params.saturation) {
      res.saturated = true;
      break;
    }
  }
  return res;
}

}  // namespace

LabelSearchResult collect_labels(const MatRep& rep, const SymplecticForm& form, const SearchParams& params) {
  if (rep.prime() != form.prime() || rep.dim() != form.dim()) throw DimensionError("collect_labels: rep and form differ");
  for (const auto& g : rep.gens())
    if (!is_isometry(g, form)) throw DomainError("collect_labels: generator is not an isometry");
  if (params.min_length < 1 || params.max_length < params.min_length) throw DomainError("collect_labels: bad lengths");

  const std::size_t nw = std::max<std::size_t>(1, params.workers);
  std::vector<WorkerResult> parts(nw);
  if (nw == 1) {
    parts[0] = search(rep, form, params, params.seed);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nw);
    for (std::size_t i = 0; i < nw; ++i)
      pool.emplace_back([&, i] {
        try {
          parts[i] = search(rep, form, params, mix_seed(params.seed, i));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  LabelMap merged;
  LabelSearchResult out;
  out.saturated = true;
  for (auto& p : parts) {
    for (auto& [k, v] : p.found) offer(merged, std::move(v));
    out.saturated = out.saturated && p.saturated;
    out.words_tried += p.tried;
  }
  for (auto& [k, v] : merged) out.labels.push_back(std::move(v));
  return out;
}

}  // namespace unisep
