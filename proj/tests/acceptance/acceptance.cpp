// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <CLI11.hpp>

#include <chrono>
#include <deque>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>

#include "oracle.hpp"
#include "unisep/builder.hpp"
#include "unisep/error.hpp"
#include "unisep/gf/linalg.hpp"
#include "unisep/harness.hpp"
#include "unisep/labels.hpp"

using namespace unisep;
using gf::Matrix;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome counterexample_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  const Preset p = load_preset("sp10");
  const Report a = cmd_classify(p, "B4AB6AB5A", {});
  const Report b = cmd_classify(p, "BAB2AB4AB3A", {});
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = a.json["isometry"] == true && b.json["isometry"] == true && a.json["unipotent"] == true &&
                  b.json["unipotent"] == true && a.json["order"] == 8 && b.json["order"] == 8 &&
                  a.json["label"] == json::parse("[[2,1,2],[6,3,1]]") &&
                  b.json["label"] == json::parse("[[2,0,2],[6,3,1]]") && s < 1.0;
  auto label = [](const Report& r) {
    const auto i = r.text.rfind('(');
    return r.text.substr(i, r.text.find('\n', i) - i);
  };
  return {ok, "u " + label(a) + ", u' " + label(b) + ", " + std::to_string(s) + " s"};
}

// Checks the rows of a table3 report: `want_built` must be built and match;
// `want_reference` must be reference-only; 11110 must be predicted.
Outcome check_table(const Report& r, const std::set<std::string>& want_built,
                    const std::set<std::string>& want_reference) {
  std::size_t matched = 0;
  std::string bad;
  for (const auto& row : r.json["rows"]) {
    const std::string w = row["weight"];
    const std::string src = row["source"];
    if (want_built.count(w)) {
      if (src == "built" && row["matches_reference"] == true && row["u_equals_u_prime"] == true)
        ++matched;
      else
        bad += " " + w;
    }
    if (want_reference.count(w) && src != "reference") bad += " " + w + "(not reference)";
    if (w == "11110") {
      if (src == "predicted" && row["jordan_u"] == json::parse("[[8,131072]]") &&
          row["jordan_u_prime"] == json::parse("[[8,131072]]"))
        ++matched;
      else
        bad += " 11110";
    }
  }
  const bool ok = bad.empty() && matched == want_built.size() + 1;
  return {ok, std::to_string(matched) + " rows exact" + (bad.empty() ? "" : ", wrong:" + bad)};
}

Outcome pair_agreement(const std::vector<const Report*>& reports) {
  std::size_t rows = 0;
  std::string bad;
  for (const Report* r : reports) {
    if (!r->ok) bad += " (report failed)";
    for (const auto& row : r->json["rows"])
      if (row["source"] != "reference") {
        ++rows;
        if (row["jordan_u"] != row["jordan_u_prime"]) bad += " " + row["weight"].get<std::string>();
      }
  }
  return {bad.empty() && rows > 0, std::to_string(rows) + " built/predicted rows with u-type = u'-type" + bad};
}

Outcome separation(std::uint64_t seed, std::size_t workers) {
  RunConfig cfg;
  cfg.seed = seed;
  cfg.workers = workers;
  cfg.saturation = 20000;
  std::string detail;
  bool ok = true;
  for (const char* name : {"sp4", "sp6", "sp10"}) {
    cfg.preset = name;
    const Preset p = load_preset(name);
    const Report r = cmd_separate(p, cfg);
    const auto& pairs = r.json["unseparated"];
    detail += std::string(name) + ": " + std::to_string(r.json["labels"].size()) + " labels, " +
              std::to_string(pairs.size()) + " unseparated; ";
    ok = ok && r.json["saturated"] == true;
    if (std::string(name) == "sp10") {
      const std::set<std::string> want{"(2_1^2, 6_3)", "(2_0^2, 6_3)"};
      ok = ok && pairs.size() == 1 &&
           std::set<std::string>{pairs[0][0].get<std::string>(), pairs[0][1].get<std::string>()} == want;
    } else {
      ok = ok && pairs.empty();
    }
  }
  return {ok, detail};
}

Outcome sp4_steinberg() {
  const Preset p = load_preset("sp4");
  ModuleBuilder b(p.gens, DimensionTable::builtin(2), 1, 1000);
  const auto st = b.build(Weight::parse("11"));
  Rng rng(1);
  const CompositionFactors cf = chop(*st, rng);
  if (cf.factors.size() != 1 || cf.factors[0].multiplicity != 1) return {false, "L(11) is not irreducible"};
  // Closure over pairs (natural image, Steinberg image).
  std::set<std::vector<int>> seen;
  std::deque<std::pair<Matrix, Matrix>> q{{Matrix::identity(2, 4), Matrix::identity(2, st->dim())}};
  seen.insert(oracle::from_gf(q.front().first).a);
  std::size_t elements = 0, unipotent = 0, bad = 0;
  while (!q.empty()) {
    auto [g, h] = q.front();
    q.pop_front();
    ++elements;
    if (is_unipotent(g)) {
      ++unipotent;
      const std::uint64_t ord = unipotent_order(g);
      if (jordan_type(h) != steinberg_block_predictor(ord, st->dim())) ++bad;
    }
    for (std::size_t i = 0; i < p.gens.num_gens(); ++i) {
      Matrix g2 = g * p.gens.gen(i);
      if (seen.insert(oracle::from_gf(g2).a).second) q.emplace_back(std::move(g2), h * st->gen(i));
    }
  }
  return {elements == 720 && bad == 0, "dim " + std::to_string(st->dim()) + ", " + std::to_string(elements) +
                                           " elements, " + std::to_string(unipotent) + " unipotent, " +
                                           std::to_string(bad) + " violations"};
}

Outcome sp6_presteinberg(std::uint64_t seed) {
  const Preset p = load_preset("sp6");
  ModuleBuilder b(p.gens, DimensionTable::builtin(3), seed, 32000);
  const Weight w = presteinberg_weight(3);
  SearchParams sp;
  sp.seed = seed;
  const auto labels = collect_labels(p.gens, p.form, sp);
  std::size_t checked = 0, bad = 0;
  for (const auto& lw : labels.labels) {
    if (lw.order <= 2) continue;
    ++checked;
    if (jordan_on_weight(w, lw.word, b) != c_l_presteinberg_predictor(lw.order, b.table().at(w).dim)) ++bad;
  }
  return {labels.saturated && checked > 0 && bad == 0,
          std::to_string(checked) + " witnesses of order > 2 on L(110), " + std::to_string(bad) + " violations"};
}

Outcome oracle_suites() {
  std::mt19937_64 rng(8);
  Rng lrng(8);
  std::size_t fails = 0;
  std::string parts;
  auto mark = [&](const char* tag) {
    static std::size_t before = 0;
    if (fails != before) parts += std::string(" ") + tag;
    before = fails;
  };
  // (a) Jordan types of conjugated Jordan matrices.
  for (unsigned p : {2u, 3u})
    for (int t = 0; t < 250; ++t) {
      const int n = 1 + int(rng() % 40);
      std::vector<std::size_t> sizes;
      for (int left = n; left > 0;) {
        const int s = 1 + int(rng() % std::size_t(std::min(left, 12)));
        sizes.push_back(std::size_t(s));
        left -= s;
      }
      const JordanType want = JordanType::from_sizes(sizes);
      const oracle::Mat c = oracle::random_invertible(p, n, rng);
      const oracle::Mat u = oracle::mul(oracle::mul(oracle::inverse(c), oracle::from_gf(jordan_matrix(p, want))), c);
      fails += jordan_type(oracle::to_gf(u)) != want;
    }
  mark("(a)");
  // (b) Chop dimension sums and direct sums.
  const Preset p6 = load_preset("sp6");
  const MatRep x = exterior_power(p6.gens, 2), y = tensor(p6.gens, p6.gens);
  const auto cx = chop(x, lrng), cy = chop(y, lrng), cs = chop(direct_sum(x, y), lrng);
  std::map<std::size_t, std::size_t> sum, got;
  for (const auto* c : {&cx, &cy})
    for (const auto& [d, m] : c->dimensions()) sum[d] += m;
  for (const auto& [d, m] : cs.dimensions()) got[d] += m;
  fails += cx.total_dim() != x.dim() || cy.total_dim() != y.dim() || got != sum;
  mark("(b)");
  // (c) Labels are class functions on Sp4(2).
  const Preset p4 = load_preset("sp4");
  const auto elems = oracle::enumerate_group(p4.gens.gens());
  std::map<std::vector<int>, std::string> label_of;
  for (const auto& g : elems)
    if (is_unipotent(g)) label_of[oracle::from_gf(g).a] = hesselink_label(g, p4.form).to_string();
  for (const auto& g : elems) {
    const oracle::Mat og = oracle::from_gf(g), gi = oracle::inverse(og);
    for (const auto& [k, lab] : label_of) {
      oracle::Mat u(2, 4, 4);
      u.a = k;
      fails += label_of.at(oracle::mul(oracle::mul(gi, u), og).a) != lab;
    }
  }
  mark("(c)");
  // (d) Packed against scalar arithmetic.
  for (int t = 0; t < 3; ++t) {
    const Matrix a = Matrix::random(2, 200, 200, lrng), b = Matrix::random(2, 200, 200, lrng);
    const auto oa = oracle::from_gf(a), ob = oracle::from_gf(b);
    fails += oracle::from_gf(a * b) != oracle::mul(oa, ob);
    fails += gf::rank(a) != std::size_t(oracle::rank(oa));
    const Matrix ns = gf::nullspace(a);
    fails += !(a * transpose(ns)).is_zero() || ns.rows() + gf::rank(a) != 200;
  }
  mark("(d)");
  return {fails == 0, "500 Jordan types, chop sums, " + std::to_string(elems.size()) +
                          "-element class check, 200x200 packed arithmetic; " + std::to_string(fails) + " failures" + parts};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  bool stretch = false;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::set<int> only;
  app.add_flag("--stretch", stretch, "also run the large table tier (over an hour)");
  app.add_option("--seed", seed);
  app.add_option("--workers", workers);
  app.add_option("--only", only, "criterion numbers to run, e.g. 3,4")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  auto run = [&](int n, const char* name, const std::function<Outcome()>& f) {
    if (!only.empty() && !only.count(n)) return;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    std::cout << "criterion " << n << " " << (o.pass ? "PASS" : "FAIL") << "  " << name << ": " << o.detail << " ["
              << std::fixed << std::setprecision(1) << s << " s]" << std::endl;
  };

  const std::set<std::string> required{"10000", "01000", "00100", "00010", "00001",
                                       "11000", "10100", "10010", "01100", "01010"};
  const Preset sp10 = load_preset("sp10");
  std::optional<Report> req, big;

  run(1, "counterexample identity", counterexample_identity);
  run(2, "table, required tier", [&] {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.workers = workers;
    cfg.budget = 7216;
    req = cmd_table3(sp10, cfg);
    return check_table(*req, required, {"10110", "01110"});
  });
  if (stretch) {
    run(3, "table, stretch tier", [&] {
      RunConfig cfg;
      cfg.seed = seed;
      cfg.workers = workers;
      cfg.budget = 32000;
      big = cmd_table3(sp10, cfg);
      std::set<std::string> want = required;
      want.insert({"00110", "11010", "11100"});
      return check_table(*big, want, {"10110", "01110"});
    });
  } else if (only.empty() || only.count(3)) {
    std::cout << "criterion 3 SKIP  table, stretch tier: pass --stretch (budget 32000, over an hour)" << std::endl;
  }
  run(4, "u and u' agree on every built or predicted row", [&] {
    std::vector<const Report*> rs;
    if (req) rs.push_back(&*req);
    if (big) rs.push_back(&*big);
    if (rs.empty()) {
      RunConfig cfg;
      cfg.seed = seed;
      cfg.budget = 7216;
      req = cmd_table3(sp10, cfg);
      rs.push_back(&*req);
    }
    return pair_agreement(rs);
  });
  run(5, "separation by fundamental modules", [&] { return separation(seed, workers); });
  run(6, "Sp4(2) Steinberg module", sp4_steinberg);
  run(7, "Sp6(2) L(w1+w2) blocks", [&] { return sp6_presteinberg(seed); });
  run(8, "oracle equivalence suites", oracle_suites);
  return all ? 0 : 1;
}
