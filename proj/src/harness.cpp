#include "unisep/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "unisep/builder.hpp"
#include "unisep/error.hpp"
#include "unisep/labels.hpp"
#include "unisep/weights.hpp"

namespace unisep {

using nlohmann::json;

const char* version() noexcept { return UNISEP_VERSION; }

// ------------------------------------------------------------------ config

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::uint64_t parse_uint(const std::string& key, const std::string& v) {
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ParseError("config: '" + key + "' expects an unsigned integer");
  return x;
}

}  // namespace

RunConfig parse_config(std::string_view text, RunConfig base) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string val = trim(std::string_view(t).substr(eq + 1));
    if (key == "preset")
      base.preset = val;
    else if (key == "seed")
      base.seed = parse_uint(key, val);
    else if (key == "workers")
      base.workers = std::size_t(parse_uint(key, val));
    else if (key == "budget")
      base.budget = std::size_t(parse_uint(key, val));
    else if (key == "saturation")
      base.saturation = std::size_t(parse_uint(key, val));
    else if (key == "out")
      base.out = val;
    else
      throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

// -------------------------------------------------------------- helpers

json to_json(const JordanType& t) {
  json a = json::array();
  for (const auto& b : t.blocks()) a.push_back({b.size, b.multiplicity});
  return a;
}

json to_json(const HesselinkLabel& l) {
  json a = json::array();
  for (const auto& q : l.parts()) a.push_back({q.size, q.chi, q.multiplicity});
  return a;
}

namespace {

json header(const char* command, const Preset& p, const RunConfig& cfg) {
  return {{"command", command}, {"preset", p.name}, {"seed", cfg.seed}, {"budget", cfg.budget}, {"version", version()}};
}

long long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

// Runs fn(i) for i in [0, n) on up to `workers` threads; rethrows the first error.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

const GroupWord& named_word(const Preset& p, const std::string& key) {
  auto it = p.words.find(key);
  if (it == p.words.end()) throw DomainError("preset " + p.name + " has no word '" + key + "'");
  return it->second;
}

}  // namespace

// -------------------------------------------------------------- classify

Report cmd_classify(const Preset& p, std::string_view word, const RunConfig& cfg) {
  Report r;
  const GroupWord w = GroupWord::parse(word);
  const gf::Matrix g = evaluate_word(p.gens, w);
  const bool uni = is_unipotent(g);
  r.json = header("classify", p, cfg);
  r.json["word"] = w.to_string();
  r.json["unipotent"] = uni;
  r.json["isometry"] = is_isometry(g, p.form);
  std::ostringstream os;
  os << "word      " << (w.empty() ? "(empty)" : w.to_string()) << '\n' << "unipotent " << (uni ? "yes" : "no") << '\n';
  if (uni) {
    const JordanType t = jordan_type(g);
    const HesselinkLabel lab = hesselink_label(g, p.form);
    const std::uint64_t ord = order_of_type(t, p.prime);
    r.json["order"] = ord;
    r.json["jordan_type"] = to_json(t);
    r.json["label"] = to_json(lab);
    os << "order     " << ord << '\n' << "jordan    " << t.to_string() << '\n' << "label     " << lab.to_string() << '\n';
  } else {
    const std::uint64_t ord = element_order(g);
    r.json["order"] = ord;
    r.json["jordan_type"] = nullptr;
    r.json["label"] = nullptr;
    os << "order     " << ord << '\n';
  }
  r.text = os.str();
  return r;
}

// ---------------------------------------------------------------- table3

namespace {

struct RowResult {
  std::string source = "reference";
  std::optional<JordanType> u, v;
  long long ms = 0;
};

}  // namespace

Report cmd_table3(const Preset& p, const RunConfig& cfg, const Logger& log) {
  if (p.rank != 5) throw DomainError("table3 needs the rank-5 preset (sp10)");
  const DimensionTable table = DimensionTable::builtin(5);
  ModuleBuilder builder(p.gens, table, cfg.seed, cfg.budget, cfg.meataxe);
  if (log) builder.set_logger(log);
  const GroupWord& u = named_word(p, "u");
  const GroupWord& v = named_word(p, "u'");
  const std::uint64_t ord_u = unipotent_order(evaluate_word(p.gens, u));
  const std::uint64_t ord_v = unipotent_order(evaluate_word(p.gens, v));
  const Weight pre = presteinberg_weight(5);

  std::vector<Weight> rows;
  for (const auto& w : table.rows())
    if (!w.is_zero()) rows.push_back(w);
  std::vector<RowResult> res(rows.size());

  parallel_for(rows.size(), cfg.workers, [&](std::size_t i) {
    const Weight& w = rows[i];
    const std::size_t dim = table.at(w).dim;
    const auto t0 = std::chrono::steady_clock::now();
    RowResult& rr = res[i];
    if (w == pre) {
      rr.u = c_l_presteinberg_predictor(ord_u, dim);
      rr.v = c_l_presteinberg_predictor(ord_v, dim);
      rr.source = "predicted";
    } else {
      bool fits = false;
      try {
        fits = builder.fits(w);
      } catch (const DomainError&) {
      }
      if (fits) {
        if (log) log("building L(" + w.to_string() + "), dim " + std::to_string(dim));
        rr.u = jordan_on_weight(w, u, builder);
        rr.v = jordan_on_weight(w, v, builder);
        rr.source = "built";
      }
    }
    rr.ms = ms_since(t0);
    if (log) log("row " + w.to_string() + ": " + rr.source + (rr.u ? " " + rr.u->to_string() : std::string()));
  });

  Report r;
  r.json = header("table3", p, cfg);
  r.json["rows"] = json::array();
  std::ostringstream os;
  os << "weight | jordan type | dim | source\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const TableEntry& e = table.at(rows[i]);
    const RowResult& rr = res[i];
    json row{{"weight", rows[i].to_string()}, {"dim", e.dim}, {"tilting", e.tilting}, {"source", rr.source}};
    if (e.reference) row["reference"] = to_json(*e.reference);
    std::string note;
    if (rr.u) {
      const bool same = *rr.u == *rr.v;
      const bool match = e.reference && *rr.u == *e.reference && *rr.v == *e.reference;
      row["jordan_u"] = to_json(*rr.u);
      row["jordan_u_prime"] = to_json(*rr.v);
      row["u_equals_u_prime"] = same;
      row["matches_reference"] = match;
      if (!same) {
        r.ok = false;
        note = "  FAIL: u " + rr.u->to_string() + " != u' " + rr.v->to_string();
      } else if (!match) {
        r.ok = false;
        note = "  FAIL: differs from reference";
      }
    }
    row["elapsed_ms"] = rr.ms;
    r.json["rows"].push_back(std::move(row));
    const std::string type = rr.u ? rr.u->to_string() : e.reference ? e.reference->to_string() : "?";
    os << rows[i].to_string() << " | " << type << " | " << e.dim << (e.tilting ? "*" : "") << " | " << rr.source
       << note << '\n';
  }
  r.json["ok"] = r.ok;
  r.text = os.str();
  return r;
}

// --------------------------------------------------------------- separate

namespace {

struct LabelTypes {
  LabelWitness witness;
  std::vector<JordanType> types;  // on L(w_1), ..., L(w_l)
};

std::vector<LabelTypes> label_types(const Preset& p, const RunConfig& cfg, const Logger& log, bool& saturated,
                                    std::size_t& words) {
  SearchParams sp;
  sp.seed = cfg.seed;
  sp.saturation = cfg.saturation;
  sp.workers = cfg.workers;
  const auto found = collect_labels(p.gens, p.form, sp);
  saturated = found.saturated;
  words = found.words_tried;
  if (log) log(std::to_string(found.labels.size()) + " labels after " + std::to_string(words) + " words");
  ModuleBuilder builder(p.gens, DimensionTable::builtin(p.rank), cfg.seed, cfg.budget, cfg.meataxe);
  std::vector<LabelTypes> out;
  for (std::size_t i = 1; i <= p.rank; ++i) builder.build(Weight::fundamental(p.rank, i));
  for (const auto& lw : found.labels) {
    LabelTypes lt{lw, {}};
    for (std::size_t i = 1; i <= p.rank; ++i)
      lt.types.push_back(jordan_on_weight(Weight::fundamental(p.rank, i), lw.word, builder));
    out.push_back(std::move(lt));
  }
  return out;
}

}  // namespace

Report cmd_separate(const Preset& p, const RunConfig& cfg, const Logger& log) {
  bool saturated = false;
  std::size_t words = 0;
  const auto lts = label_types(p, cfg, log, saturated, words);
  Report r;
  r.json = header("separate", p, cfg);
  r.json["saturation"] = cfg.saturation;
  r.json["saturated"] = saturated;
  r.json["words_tried"] = words;
  r.json["labels"] = json::array();
  std::ostringstream os;
  os << "labels: " << lts.size() << (saturated ? " (saturated)" : " (NOT saturated)") << '\n';
  for (const auto& lt : lts) {
    json types = json::array();
    for (const auto& t : lt.types) types.push_back(to_json(t));
    r.json["labels"].push_back({{"label", to_json(lt.witness.label)},
                                {"label_text", lt.witness.label.to_string()},
                                {"witness", lt.witness.word.to_string()},
                                {"types", types}});
  }
  json pairs = json::array();
  for (std::size_t i = 0; i < lts.size(); ++i)
    for (std::size_t j = i + 1; j < lts.size(); ++j)
      if (lts[i].types == lts[j].types) {
        pairs.push_back({lts[i].witness.label.to_string(), lts[j].witness.label.to_string()});
        os << "unseparated: " << lts[i].witness.label.to_string() << " ~ " << lts[j].witness.label.to_string() << '\n';
      }
  os << "unseparated pairs: " << pairs.size() << '\n';
  r.json["unseparated"] = pairs;
  r.ok = saturated;
  r.json["ok"] = r.ok;
  r.text = os.str();
  return r;
}

Report cmd_labels(const Preset& p, const RunConfig& cfg) {
  SearchParams sp;
  sp.seed = cfg.seed;
  sp.saturation = cfg.saturation;
  sp.workers = cfg.workers;
  const auto found = collect_labels(p.gens, p.form, sp);
  Report r;
  r.json = header("labels", p, cfg);
  r.json["saturation"] = cfg.saturation;
  r.json["saturated"] = found.saturated;
  r.json["words_tried"] = found.words_tried;
  r.json["labels"] = json::array();
  std::ostringstream os;
  for (const auto& lw : found.labels) {
    r.json["labels"].push_back({{"label", to_json(lw.label)},
                                {"label_text", lw.label.to_string()},
                                {"jordan_type", to_json(lw.jordan)},
                                {"order", lw.order},
                                {"witness", lw.word.to_string()}});
    os << std::left << std::setw(28) << lw.label.to_string() << " order " << std::setw(3) << lw.order << " "
       << lw.word.to_string() << '\n';
  }
  os << found.labels.size() << " labels, " << found.words_tried << " words"
     << (found.saturated ? ", saturated" : ", NOT saturated") << '\n';
  r.ok = found.saturated;
  r.json["ok"] = r.ok;
  r.text = os.str();
  return r;
}

// ------------------------------------------------------------------- chop

namespace {

class ExprParser {
 public:
  ExprParser(const Preset& p, std::string_view text, const RunConfig& cfg) : p_(p), s_(text), cfg_(cfg) {}

  MatRep parse() {
    MatRep m = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return m;
  }

 private:
  const Preset& p_;
  std::string_view s_;
  const RunConfig& cfg_;
  std::size_t i_ = 0;
  std::unique_ptr<ModuleBuilder> builder_;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("module expression: " + what + " at offset " + std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  void expect(char c) {
    skip();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  std::string ident() {
    skip();
    const std::size_t a = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    return std::string(s_.substr(a, i_ - a));
  }
  std::size_t number() {
    skip();
    const std::size_t a = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (a == i_) fail("expected a number");
    return std::size_t(std::stoull(std::string(s_.substr(a, i_ - a))));
  }
  void check_budget(std::size_t dim) const {
    if (dim > cfg_.budget)
      throw BudgetExceeded("module of dimension " + std::to_string(dim) + " exceeds budget " +
                           std::to_string(cfg_.budget));
  }

  MatRep expr() {
    const std::string id = ident();
    if (id == "nat") return p_.gens;
    if (id == "ext") {
      expect('(');
      MatRep a = expr();
      expect(',');
      const std::size_t k = number();
      expect(')');
      if (k < 1 || k > a.dim()) fail("exterior degree out of range");
      std::size_t d = 1;
      for (std::size_t j = 1; j <= k; ++j) d = d * (a.dim() - k + j) / j;
      check_budget(d);
      return exterior_power(a, k);
    }
    if (id == "tensor") {
      expect('(');
      MatRep a = expr();
      expect(',');
      MatRep b = expr();
      expect(')');
      check_budget(a.dim() * b.dim());
      return tensor(a, b);
    }
    if (id == "dual") {
      expect('(');
      MatRep a = expr();
      expect(')');
      return dual(a);
    }
    if (id == "L") {
      expect('(');
      skip();
      const std::size_t a = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      const Weight w = Weight::parse(s_.substr(a, i_ - a));
      expect(')');
      if (!builder_)
        builder_ = std::make_unique<ModuleBuilder>(p_.gens, DimensionTable::builtin(p_.rank), cfg_.seed, cfg_.budget,
                                                   cfg_.meataxe);
      return *builder_->build(w);
    }
    if (id == "file") {
      expect('(');
      skip();
      const std::size_t a = i_;
      while (i_ < s_.size() && s_[i_] != ')') ++i_;
      const std::string path = trim(s_.substr(a, i_ - a));
      expect(')');
      std::ifstream in(path);
      if (!in) throw ParseError("cannot open module file " + path);
      MatRep m = read_rep(in);
      if (m.names() != p_.gens.names() || m.prime() != p_.gens.prime())
        throw DomainError("module file " + path + " does not match the preset's generators");
      check_budget(m.dim());
      return m;
    }
    fail(id.empty() ? "expected nat, ext, tensor, dual, L or file" : "unknown constructor '" + id + "'");
  }
};

}  // namespace

MatRep evaluate_module_expr(const Preset& p, std::string_view expr, const RunConfig& cfg) {
  return ExprParser(p, expr, cfg).parse();
}

Report cmd_chop(const Preset& p, std::string_view expr, const RunConfig& cfg) {
  const MatRep m = evaluate_module_expr(p, expr, cfg);
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);
  const CompositionFactors cf = chop(m, rng, cfg.meataxe);
  Report r;
  r.json = header("chop", p, cfg);
  r.json["expression"] = std::string(expr);
  r.json["dim"] = m.dim();
  r.json["factors"] = json::array();
  std::ostringstream os;
  os << std::string(expr) << ": dim " << m.dim() << " =";
  bool first = true;
  for (const auto& [d, mult] : cf.dimensions()) {
    r.json["factors"].push_back({{"dim", d}, {"mult", mult}});
    os << (first ? " " : " + ") << d;
    if (mult > 1) os << "^" << mult;
    first = false;
  }
  os << '\n';
  r.json["elapsed_ms"] = ms_since(t0);
  r.text = os.str();
  return r;
}

}  // namespace unisep
