#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "unisep/error.hpp"
#include "unisep/harness.hpp"

namespace {

struct Flags {
  std::string config;
  std::optional<std::string> preset;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers, budget, saturation;
  std::optional<std::string> out;
  bool quiet = false;
};

unisep::RunConfig resolve(const Flags& f, std::string default_preset) {
  unisep::RunConfig cfg;
  cfg.preset = std::move(default_preset);
  if (!f.config.empty()) cfg = unisep::load_config_file(f.config, cfg);
  if (f.preset) cfg.preset = *f.preset;
  if (f.seed) cfg.seed = *f.seed;
  if (f.workers) cfg.workers = *f.workers;
  if (f.budget) cfg.budget = *f.budget;
  if (f.saturation) cfg.saturation = *f.saturation;
  if (f.out) cfg.out = *f.out;
  return cfg;
}

int emit(const unisep::Report& r, const unisep::RunConfig& cfg) {
  std::cout << r.text;
  if (!cfg.out.empty()) {
    std::ofstream os(cfg.out);
    if (!os) throw unisep::Error("cannot write " + cfg.out);
    os << r.json.dump(2) << '\n';
  }
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unipotent class separation by Jordan types on irreducible modules"};
  app.set_version_flag("--version", std::string(unisep::version()));
  app.require_subcommand(1);

  Flags f;
  auto common = [&f](CLI::App* sc) {
    sc->add_option("--config", f.config, "key=value config file (flags override)");
    sc->add_option("--preset", f.preset, "sp2, sp4, sp6, sp8 or sp10");
    sc->add_option("--seed", f.seed, "64-bit random seed");
    sc->add_option("--workers", f.workers, "worker threads")->check(CLI::PositiveNumber);
    sc->add_option("--budget", f.budget, "largest intermediate module dimension")->check(CLI::PositiveNumber);
    sc->add_option("--saturation", f.saturation, "words without a new label before stopping")
        ->check(CLI::PositiveNumber);
    sc->add_option("--out", f.out, "JSON report path");
    sc->add_flag("-q,--quiet", f.quiet, "no progress on stderr");
  };

  std::string word, expr;
  auto* classify = app.add_subcommand("classify", "order, Jordan type and class label of a word");
  common(classify);
  classify->add_option("word", word, "word in A and B, e.g. B4AB6AB5A")->required();
  auto* table3 = app.add_subcommand("table3", "Jordan types of u and u' on the rank-5 irreducibles");
  common(table3);
  auto* separate = app.add_subcommand("separate", "unipotent classes not separated by fundamental modules");
  common(separate);
  auto* chop = app.add_subcommand("chop", "composition factors of a module expression");
  common(chop);
  chop->add_option("expr", expr, "nat | ext(E,i) | tensor(E,E) | dual(E) | L(digits) | file(path)")->required();
  auto* labels = app.add_subcommand("labels", "class labels with shortest witnesses");
  common(labels);

  CLI11_PARSE(app, argc, argv);

  try {
    const unisep::RunConfig cfg = resolve(f, "sp10");
    const unisep::Preset p = unisep::load_preset(cfg.preset);
    unisep::Logger log;
    if (!f.quiet) log = [](const std::string& s) { std::cerr << s << std::endl; };
    if (classify->parsed()) return emit(unisep::cmd_classify(p, word, cfg), cfg);
    if (table3->parsed()) return emit(unisep::cmd_table3(p, cfg, log), cfg);
    if (separate->parsed()) return emit(unisep::cmd_separate(p, cfg, log), cfg);
    if (chop->parsed()) return emit(unisep::cmd_chop(p, expr, cfg), cfg);
    if (labels->parsed()) return emit(unisep::cmd_labels(p, cfg), cfg);
  } catch (const unisep::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
