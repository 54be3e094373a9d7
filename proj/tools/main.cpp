#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "lopp/pipeline.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  bool has_seed = false;
  std::uint64_t seed = 0;
  bool has_depth = false;
  int depth = 0;
  bool has_scale = false;
  double scale = 1.0;
  std::string out_dir;
};

void add_common_flags(CLI::App* sub, CliOptions& opt) {
  sub->add_option("--config", opt.config_path, "JSON config file (default: built-in desk instance)");
  sub->add_option("--seed", opt.seed, "override the config seed")
      ->each([&opt](const std::string&) { opt.has_seed = true; });
  sub->add_option("--depth", opt.depth, "override the word depth N")
      ->each([&opt](const std::string&) { opt.has_depth = true; });
  sub->add_option("--scale", opt.scale, "override the transvection scale t")
      ->each([&opt](const std::string&) { opt.has_scale = true; });
  sub->add_option("--out", opt.out_dir, "artifact output directory");
}

lopp::RunConfig make_config(const CliOptions& opt) {
  lopp::RunConfig cfg = opt.config_path.empty()
                            ? lopp::desk_config()
                            : lopp::load_config(opt.config_path);
  if (opt.has_seed) cfg.seed = opt.seed;
  if (opt.has_depth) cfg.depth = opt.depth;
  if (opt.has_scale) cfg.scale = opt.scale;
  if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lopp: limit sets, thickenings and proper-action audits for "
               "affine Lorentzian groups"};
  app.require_subcommand(1);

  CliOptions opt;
  int (*handler)(const lopp::RunConfig&) = nullptr;

  auto* lemmas = app.add_subcommand(
      "check-lemmas", "run the randomized identity suite and write a report");
  add_common_flags(lemmas, opt);
  lemmas->callback([&] { handler = lopp::cmd_check_lemmas; });

  auto* limit = app.add_subcommand(
      "limit-set", "sample the limit set and write CSV (plus SVG for n=3)");
  add_common_flags(limit, opt);
  limit->callback([&] { handler = lopp::cmd_limit_set; });

  auto* domain = app.add_subcommand(
      "find-domain", "build the thickening and search for a point avoiding it");
  add_common_flags(domain, opt);
  domain->callback([&] { handler = lopp::cmd_find_domain; });

  auto* audit = app.add_subcommand(
      "audit", "count word images returning a ball around the domain point");
  add_common_flags(audit, opt);
  audit->callback([&] { handler = lopp::cmd_audit; });

  auto* pipeline = app.add_subcommand(
      "pipeline", "full run: certify, sample, thicken, search, audit");
  add_common_flags(pipeline, opt);
  pipeline->callback([&] { handler = lopp::cmd_pipeline; });

  CLI11_PARSE(app, argc, argv);

  try {
    return handler(make_config(opt));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
