// catrep: command-line front end.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace catrep;

int main(int argc, char** argv) {
  cli::JobConfig config;
  std::string cat, field;

  CLI::App app{"Truncated modules over FI, OI, FI_G and OI_G: shift, derivative, homology and regularity"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cat", cat, "category: fi, oi, fi_g, oi_g");
  app.add_option("--group", config.group, "group for fi_g/oi_g: Z/m, cyclic:m or table:...");
  app.add_option("--field", field, "q or fp:<prime>");
  app.add_option("--horizon", config.horizon, "top degree computed (default: file header, else 6)");
  app.add_option("--format", config.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--depth", config.depth, "homological depth")->capture_default_str();
  app.add_option("--max-steps", config.max_steps, "steps of the U^n chain")->capture_default_str();
  app.add_option("--seed", config.seed, "seed for random suites")->capture_default_str();
  app.add_option("--max-dim", config.max_dim, "cap on resolution dimensions per degree")->capture_default_str();

  const std::map<std::string, std::string> commands{
      {"info", "dimensions and generating degree"},
      {"hilbert", "polynomial fit of the Hilbert function"},
      {"homology", "Tor groups, hd_i and regularity"},
      {"decompose", "U^n chain and singular/regular split"},
      {"shift", "S, K, D dimensions and key-sequence check"},
      {"probe-sd", "compare SDV with DSV"},
      {"verify", "regularity inequalities for V, SV, DV"},
      {"oracle", "U^n chain against the annihilator description"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", config.path, "presentation file")->required();
    if (name == "info") sub->add_flag("--emit-normalized", config.emit_normalized, "print the normalized presentation");
    if (name == "verify" || name == "fuzz") {
      sub->add_option("--N", config.N, "offset N in reg(SM(s)) <= s + N")->capture_default_str();
      sub->add_option("--hypothesis-bound", config.hypothesis_bound, "largest s checked")->capture_default_str();
    }
  }
  auto* fuzz = app.add_subcommand("fuzz", "random presentations through the invariant battery");
  fuzz->add_option("--count", config.count, "number of presentations")->capture_default_str();
  fuzz->add_option("--N", config.N, "offset N in reg(SM(s)) <= s + N")->capture_default_str();
  fuzz->add_option("--hypothesis-bound", config.hypothesis_bound, "largest s checked")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kParseError;
  }
  config.command = app.get_subcommands().front()->get_name();
  try {
    if (!cat.empty()) config.kind = parse_kind(cat);
    if (!field.empty()) config.field = FieldSpec::parse(field);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kParseError;
  }
  return cli::run(config, std::cout, std::cerr);
}
