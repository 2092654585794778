#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wreathmix/cli.hpp"

namespace {

void add_common(CLI::App* cmd, wreathmix::RunConfig& cfg, bool needs_out) {
  cmd->add_option("--group", cfg.group, "group to color with: cyclic:m, symmetric:m, or cayley:<file>")
      ->capture_default_str();
  cmd->add_option("--n", cfg.n, "number of cards")->capture_default_str();
  auto* out = cmd->add_option("--out", cfg.out, "output file (or prefix for multi-file commands)");
  if (needs_out) out->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random walk laboratory for recolor-and-transpose-top shuffles"};
  app.require_subcommand(1);

  wreathmix::RunConfig cfg;
  std::string mode = "rational";

  CLI::App* spectrum = app.add_subcommand("spectrum", "write the full eigenvalue table");
  add_common(spectrum, cfg, true);

  CLI::App* scan = app.add_subcommand(
      "exact-scan", "distances to uniform for every step count up to --kmax");
  add_common(scan, cfg, true);
  scan->add_option("--kmax", cfg.kmax, "largest step count")->capture_default_str();
  scan->add_option("--mode", mode, "arithmetic: rational or float")
      ->check(CLI::IsMember({"rational", "float"}))
      ->capture_default_str();
  scan->add_flag("--exact-output", cfg.exact_output, "write rationals as num/den instead of decimals");

  CLI::App* mc = app.add_subcommand("mc-scan", "simulate chains: moment scan and collection tails");
  add_common(mc, cfg, true);
  mc->add_option("--kmax", cfg.kmax, "largest step count for the moment scan")->capture_default_str();
  mc->add_option("--trials", cfg.trials, "independent chains per estimate")->capture_default_str();
  mc->add_option("--seed", cfg.seed, "base seed; reruns with equal seeds match exactly")
      ->capture_default_str();

  CLI::App* bounds = app.add_subcommand("bounds", "closed-form mixing bounds per step count");
  add_common(bounds, cfg, true);
  bounds->add_option("--kmax", cfg.kmax, "largest step count")->capture_default_str();
  bounds->add_option("--a-const", cfg.a_const, "constant in the coupling bound")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "check exact identities of the model");
  add_common(verify, cfg, false);
  verify->add_option("--kmax", cfg.kmax, "largest step count exercised by the identities")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  cfg.mode = mode == "float" ? wreathmix::NumMode::floating : wreathmix::NumMode::rational;
  if (spectrum->parsed()) cfg.command = wreathmix::Command::spectrum;
  if (scan->parsed()) cfg.command = wreathmix::Command::exact_scan;
  if (mc->parsed()) cfg.command = wreathmix::Command::mc_scan;
  if (bounds->parsed()) cfg.command = wreathmix::Command::bounds;
  if (verify->parsed()) cfg.command = wreathmix::Command::verify;

  return wreathmix::run(cfg, std::cout);
}
