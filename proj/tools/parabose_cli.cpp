// parabose: Clebsch-Gordan tables, q -> -1 limit scans, dual -1 Hahn data,
// generating functions and the invariant sweep, from the command line.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "parabose/cli_runner.hpp"

namespace {

using parabose::cli::Command;
using parabose::cli::Format;
using parabose::cli::Method;
using parabose::cli::RunConfig;

void add_format(CLI::App* sub, RunConfig& cfg, std::string& out_path) {
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};
  sub->add_option("--format", cfg.output_format, "json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--out", out_path, "write to this file instead of stdout");
}

void add_pair(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.N, "total degree N");
  sub->add_option("--mu1", cfg.mu1, "first representation parameter (> -1/2)");
  sub->add_option("--mu2", cfg.mu2, "second representation parameter (> -1/2)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clebsch-Gordan and limit computations for the parabosonic sl_{-1}(2) algebra"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string out_path;
  std::string tau_text;

  auto* cgc = app.add_subcommand("cgc", "Clebsch-Gordan table for (N, mu1, mu2)");
  add_pair(cgc, cfg);
  const std::map<std::string, Method> methods{{"direct", Method::direct},
                                              {"recurrence", Method::recurrence},
                                              {"genfunc", Method::genfunc},
                                              {"all", Method::all}};
  cgc->add_option("--method", cfg.method, "direct, recurrence, genfunc or all")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  add_format(cgc, cfg, out_path);

  auto* verify = app.add_subcommand("verify", "run the invariant sweep over the built-in grid");
  verify->add_option("--max-n", cfg.max_n, "largest N in the grid (default 12)");
  verify->add_option("--tolerance", cfg.tolerance, "pass threshold for every residual");
  add_format(verify, cfg, out_path);

  auto* qlimit = app.add_subcommand("qlimit", "scan |r_n^2(q=-e^tau) - [n]_{nu-1/2}| as tau -> 0");
  qlimit->add_option("--nu", cfg.nu, "positive integer nu")->required();
  auto* tau_opt = qlimit->add_option("--tau", tau_text, "comma-separated tau values");
  qlimit->add_option("--n-max", cfg.n_max, "largest n in the error max (default 10)");
  add_format(qlimit, cfg, out_path);

  auto* dualhahn = app.add_subcommand("dualhahn", "dual -1 Hahn parameters, recurrence and weights");
  add_pair(dualhahn, cfg);
  add_format(dualhahn, cfg, out_path);

  auto* genfunc = app.add_subcommand("genfunc", "generating functions Phi_k and their checks");
  add_pair(genfunc, cfg);
  add_format(genfunc, cfg, out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return parabose::cli::exit_status::kUsage;
  }

  if (cgc->parsed()) cfg.command = Command::cgc;
  if (verify->parsed()) cfg.command = Command::verify;
  if (qlimit->parsed()) cfg.command = Command::qlimit;
  if (dualhahn->parsed()) cfg.command = Command::dualhahn;
  if (genfunc->parsed()) cfg.command = Command::genfunc;
  if (!out_path.empty()) cfg.output_path = out_path;

  try {
    if (tau_opt->count() > 0) cfg.tau_values = parabose::cli::parse_real_list(tau_text);
  } catch (const parabose::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return parabose::cli::exit_status::kUsage;
  }

  return parabose::cli::run(cfg, std::cout, std::cerr);
}
