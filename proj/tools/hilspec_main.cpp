#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hilspec/cli.hpp"
#include "hilspec/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Spectral laboratory for alternating and symmetric Hilbert-type "
      "matrices: builders, eigensolves, exact-identity checks, Szego "
      "distribution probes, and zeta-constant numerics."};
  app.require_subcommand(1);

  hilspec::RunConfig config;
  std::string n_spec;
  std::string family = "alt";

  const auto add_output = [&](CLI::App* c) {
    c->add_option("--format", config.format, "csv or json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    c->add_option("-o,--output", config.output_path,
                  "output file; '-' or absent writes to stdout");
  };
  const auto add_family = [&](CLI::App* c) {
    c->add_option("--family", family,
                  "alt | alt-quant | osc-cos | osc-sin | hilbert | "
                  "hilbert-quant | cosec-quant | prime")
        ->required();
  };
  const auto add_n = [&](CLI::App* c) {
    c->add_option("--n", n_spec, "dimension: single n, range a..b, or comma list")
        ->required();
  };
  const auto add_theta = [&](CLI::App* c) {
    c->add_option("--theta", config.theta, "angle in [0, pi/2] (default pi/3)");
  };
  const auto add_p = [&](CLI::App* c) {
    c->add_option("--p", config.p, "prime modulus (default 2)");
  };
  const auto add_tol = [&](CLI::App* c) {
    c->add_option("--tol", config.tol, "tolerance override (default per check)");
  };

  CLI::App* cmd = app.add_subcommand("build", "emit a family matrix entrywise");
  add_family(cmd);
  add_n(cmd);
  add_theta(cmd);
  add_p(cmd);
  add_output(cmd);

  cmd = app.add_subcommand("spectrum", "eigenvalues of a family matrix");
  add_family(cmd);
  add_n(cmd);
  add_theta(cmd);
  add_p(cmd);
  add_tol(cmd);
  add_output(cmd);

  cmd = app.add_subcommand("verify", "check a proved statement, exit 1 on breach");
  cmd->add_option("--theorem", config.theorem,
                  "1 | 2 | 3 | 4 | sym-quant | cosec-quant | det-q | "
                  "eigenbasis | trig-sums | difference | radius | structure")
      ->required();
  add_n(cmd);
  add_theta(cmd);
  add_tol(cmd);
  add_output(cmd);

  cmd = app.add_subcommand("trace", "trace of the squared matrix vs closed forms");
  add_family(cmd);
  add_n(cmd);
  add_theta(cmd);
  add_p(cmd);
  add_output(cmd);

  cmd = app.add_subcommand("conjecture", "numeric probes of the spectral conjectures");
  cmd->add_option("--which", config.which, "1 = lattice fit, 2 = quantized spectrum, 3 = arc split")
      ->required()
      ->check(CLI::Range(1, 3));
  add_n(cmd);
  add_theta(cmd);
  add_tol(cmd);
  add_output(cmd);

  cmd = app.add_subcommand("szego", "limit-distribution moment checks");
  cmd->add_option("--case", config.szego_case, "cos or sin (default cos)")
      ->check(CLI::IsMember({"cos", "sin"}));
  cmd->add_option("--F", config.szego_fn,
                  "test function: sq | quartic | abs | indicator (default sq)");
  cmd->add_option("--a", config.a, "indicator window start");
  cmd->add_option("--b", config.b, "indicator window end");
  add_n(cmd);
  add_theta(cmd);
  add_output(cmd);

  cmd = app.add_subcommand("zeta", "special constants and zero-sum identities");
  cmd->add_option("--op", config.zeta_op,
                  "catalan | alpha | trigamma | zerosum | identity | primelimit")
      ->required();
  cmd->add_option("--eps", config.eps, "catalan tail target (default 1e-12)");
  cmd->add_option("--k", config.k, "alpha index (default 1)");
  cmd->add_option("--k2", config.k2, "zero-sum order, even (default 2)");
  cmd->add_option("--zeros", config.zeros_path, "zeros table file");
  cmd->add_option("--n", n_spec, "dimensions for primelimit (odd)");
  add_p(cmd);
  add_output(cmd);

  cmd = app.add_subcommand("sweep", "per-n spectral summaries over a grid");
  add_family(cmd);
  add_n(cmd);
  add_theta(cmd);
  add_p(cmd);
  add_output(cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (!hilspec::family_from_token(family, config.family)) {
    std::cerr << "error: unknown family '" << family << "'\n";
    return 2;
  }
  if (!n_spec.empty()) {
    try {
      config.n_values = hilspec::parse_n_spec(n_spec);
    } catch (const hilspec::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return hilspec::run_cli(config);
}
