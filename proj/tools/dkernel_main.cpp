// Command-line front end. Subcommands:
//   psi         exact Psi(s,w;l) tables and Hecke-eigenvalue ratios
//   identities  Ramanujan-style sigma_1/tau identities
//   verify      full exact invariant suite for a weight range
//   periods     normalized period tables and the Manin consistency report
//   numeric     floating-point cross-checks (L-values, Cohen series)
// Exit codes: 0 pass, 1 validation error, 2 verification failure,
// 3 numeric tolerance failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "dkernel/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact kernel inner products for modular L-functions"};
  app.require_subcommand(1);

  dk::RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "weight (even, >= 4)");
    sub->add_option("--kmax", cfg.kmax, "upper end of a weight range");
    sub->add_option("--s", cfg.s, "first argument");
    sub->add_option("--w", cfg.w, "second argument");
    sub->add_flag("--all-valid", cfg.all_valid, "sweep every valid opposite-parity (s,w)");
    sub->add_option("--l", cfg.l, "single Hecke index");
    sub->add_option("--lmax", cfg.lmax, "largest Hecke index (default 50)");
    sub->add_option("--prec", cfg.prec, "q-expansion precision (default 60)");
    sub->add_option("--tol", cfg.tol, "numeric tolerance override");
    sub->add_option("--format", cfg.format, "text | json | csv");
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--threads", cfg.threads, "worker threads (default 1)");
  };
  for (const char* name : {"psi", "identities", "verify", "periods", "numeric"})
    add_common(app.add_subcommand(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // flag/subcommand problems are validation errors
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    cfg.validate();
    if (!cfg.out.empty()) {
      std::ofstream file(cfg.out);
      if (!file) {
        std::cerr << "{\"error\": \"cannot open output file\", \"path\": \"" << cfg.out << "\"}\n";
        return 1;
      }
      return dk::run_command(cfg, file);
    }
    return dk::run_command(cfg, std::cout);
  } catch (const std::invalid_argument& e) {
    std::cerr << "{\"error\": \"validation\", \"reason\": \"" << e.what() << "\"}\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"runtime\", \"reason\": \"" << e.what() << "\"}\n";
    return 2;
  }
}
