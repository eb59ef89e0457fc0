#pragma once

// Command layer behind the dkernel binary: validated run configuration and
// one entry point per subcommand, writing text/json/csv tables to a stream.
// Exit codes: 0 pass, 1 validation error (thrown as std::invalid_argument
// and mapped by the binary), 2 exact verification failure, 3 numeric
// tolerance failure.

#include <iosfwd>
#include <string>

namespace dk {

struct RunConfig {
  std::string command;
  int k = 0;
  int kmax = 0;  // 0: single weight
  int s = -1;
  int w = -1;
  bool all_valid = false;
  long l = 0;
  long lmax = 50;
  long prec = 60;
  double tol = -1.0;  // <= 0: per-check defaults
  std::string format = "text";
  std::string out;  // handled by the binary
  int threads = 1;

  // Throws std::invalid_argument on an ill-formed configuration.
  void validate() const;
};

int cmd_psi(const RunConfig& cfg, std::ostream& os);
int cmd_identities(const RunConfig& cfg, std::ostream& os);
int cmd_verify(const RunConfig& cfg, std::ostream& os);
int cmd_periods(const RunConfig& cfg, std::ostream& os);
int cmd_numeric(const RunConfig& cfg, std::ostream& os);

// Dispatch on cfg.command.
int run_command(const RunConfig& cfg, std::ostream& os);

}  // namespace dk
