#ifndef SNSIM_CLI_HPP_
#define SNSIM_CLI_HPP_

#include <string>
#include <vector>

#include "snsim/experiment.hpp"
#include "snsim/io.hpp"

namespace snsim {

/// Process exit codes, one per documented failure class.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,      // unknown flag, missing flag, unparsable number
  kExitInvariant = 3,  // violated physical invariant (negative mass, ...)
  kExitIo = 4,         // unwritable destination
};

/// Fully resolved invocation: subcommand plus every physical and I/O option,
/// validated against the parameter invariants before any computation runs.
struct RunConfig {
  enum class Command { kSweep, kFeasibility, kConsistency, kConstants };

  Command command = Command::kConstants;
  ExperimentParams params;
  PhysConstants constants;
  ThetaGrid theta_grid = default_theta_grid();
  std::vector<double> durations;
  Engine engine = Engine::kAnalytic;
  StepPolicy step_policy;
  unsigned workers = 0;
  OutputFormat format = OutputFormat::kCsv;
  std::string output = "-";
};

/// Parses argv (without the program name). Throws UsageError for malformed
/// command lines and DomainError/ConfigurationError for physically invalid
/// flag values.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes a parsed config, writing results to config.output. Returns
/// kExitOk; failures propagate as exceptions.
int run(const RunConfig& config);

/// parse + run + exception-to-exit-code mapping; the body of main().
int cli_main(int argc, const char* const* argv);

}  // namespace snsim

#endif  // SNSIM_CLI_HPP_
