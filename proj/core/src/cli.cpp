#include "snsim/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "snsim/errors.hpp"
#include "snsim/stern_gerlach.hpp"

namespace snsim {

namespace {

std::vector<double> parse_duration_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("unparsable duration '" + item + "'");
    }
    if (used != item.size())
      throw UsageError("unparsable duration '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw UsageError("--durations list is empty");
  return out;
}

void add_constants_flags(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--G", config.constants.G,
                 "gravitational constant override, m^3 kg^-1 s^-2");
  cmd.add_option("--hbar", config.constants.hbar,
                 "reduced Planck constant override, J s");
  cmd.set_config("--config", "", "read defaults from an INI/TOML file");
}

void add_particle_flags(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--mass", config.params.mass, "particle mass, kg");
  cmd.add_option("--separation", config.params.separation,
                 "superposition separation d, m");
}

void add_output_flags(CLI::App& cmd, RunConfig& config, std::string& format) {
  cmd.add_option("--format", format, "output format: csv | json");
  cmd.add_option("--output", config.output, "output path, '-' for stdout");
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  std::string format = "csv";
  std::string engine = "analytic";
  std::string durations_text;

  CLI::App app{"Gravitational self-decoherence in a Stern-Gerlach interferometer"};
  app.require_subcommand(1);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "tabulate P_x+, P_qm and D over a theta grid");
  add_particle_flags(*sweep, config);
  add_constants_flags(*sweep, config);
  sweep->add_option("--durations", durations_text,
                    "comma-separated list of durations, s")->required();
  sweep->add_option("--theta-start", config.theta_grid.start, "grid start, rad");
  sweep->add_option("--theta-end", config.theta_grid.end, "grid end, rad");
  sweep->add_option("--theta-points", config.theta_grid.count, "grid size");
  sweep->add_option("--engine", engine, "analytic | numeric | both");
  sweep->add_option("--max-phase-step", config.step_policy.max_phase_per_step,
                    "numeric engine: max phase advance per RK4 step, rad");
  sweep->add_option("--workers", config.workers,
                    "worker threads for the numeric engine (0 = auto)");
  add_output_flags(*sweep, config, format);

  CLI::App* feas = app.add_subcommand(
      "feasibility", "T, kinetic ratio and max |D| for one configuration");
  add_particle_flags(*feas, config);
  add_constants_flags(*feas, config);
  feas->add_option("--duration", config.params.duration, "duration, s");
  add_output_flags(*feas, config, format);

  CLI::App* cons = app.add_subcommand(
      "consistency", "max |analytic - RK4| amplitude discrepancy, two sites");
  add_particle_flags(*cons, config);
  add_constants_flags(*cons, config);
  cons->add_option("--duration", config.params.duration, "duration, s");
  cons->add_option("--theta", config.params.theta, "preparation angle, rad");
  cons->add_option("--max-phase-step", config.step_policy.max_phase_per_step,
                   "max phase advance per RK4 step, rad");
  add_output_flags(*cons, config, format);

  CLI::App* consts = app.add_subcommand(
      "constants", "print the constants in effect and the Planck mass");
  add_constants_flags(*consts, config);
  add_output_flags(*consts, config, format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    throw HelpRequested("help");
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (sweep->parsed()) {
    config.command = RunConfig::Command::kSweep;
    config.durations = parse_duration_list(durations_text);
    config.engine = engine_from_name(engine);
  } else if (feas->parsed()) {
    config.command = RunConfig::Command::kFeasibility;
  } else if (cons->parsed()) {
    config.command = RunConfig::Command::kConsistency;
  } else {
    config.command = RunConfig::Command::kConstants;
  }
  config.format = format_from_name(format);

  // Validate physical invariants up front so nothing runs on bad input.
  config.constants.validate();
  switch (config.command) {
    case RunConfig::Command::kSweep: {
      SweepSpec spec{config.params, config.theta_grid, config.durations,
                     config.engine, config.step_policy, config.workers};
      spec.validate();
      break;
    }
    case RunConfig::Command::kFeasibility: {
      ExperimentParams p = config.params;
      p.theta = 0.0;
      p.validate();
      break;
    }
    case RunConfig::Command::kConsistency:
      config.params.validate();
      config.step_policy.validate();
      break;
    case RunConfig::Command::kConstants:
      break;
  }
  return config;
}

int run(const RunConfig& config) {
  switch (config.command) {
    case RunConfig::Command::kSweep: {
      const SweepSpec spec{config.params, config.theta_grid, config.durations,
                           config.engine, config.step_policy, config.workers};
      write_sweep(run_sweep(spec, config.constants), config.format,
                  config.output);
      break;
    }
    case RunConfig::Command::kFeasibility: {
      write_report(feasibility(config.params, config.constants), config.format,
                   config.output);
      break;
    }
    case RunConfig::Command::kConsistency: {
      const double discrepancy =
          consistency_run(config.params, config.constants, config.params.theta,
                          config.step_policy);
      std::ostringstream out;
      if (config.format == OutputFormat::kJson) {
        nlohmann::json j{{"schema", "snsim.consistency.v1"},
                         {"max_amplitude_discrepancy", discrepancy},
                         {"theta_rad", config.params.theta},
                         {"duration_s", config.params.duration}};
        out << j.dump(2) << "\n";
      } else {
        out << "max_amplitude_discrepancy = " << format_double(discrepancy)
            << "\n";
      }
      if (config.output == "-") {
        std::cout << out.str();
      } else {
        std::ofstream file(config.output, std::ios::binary);
        if (!file) throw IoError("cannot open '" + config.output + "'");
        file << out.str();
      }
      break;
    }
    case RunConfig::Command::kConstants: {
      std::ostringstream out;
      if (config.format == OutputFormat::kJson) {
        nlohmann::json j{{"G", config.constants.G},
                         {"hbar", config.constants.hbar},
                         {"c", config.constants.c}};
        j["planck_mass_kg"] =
            config.constants.G > 0.0 ? planck_mass(config.constants) : 0.0;
        out << j.dump(2) << "\n";
      } else {
        out << "G    = " << format_double(config.constants.G) << " m^3 kg^-1 s^-2\n"
            << "hbar = " << format_double(config.constants.hbar) << " J s\n"
            << "c    = " << format_double(config.constants.c) << " m s^-1\n";
        if (config.constants.G > 0.0)
          out << "m_P  = " << format_double(planck_mass(config.constants))
              << " kg\n";
      }
      if (config.output == "-") {
        std::cout << out.str();
      } else {
        std::ofstream file(config.output, std::ios::binary);
        if (!file) throw IoError("cannot open '" + config.output + "'");
        file << out.str();
      }
      break;
    }
  }
  return kExitOk;
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(parse_args(args));
  } catch (const HelpRequested&) {
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace snsim
