#ifndef SNSIM_IO_HPP_
#define SNSIM_IO_HPP_

#include <cstddef>
#include <string>

#include <json.hpp>

#include "snsim/experiment.hpp"

namespace snsim {

enum class OutputFormat { kCsv, kJson };

OutputFormat format_from_name(const std::string& name);

/// Doubles are serialized with 17 significant digits so a re-parse recovers
/// the exact bit pattern.
std::string format_double(double value);

std::string sweep_to_csv(const SweepResult& result);
nlohmann::json sweep_to_json(const SweepResult& result);
SweepResult sweep_from_json(const nlohmann::json& j);

std::string report_to_text(const FeasibilityReport& report);
nlohmann::json report_to_json(const FeasibilityReport& report);

/// Serialize and write to `path` ("-" writes to stdout); returns bytes
/// written. Unwritable destinations raise IoError naming the path.
std::size_t write_sweep(const SweepResult& result, OutputFormat format,
                        const std::string& path);
std::size_t write_report(const FeasibilityReport& report, OutputFormat format,
                         const std::string& path);

}  // namespace snsim

#endif  // SNSIM_IO_HPP_
