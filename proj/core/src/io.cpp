#include "snsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "snsim/errors.hpp"

namespace snsim {

namespace {

using nlohmann::json;

json constants_block(const PhysConstants& constants) {
  return {{"G", constants.G}, {"hbar", constants.hbar}, {"c", constants.c}};
}

json params_block(const ExperimentParams& params) {
  return {{"mass_kg", params.mass},
          {"separation_m", params.separation},
          {"duration_s", params.duration}};
}

std::size_t write_string(const std::string& payload, const std::string& path) {
  if (path == "-") {
    std::cout << payload;
    return payload.size();
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << payload;
  out.flush();
  if (!out) throw IoError("write failed for '" + path + "'");
  return payload.size();
}

}  // namespace

OutputFormat format_from_name(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw UsageError("unknown format '" + name + "'");
}

std::string format_double(double value) {
  if (value == 0.0) return "0";  // fold -0.0 into the canonical zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string sweep_to_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "theta_rad,duration_s,T,P_x_plus,P_qm,D\n";
  for (const SweepRow& row : result.rows) {
    out << format_double(row.theta) << ',' << format_double(row.duration)
        << ',' << format_double(row.phase) << ','
        << format_double(row.p_x_plus) << ',' << format_double(row.p_qm)
        << ',' << format_double(row.d) << '\n';
  }
  return out.str();
}

json sweep_to_json(const SweepResult& result) {
  json rows = json::array();
  for (const SweepRow& row : result.rows) {
    rows.push_back({{"theta_rad", row.theta},
                    {"duration_s", row.duration},
                    {"T", row.phase},
                    {"P_x_plus", row.p_x_plus},
                    {"P_qm", row.p_qm},
                    {"D", row.d}});
  }
  return {{"schema", "snsim.sweep.v1"},
          {"constants", constants_block(result.constants)},
          {"params", params_block(result.params)},
          {"engine", engine_name(result.engine)},
          {"step_policy", {{"max_phase_per_step_rad", result.max_phase_per_step}}},
          {"rows", rows}};
}

SweepResult sweep_from_json(const json& j) {
  SweepResult result;
  const json& c = j.at("constants");
  result.constants = {c.at("G").get<double>(), c.at("hbar").get<double>(),
                      c.at("c").get<double>()};
  const json& p = j.at("params");
  result.params.mass = p.at("mass_kg").get<double>();
  result.params.separation = p.at("separation_m").get<double>();
  result.params.duration = p.at("duration_s").get<double>();
  result.engine = engine_from_name(j.at("engine").get<std::string>());
  result.max_phase_per_step =
      j.at("step_policy").at("max_phase_per_step_rad").get<double>();
  for (const json& r : j.at("rows")) {
    result.rows.push_back({r.at("theta_rad").get<double>(),
                           r.at("duration_s").get<double>(),
                           r.at("T").get<double>(),
                           r.at("P_x_plus").get<double>(),
                           r.at("P_qm").get<double>(),
                           r.at("D").get<double>()});
  }
  return result;
}

std::string report_to_text(const FeasibilityReport& report) {
  std::ostringstream out;
  out << "feasibility report\n"
      << "  mass            = " << format_double(report.params.mass) << " kg\n"
      << "  separation      = " << format_double(report.params.separation) << " m\n"
      << "  duration        = " << format_double(report.params.duration) << " s\n"
      << "  T               = " << format_double(report.phase) << "\n"
      << "  kinetic_ratio   = " << format_double(report.kinetic_ratio) << "\n"
      << "  max|D|          = " << format_double(report.max_abs_d) << "\n"
      << "  argmax theta    = " << format_double(report.argmax_theta) << " rad\n"
      << "  verdict         = kinetic term "
      << (report.kinetic_negligible ? "negligible" : "NOT negligible") << "\n"
      << "  constants: G = " << format_double(report.constants.G)
      << ", hbar = " << format_double(report.constants.hbar)
      << ", c = " << format_double(report.constants.c) << "\n"
      << "  context (assumed, not modeled): crystal "
      << format_double(report.context.crystal_temperature_kelvin)
      << " K, environment "
      << format_double(report.context.environment_temperature_kelvin)
      << " K, pressure " << format_double(report.context.pressure_pascal)
      << " Pa\n";
  return out.str();
}

json report_to_json(const FeasibilityReport& report) {
  return {{"schema", "snsim.feasibility.v1"},
          {"T", report.phase},
          {"kinetic_ratio", report.kinetic_ratio},
          {"max_abs_D", report.max_abs_d},
          {"argmax_theta_rad", report.argmax_theta},
          {"kinetic_term_negligible", report.kinetic_negligible},
          {"params", params_block(report.params)},
          {"constants", constants_block(report.constants)},
          {"context",
           {{"crystal_temperature_K", report.context.crystal_temperature_kelvin},
            {"environment_temperature_K",
             report.context.environment_temperature_kelvin},
            {"pressure_Pa", report.context.pressure_pascal}}}};
}

std::size_t write_sweep(const SweepResult& result, OutputFormat format,
                        const std::string& path) {
  const std::string payload = format == OutputFormat::kCsv
                                  ? sweep_to_csv(result)
                                  : sweep_to_json(result).dump(2) + "\n";
  return write_string(payload, path);
}

std::size_t write_report(const FeasibilityReport& report, OutputFormat format,
                         const std::string& path) {
  const std::string payload = format == OutputFormat::kCsv
                                  ? report_to_text(report)
                                  : report_to_json(report).dump(2) + "\n";
  return write_string(payload, path);
}

}  // namespace snsim
