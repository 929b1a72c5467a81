#ifndef SNSIM_EXPERIMENT_HPP_
#define SNSIM_EXPERIMENT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "snsim/constants.hpp"
#include "snsim/sn_dynamics.hpp"

namespace snsim {

enum class Engine { kAnalytic, kNumeric, kBoth };

std::string engine_name(Engine engine);
Engine engine_from_name(const std::string& name);

/// Uniform theta grid with inclusive endpoints.
struct ThetaGrid {
  double start = 0.0;
  double end = 0.0;   // defaulted to 2*pi by default_theta_grid()
  std::size_t count = 721;

  void validate() const;
  std::vector<double> points() const;
};

/// [0, 2*pi], 721 points: 0.5 degree resolution.
ThetaGrid default_theta_grid();

/// One sweep request: configuration, theta grid, one row per
/// (duration, theta) pair, computed by the chosen engine.
struct SweepSpec {
  ExperimentParams params;       // theta field ignored
  ThetaGrid theta_grid = default_theta_grid();
  std::vector<double> durations; // s
  Engine engine = Engine::kAnalytic;
  StepPolicy step_policy;
  unsigned workers = 0;          // 0 = hardware concurrency

  void validate() const;
};

struct SweepRow {
  double theta = 0.0;     // rad
  double duration = 0.0;  // s
  double phase = 0.0;     // dimensionless T
  double p_x_plus = 0.0;
  double p_qm = 0.0;
  double d = 0.0;         // p_x_plus - p_qm
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ordered by (duration, theta)
  PhysConstants constants;
  ExperimentParams params;
  Engine engine = Engine::kAnalytic;
  double max_phase_per_step = 0.0;
};

/// Tabulates P_x+, P_x+^QM, and D over the grid. With Engine::kBoth the
/// analytic and numeric values must agree within 1e-9 per row; the analytic
/// value is reported. Rows come back in deterministic (duration, theta)
/// order regardless of worker count.
SweepResult run_sweep(const SweepSpec& spec, const PhysConstants& constants);

/// Feasibility summary for one configuration. The temperature/pressure
/// context fields describe the assumed laboratory conditions; they are
/// reported verbatim and never enter any computation.
struct FeasibilityReport {
  double phase = 0.0;              // dimensionless T
  double kinetic_ratio = 0.0;      // K/U_g
  double max_abs_d = 0.0;
  double argmax_theta = 0.0;       // rad
  bool kinetic_negligible = false; // kinetic_ratio < 1e-6
  ExperimentParams params;
  PhysConstants constants;
  struct Context {
    double crystal_temperature_kelvin = 0.15;
    double environment_temperature_kelvin = 0.5;
    double pressure_pascal = 1e-15;
  } context;
};

inline constexpr double kKineticNegligibleThreshold = 1e-6;

/// Computes T and K/U_g, and locates max |D| over theta by a 1e4-point grid
/// scan refined with golden-section search to 1e-10 in theta.
FeasibilityReport feasibility(const ExperimentParams& params,
                              const PhysConstants& constants);

/// Max component-wise |analytic - numeric| over all trajectory sample times
/// for the two-site system at the given preparation angle.
double consistency_run(const ExperimentParams& params,
                       const PhysConstants& constants, double theta,
                       const StepPolicy& policy = {});

/// Number of local extrema of D(theta) on the open interval, counted as
/// derivative sign changes on a uniform grid of `points` samples.
std::size_t count_d_extrema(const ExperimentParams& params,
                            const PhysConstants& constants, double theta_lo,
                            double theta_hi, std::size_t points);

}  // namespace snsim

#endif  // SNSIM_EXPERIMENT_HPP_
