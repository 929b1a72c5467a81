#include "snsim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "snsim/errors.hpp"
#include "snsim/stern_gerlach.hpp"

namespace snsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBothEnginesTolerance = 1e-9;

// Numeric route: RK4-integrate the equivalent two-site state and project the
// recombined spinor onto |+x>.
double numeric_prob_x_plus(double theta, const ExperimentParams& params,
                           const PhysConstants& constants,
                           const StepPolicy& policy) {
  const DiscreteState initial = two_site_state(theta, params.separation);
  const Trajectory traj = integrate(initial, {}, params.mass, constants,
                                    params.duration, policy);
  const auto& amps = traj.final_sample().amplitudes;
  return prob_x_plus_from_state({amps[0], amps[1]});
}

}  // namespace

std::string engine_name(Engine engine) {
  switch (engine) {
    case Engine::kAnalytic: return "analytic";
    case Engine::kNumeric: return "numeric";
    case Engine::kBoth: return "both";
  }
  throw std::logic_error("unreachable");
}

Engine engine_from_name(const std::string& name) {
  if (name == "analytic") return Engine::kAnalytic;
  if (name == "numeric") return Engine::kNumeric;
  if (name == "both") return Engine::kBoth;
  throw UsageError("unknown engine '" + name + "'");
}

void ThetaGrid::validate() const {
  if (count < 2) throw ConfigurationError("theta grid needs at least 2 points");
  if (!(start < end)) throw ConfigurationError("theta grid start must be < end");
  if (start < 0.0 || end > kTwoPi)
    throw ConfigurationError("theta grid must lie within [0, 2*pi]");
}

std::vector<double> ThetaGrid::points() const {
  validate();
  std::vector<double> pts(count);
  const double step = (end - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i)
    pts[i] = start + static_cast<double>(i) * step;
  pts.back() = end;
  return pts;
}

ThetaGrid default_theta_grid() { return {0.0, kTwoPi, 721}; }

void SweepSpec::validate() const {
  ExperimentParams p = params;
  p.theta = 0.0;
  p.duration = 0.0;
  p.validate();
  theta_grid.validate();
  step_policy.validate();
  if (durations.empty()) throw ConfigurationError("at least one duration required");
  for (double t : durations)
    if (!(t >= 0.0)) throw ConfigurationError("durations must be >= 0");
}

SweepResult run_sweep(const SweepSpec& spec, const PhysConstants& constants) {
  spec.validate();
  constants.validate();

  std::vector<double> durations = spec.durations;
  std::sort(durations.begin(), durations.end());
  const std::vector<double> thetas = spec.theta_grid.points();

  SweepResult result;
  result.constants = constants;
  result.params = spec.params;
  result.engine = spec.engine;
  result.max_phase_per_step = spec.step_policy.max_phase_per_step;
  result.rows.resize(durations.size() * thetas.size());

  const auto compute_row = [&](std::size_t index) {
    const double duration = durations[index / thetas.size()];
    const double theta = thetas[index % thetas.size()];
    ExperimentParams p = spec.params;
    p.theta = 0.0;
    p.duration = duration;

    SweepRow row;
    row.theta = theta;
    row.duration = duration;
    row.phase = dimensionless_phase(p, constants);
    row.p_qm = prob_x_plus_qm(theta);
    if (spec.engine == Engine::kNumeric) {
      row.p_x_plus = numeric_prob_x_plus(theta, p, constants, spec.step_policy);
      row.d = row.p_x_plus - row.p_qm;
    } else {
      row.p_x_plus = prob_x_plus(theta, p, constants);
      row.d = prob_difference(theta, p, constants);
      if (spec.engine == Engine::kBoth) {
        const double numeric =
            numeric_prob_x_plus(theta, p, constants, spec.step_policy);
        if (std::abs(numeric - row.p_x_plus) > kBothEnginesTolerance)
          throw std::runtime_error(
              "analytic/numeric disagreement at theta = " +
              std::to_string(theta));
      }
    }
    result.rows[index] = row;
  };

  const std::size_t total = result.rows.size();
  unsigned workers = spec.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(total));

  if (workers <= 1 || spec.engine == Engine::kAnalytic) {
    // The analytic engine is too cheap for threads to pay off.
    for (std::size_t i = 0; i < total; ++i) compute_row(i);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < total; i += workers) compute_row(i);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  return result;
}

FeasibilityReport feasibility(const ExperimentParams& params,
                              const PhysConstants& constants) {
  ExperimentParams p = params;
  p.theta = 0.0;
  p.validate();
  constants.validate();

  FeasibilityReport report;
  report.params = p;
  report.constants = constants;
  report.phase = dimensionless_phase(p, constants);
  report.kinetic_ratio = kinetic_potential_ratio(p, constants);
  report.kinetic_negligible = report.kinetic_ratio < kKineticNegligibleThreshold;

  // Dense scan for max |D|, then golden-section refinement.
  const auto abs_d = [&](double theta) {
    return std::abs(prob_difference(theta, p, constants));
  };
  constexpr std::size_t kScanPoints = 10000;
  double best_theta = 0.0;
  double best = 0.0;
  const double step = kTwoPi / static_cast<double>(kScanPoints);
  for (std::size_t i = 0; i < kScanPoints; ++i) {
    const double theta = static_cast<double>(i) * step;
    const double v = abs_d(theta);
    if (v > best) {
      best = v;
      best_theta = theta;
    }
  }

  double lo = std::max(0.0, best_theta - step);
  double hi = std::min(kTwoPi, best_theta + step);
  constexpr double kInvPhi = 0.6180339887498949;
  double a = hi - kInvPhi * (hi - lo);
  double b = lo + kInvPhi * (hi - lo);
  double fa = abs_d(a), fb = abs_d(b);
  while (hi - lo > 1e-10) {
    if (fa > fb) {
      hi = b; b = a; fb = fa;
      a = hi - kInvPhi * (hi - lo);
      fa = abs_d(a);
    } else {
      lo = a; a = b; fa = fb;
      b = lo + kInvPhi * (hi - lo);
      fb = abs_d(b);
    }
  }
  const double refined = 0.5 * (lo + hi);
  if (abs_d(refined) >= best) {
    best_theta = refined;
    best = abs_d(refined);
  }
  report.max_abs_d = best;
  report.argmax_theta = best_theta;
  return report;
}

double consistency_run(const ExperimentParams& params,
                       const PhysConstants& constants, double theta,
                       const StepPolicy& policy) {
  ExperimentParams p = params;
  p.theta = 0.0;
  p.validate();
  const DiscreteState initial = two_site_state(theta, p.separation);
  const Trajectory traj =
      integrate(initial, {}, p.mass, constants, p.duration, policy);
  double worst = 0.0;
  for (const Trajectory::Sample& sample : traj.samples) {
    const DiscreteState analytic =
        exact_potential_solution(initial, p.mass, constants, sample.time);
    for (std::size_t j = 0; j < sample.amplitudes.size(); ++j)
      worst = std::max(worst,
                       std::abs(sample.amplitudes[j] - analytic.amplitudes[j]));
  }
  return worst;
}

std::size_t count_d_extrema(const ExperimentParams& params,
                            const PhysConstants& constants, double theta_lo,
                            double theta_hi, std::size_t points) {
  if (points < 3) throw ConfigurationError("extremum count needs >= 3 points");
  ExperimentParams p = params;
  p.theta = 0.0;
  p.validate();
  const double step = (theta_hi - theta_lo) / static_cast<double>(points + 1);
  std::size_t extrema = 0;
  double prev_value = prob_difference(theta_lo + step, p, constants);
  double prev_slope = 0.0;
  bool have_slope = false;
  for (std::size_t i = 2; i <= points; ++i) {
    const double value =
        prob_difference(theta_lo + static_cast<double>(i) * step, p, constants);
    const double slope = value - prev_value;
    if (slope != 0.0) {
      if (have_slope && slope * prev_slope < 0.0) ++extrema;
      prev_slope = slope;
      have_slope = true;
    }
    prev_value = value;
  }
  return extrema;
}

}  // namespace snsim
