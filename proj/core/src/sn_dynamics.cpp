#include "snsim/sn_dynamics.hpp"

#include <cmath>
#include <string>

#include "snsim/errors.hpp"

namespace snsim {

namespace {

double distance(const Vec3& a, const Vec3& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

void check_geometry(const std::vector<Vec3>& positions) {
  for (std::size_t j = 0; j < positions.size(); ++j)
    for (std::size_t k = j + 1; k < positions.size(); ++k)
      if (distance(positions[j], positions[k]) < kMinSiteSeparation)
        throw DegenerateGeometryError(
            "sites " + std::to_string(j) + " and " + std::to_string(k) +
            " are closer than " + std::to_string(kMinSiteSeparation) + " m");
}

double norm2(const std::vector<Complex>& amplitudes) {
  double s = 0.0;
  for (const Complex& a : amplitudes) s += std::norm(a);
  return s;
}

// U_j / hbar for arbitrary amplitudes (used by the RK4 stages, where the
// stage vector is not normalized).
std::vector<double> frequencies_of(const std::vector<Vec3>& positions,
                                   const std::vector<Complex>& amplitudes,
                                   double mass,
                                   const PhysConstants& constants) {
  const std::size_t n = positions.size();
  const double coef = -(constants.G / constants.hbar) * mass * mass;
  std::vector<double> omega(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      sum += std::norm(amplitudes[k]) / distance(positions[j], positions[k]);
    }
    omega[j] = coef * sum;
  }
  return omega;
}

}  // namespace

void DiscreteState::validate() const {
  if (positions.empty()) throw DomainError("state needs at least one site");
  if (positions.size() != amplitudes.size())
    throw DomainError("positions/amplitudes size mismatch");
  check_geometry(positions);
  const double n = norm2(amplitudes);
  if (std::abs(n - 1.0) > kNormTolerance)
    throw DomainError("state norm " + std::to_string(n) + " is not 1");
}

void StepPolicy::validate() const {
  if (!(max_phase_per_step > 0.0))
    throw ConfigurationError("max_phase_per_step must be > 0");
}

std::vector<double> site_probabilities(const DiscreteState& state) {
  state.validate();
  std::vector<double> p(state.size());
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = std::norm(state.amplitudes[j]);
  return p;
}

std::vector<double> self_potential_frequencies(const DiscreteState& state,
                                               double mass,
                                               const PhysConstants& constants) {
  state.validate();
  constants.validate();
  if (!(mass > 0.0)) throw DomainError("mass must be > 0");
  return frequencies_of(state.positions, state.amplitudes, mass, constants);
}

std::vector<double> self_potential(const DiscreteState& state, double mass,
                                   const PhysConstants& constants) {
  std::vector<double> u = self_potential_frequencies(state, mass, constants);
  for (double& v : u) v *= constants.hbar;
  return u;
}

DiscreteState exact_potential_solution(const DiscreteState& initial,
                                       double mass,
                                       const PhysConstants& constants,
                                       double t) {
  const std::vector<double> omega =
      self_potential_frequencies(initial, mass, constants);
  const double dt = t - initial.time;
  DiscreteState out = initial;
  out.time = t;
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double phase = -omega[j] * dt;  // -U_j t / hbar
    out.amplitudes[j] = initial.amplitudes[j] * std::polar(1.0, phase);
  }
  return out;
}

Trajectory integrate(const DiscreteState& initial,
                     const ExternalPotentialSpec& external_potential,
                     double mass, const PhysConstants& constants,
                     double t_final, const StepPolicy& policy) {
  policy.validate();
  const std::vector<double> omega0 =
      self_potential_frequencies(initial, mass, constants);
  if (t_final < initial.time)
    throw ConfigurationError("t_final precedes the initial time");

  const std::size_t n = initial.size();
  const double hbar = constants.hbar;
  const double span = t_final - initial.time;

  // Phase-rate scale from the initial potentials sets the fixed step. The
  // self-potential is time-independent along the exact flow, so the initial
  // scale is valid for the whole run.
  double scale = 0.0;
  for (double w : omega0) scale = std::max(scale, std::abs(w));
  if (!external_potential.is_null()) {
    for (double probe : {initial.time, initial.time + 0.5 * span, t_final}) {
      const std::vector<double> v = external_potential.values(probe);
      for (double vj : v) scale = std::max(scale, std::abs(vj) / hbar);
    }
  }

  Trajectory traj;
  traj.metadata.integrator = "rk4-fixed";
  traj.samples.push_back({initial.time, initial.amplitudes});

  if (span == 0.0 || scale == 0.0) {
    // Nothing accumulates phase; the state is stationary.
    if (span > 0.0) traj.samples.push_back({t_final, initial.amplitudes});
    traj.metadata.step_seconds = span;
    traj.metadata.norm_drift =
        std::abs(1.0 - norm2(traj.samples.back().amplitudes));
    return traj;
  }

  // Step in the dimensionless phase tau = (t - t0) * scale.
  const double tau_final = span * scale;
  const auto steps = static_cast<std::size_t>(
      std::ceil(tau_final / policy.max_phase_per_step));
  const double h = tau_final / static_cast<double>(steps);
  traj.metadata.step_seconds = h / scale;

  const auto rhs = [&](double tau, const std::vector<Complex>& psi,
                       std::vector<Complex>& dpsi) {
    std::vector<double> w =
        frequencies_of(initial.positions, psi, mass, constants);
    if (!external_potential.is_null()) {
      const std::vector<double> v =
          external_potential.values(initial.time + tau / scale);
      for (std::size_t j = 0; j < n; ++j) w[j] += v[j] / hbar;
    }
    for (std::size_t j = 0; j < n; ++j)
      dpsi[j] = Complex(0.0, -w[j] / scale) * psi[j];
  };

  std::vector<Complex> psi = initial.amplitudes;
  std::vector<Complex> k1(n), k2(n), k3(n), k4(n), tmp(n);
  traj.samples.reserve(steps + 1);
  for (std::size_t s = 0; s < steps; ++s) {
    const double tau = static_cast<double>(s) * h;
    rhs(tau, psi, k1);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = psi[j] + 0.5 * h * k1[j];
    rhs(tau + 0.5 * h, tmp, k2);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = psi[j] + 0.5 * h * k2[j];
    rhs(tau + 0.5 * h, tmp, k3);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = psi[j] + h * k3[j];
    rhs(tau + h, tmp, k4);
    for (std::size_t j = 0; j < n; ++j)
      psi[j] += (h / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    const double t =
        (s + 1 == steps) ? t_final
                         : initial.time + (static_cast<double>(s + 1) * h) / scale;
    traj.samples.push_back({t, psi});
  }

  traj.metadata.norm_drift = std::abs(1.0 - norm2(psi));
  return traj;
}

DiscreteState two_site_state(double theta, double separation) {
  if (!(separation > 0.0)) throw DomainError("separation must be > 0");
  DiscreteState state;
  state.positions = {{0.0, 0.0, +0.5 * separation},
                     {0.0, 0.0, -0.5 * separation}};
  state.amplitudes = {Complex(std::cos(0.5 * theta), 0.0),
                      Complex(std::sin(0.5 * theta), 0.0)};
  return state;
}

}  // namespace snsim
