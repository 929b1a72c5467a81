#include "snsim/stern_gerlach.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "snsim/errors.hpp"

namespace snsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Grid sweeps include the closing 2*pi endpoint, so everything except
// prepare() accepts the closed interval [0, 2*pi].
void check_theta(double theta, bool allow_full_turn) {
  const bool ok = allow_full_turn ? (theta >= 0.0 && theta <= kTwoPi)
                                  : (theta >= 0.0 && theta < kTwoPi);
  if (!ok)
    throw DomainError("theta out of range: " + std::to_string(theta));
}

// T = G m^2 t / (hbar d) for this configuration, ignoring params.theta.
double phase_of(const ExperimentParams& params, const PhysConstants& constants) {
  ExperimentParams p = params;
  p.theta = 0.0;
  return dimensionless_phase(p, constants);
}

}  // namespace

SpinorAmplitudes prepare(double theta) {
  check_theta(theta, /*allow_full_turn=*/false);
  return {std::cos(0.5 * theta), std::sin(0.5 * theta)};
}

PhasePair phase_frequencies(double theta, const ExperimentParams& params,
                            const PhysConstants& constants) {
  check_theta(theta, true);
  constants.validate();
  ExperimentParams p = params;
  p.theta = 0.0;
  p.validate();
  const double rate = (constants.G / constants.hbar) * params.mass *
                      params.mass / params.separation;
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  return {rate * c * c, rate * s * s};
}

double delta_omega(double theta, const ExperimentParams& params,
                   const PhysConstants& constants) {
  check_theta(theta, true);
  constants.validate();
  ExperimentParams p = params;
  p.theta = 0.0;
  p.validate();
  // cos^2 - sin^2 folded to cos(theta); identical analytically, one fewer
  // rounding than subtracting the PhasePair members.
  const double rate = (constants.G / constants.hbar) * params.mass *
                      params.mass / params.separation;
  return rate * std::cos(theta);
}

SpinorAmplitudes evolve_split(double theta, const ExperimentParams& params,
                              const PhysConstants& constants) {
  check_theta(theta, true);
  const double big_t = phase_of(params, constants);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  // omega2*t = T sin^2(theta/2), omega1*t = T cos^2(theta/2)
  return {c * std::polar(1.0, big_t * s * s),
          s * std::polar(1.0, big_t * c * c)};
}

double prob_x_plus(double theta, const ExperimentParams& params,
                   const PhysConstants& constants) {
  check_theta(theta, true);
  const double big_t = phase_of(params, constants);
  // T = 0 must reproduce the G -> 0 limit bit-for-bit.
  if (big_t == 0.0) return prob_x_plus_qm(theta);
  return 0.5 + 0.5 * std::sin(theta) * std::cos(big_t * std::cos(theta));
}

double prob_x_plus_from_state(const SpinorAmplitudes& state) {
  return 0.5 * std::norm(state.up + state.down);
}

double prob_x_plus_qm(double theta) {
  check_theta(theta, true);
  return 0.5 + 0.5 * std::sin(theta);
}

double prob_difference(double theta, const ExperimentParams& params,
                       const PhysConstants& constants) {
  check_theta(theta, true);
  const double big_t = phase_of(params, constants);
  const double half_angle = 0.5 * big_t * std::cos(theta);
  const double s = std::sin(half_angle);
  const double d = -std::sin(theta) * s * s;
  return d == 0.0 ? 0.0 : d;  // canonical zero, never -0.0
}

}  // namespace snsim
