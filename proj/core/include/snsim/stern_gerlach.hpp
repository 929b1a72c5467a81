#ifndef SNSIM_STERN_GERLACH_HPP_
#define SNSIM_STERN_GERLACH_HPP_

#include <complex>

#include "snsim/constants.hpp"

namespace snsim {

/// Spin-1/2 amplitudes in the z basis; while the interferometer is split,
/// `up` rides |r1 up> and `down` rides |r2 down>.
struct SpinorAmplitudes {
  std::complex<double> up;
  std::complex<double> down;

  double norm2() const { return std::norm(up) + std::norm(down); }
};

/// Arm phase frequencies omega1 = (G m^2 / hbar d) cos^2(theta/2) and
/// omega2 = (G m^2 / hbar d) sin^2(theta/2); they sum to G m^2/(hbar d).
struct PhasePair {
  double omega1 = 0.0;  // rad/s
  double omega2 = 0.0;  // rad/s
};

/// R_y(theta) preparation: (cos(theta/2), sin(theta/2)).
/// theta must lie in [0, 2*pi); out-of-range values are rejected, not wrapped.
SpinorAmplitudes prepare(double theta);

PhasePair phase_frequencies(double theta, const ExperimentParams& params,
                            const PhysConstants& constants);

/// Differential frequency omega1 - omega2 = (G m^2 / hbar d) cos(theta).
double delta_omega(double theta, const ExperimentParams& params,
                   const PhysConstants& constants);

/// Closed-form state after split, free evolution for params.duration, and
/// recombination: (cos(theta/2) e^{i omega2 t}, sin(theta/2) e^{i omega1 t}).
SpinorAmplitudes evolve_split(double theta, const ExperimentParams& params,
                              const PhysConstants& constants);

/// Probability of measuring +hbar/2 along x, closed form
/// 1/2 + (1/2) sin(theta) cos(Delta_omega * t), evaluated in the
/// dimensionless phase T = G m^2 t/(hbar d).
double prob_x_plus(double theta, const ExperimentParams& params,
                   const PhysConstants& constants);

/// Same probability by projecting a recombined state onto
/// |+x> = (|up> + |down>)/sqrt(2). Independent route used for cross-checks.
double prob_x_plus_from_state(const SpinorAmplitudes& state);

/// Standard quantum mechanics (G -> 0): 1/2 + (1/2) sin(theta).
double prob_x_plus_qm(double theta);

/// Deviation D = P_x+ - P_x+^QM = -sin(theta) sin^2(T cos(theta)/2).
double prob_difference(double theta, const ExperimentParams& params,
                       const PhysConstants& constants);

}  // namespace snsim

#endif  // SNSIM_STERN_GERLACH_HPP_
