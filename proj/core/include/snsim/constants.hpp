#ifndef SNSIM_CONSTANTS_HPP_
#define SNSIM_CONSTANTS_HPP_

namespace snsim {

/// Fundamental constants, SI. Defaults are CODATA values; instances are
/// passed explicitly so tests can drive the G -> 0 quantum-mechanics limit.
struct PhysConstants {
  double G = 6.67430e-11;         // m^3 kg^-1 s^-2
  double hbar = 1.054571817e-34;  // J s
  double c = 299792458.0;         // m s^-1 (exact)

  /// G >= 0 (zero realizes the no-self-gravity limit), hbar > 0, c > 0.
  void validate() const;
};

/// One interferometer configuration: particle mass, arm separation,
/// free-evolution duration, and the preparation angle theta.
struct ExperimentParams {
  double mass = 1e-14;        // kg
  double separation = 250e-6; // m, d = |r1 - r2|
  double duration = 0.0;      // s
  double theta = 0.0;         // rad, in [0, 2*pi)

  void validate() const;
};

/// Reduced Planck mass sqrt(hbar*c/G), ~2.2e-8 kg. Requires G > 0.
double planck_mass(const PhysConstants& constants);

/// The accumulated differential gravitational phase T = G*m^2*t/(hbar*d).
/// At m = planck_mass this reduces to c*t/d.
double dimensionless_phase(const ExperimentParams& params,
                           const PhysConstants& constants);

/// Final kinetic-per-potential energy ratio K/U_g ~ G*m*t^2/(2*d^3) for the
/// mutual attraction of the superposed parts.
double kinetic_potential_ratio(const ExperimentParams& params,
                               const PhysConstants& constants);

}  // namespace snsim

#endif  // SNSIM_CONSTANTS_HPP_
