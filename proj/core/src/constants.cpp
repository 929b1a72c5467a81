#include "snsim/constants.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "snsim/errors.hpp"

namespace snsim {

void PhysConstants::validate() const {
  if (!(G >= 0.0)) throw DomainError("G must be >= 0, got " + std::to_string(G));
  if (!(hbar > 0.0)) throw DomainError("hbar must be > 0");
  if (!(c > 0.0)) throw DomainError("c must be > 0");
}

void ExperimentParams::validate() const {
  if (!(mass > 0.0)) throw DomainError("mass must be > 0, got " + std::to_string(mass));
  if (!(separation > 0.0)) throw DomainError("separation must be > 0");
  if (!(duration >= 0.0)) throw DomainError("duration must be >= 0");
  if (!(theta >= 0.0 && theta < 2.0 * std::numbers::pi))
    throw DomainError("theta must lie in [0, 2*pi), got " + std::to_string(theta));
}

double planck_mass(const PhysConstants& constants) {
  constants.validate();
  if (constants.G == 0.0)
    throw DomainError("planck_mass undefined for G = 0");
  return std::sqrt(constants.hbar * constants.c / constants.G);
}

double dimensionless_phase(const ExperimentParams& params,
                           const PhysConstants& constants) {
  params.validate();
  constants.validate();
  // Fused so no intermediate drops to the 1e-38 J scale.
  return (constants.G / constants.hbar) * params.mass * params.mass *
         params.duration / params.separation;
}

double kinetic_potential_ratio(const ExperimentParams& params,
                               const PhysConstants& constants) {
  params.validate();
  constants.validate();
  const double d = params.separation;
  return constants.G * params.mass * params.duration * params.duration /
         (2.0 * d * d * d);
}

}  // namespace snsim
