#ifndef SNSIM_SN_DYNAMICS_HPP_
#define SNSIM_SN_DYNAMICS_HPP_

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "snsim/constants.hpp"

namespace snsim {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

/// Sites closer than this are rejected as coincident; the discrete
/// self-potential excludes the self-term and is undefined at zero separation.
inline constexpr double kMinSiteSeparation = 1e-12;  // m

/// Norm tolerance for a valid state, sum |psi_j|^2 = 1.
inline constexpr double kNormTolerance = 1e-12;

/// Wave function of a particle constrained to N discrete sites:
/// positions r_j and complex amplitudes psi_j, normalized to 1.
struct DiscreteState {
  std::vector<Vec3> positions;
  std::vector<Complex> amplitudes;
  double time = 0.0;  // s

  std::size_t size() const { return positions.size(); }
  void validate() const;
};

/// Diagonal, real external potential V_j(t) in joules. A default-constructed
/// spec is the null potential.
struct ExternalPotentialSpec {
  std::function<std::vector<double>(double time)> values;

  bool is_null() const { return !values; }
};

/// Fixed-step policy for the integrator: maximum phase advance per step.
struct StepPolicy {
  double max_phase_per_step = 1e-3;  // rad

  void validate() const;
};

/// Time-ordered (time, amplitudes) samples from one integration, plus
/// bookkeeping on how they were produced.
struct Trajectory {
  struct Sample {
    double time = 0.0;
    std::vector<Complex> amplitudes;
  };
  struct Metadata {
    std::string integrator;
    double step_seconds = 0.0;
    double norm_drift = 0.0;  // |1 - sum |psi_j|^2| at the final sample
  };

  std::vector<Sample> samples;
  Metadata metadata;

  const Sample& final_sample() const { return samples.back(); }
};

/// P_j = |psi_j|^2 for every site.
std::vector<double> site_probabilities(const DiscreteState& state);

/// Gravitational self-potential U_j = -G m^2 sum_{j' != j} P_{j'}/|r_j - r_{j'}|
/// in joules, one entry per site; every entry is <= 0.
std::vector<double> self_potential(const DiscreteState& state, double mass,
                                   const PhysConstants& constants);

/// Same sum expressed as an angular frequency U_j/hbar in rad/s, evaluated
/// fused so no intermediate touches the 1e-38 J scale.
std::vector<double> self_potential_frequencies(const DiscreteState& state,
                                               double mass,
                                               const PhysConstants& constants);

/// Closed-form potential-only evolution: with a real diagonal potential the
/// site populations are frozen, U_j is time-independent, and
/// psi_j(t) = psi_j(0) * exp(-i U_j t / hbar).
DiscreteState exact_potential_solution(const DiscreteState& initial,
                                       double mass,
                                       const PhysConstants& constants,
                                       double t);

/// Classic RK4 on the potential-only amplitude equation
/// i hbar dpsi_j/dt = (V_j(t) + U_j[psi]) psi_j, stepped in dimensionless
/// phase. No renormalization is applied; the norm drift is reported in the
/// trajectory metadata.
Trajectory integrate(const DiscreteState& initial,
                     const ExternalPotentialSpec& external_potential,
                     double mass, const PhysConstants& constants,
                     double t_final, const StepPolicy& policy = {});

/// Maps a two-site interferometer configuration onto a DiscreteState with
/// sites at +-d/2 on the z axis and amplitudes (cos(theta/2), sin(theta/2)).
DiscreteState two_site_state(double theta, double separation);

}  // namespace snsim

#endif  // SNSIM_SN_DYNAMICS_HPP_
