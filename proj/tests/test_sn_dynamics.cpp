#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "snsim/errors.hpp"
#include "snsim/sn_dynamics.hpp"

using namespace snsim;

namespace {

constexpr double kPi = std::numbers::pi;

// Random normalized state on N distinct sites inside the unit cube (meters).
DiscreteState random_state(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  DiscreteState state;
  while (state.positions.size() < n) {
    const Vec3 candidate{coord(rng), coord(rng), coord(rng)};
    bool ok = true;
    for (const Vec3& p : state.positions) {
      const double dx = p[0] - candidate[0];
      const double dy = p[1] - candidate[1];
      const double dz = p[2] - candidate[2];
      if (std::sqrt(dx * dx + dy * dy + dz * dz) < 1e-2) ok = false;
    }
    if (ok) state.positions.push_back(candidate);
  }
  double norm = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    state.amplitudes.emplace_back(gauss(rng), gauss(rng));
    norm += std::norm(state.amplitudes.back());
  }
  for (Complex& a : state.amplitudes) a /= std::sqrt(norm);
  return state;
}

double max_amplitude_error(const std::vector<Complex>& a,
                           const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    worst = std::max(worst, std::abs(a[j] - b[j]));
  return worst;
}

// Time at which the fastest site has accumulated `phase` radians.
double time_for_phase(const DiscreteState& state, double mass,
                      const PhysConstants& constants, double phase) {
  double w_max = 0.0;
  for (double w : self_potential_frequencies(state, mass, constants))
    w_max = std::max(w_max, std::abs(w));
  return phase / w_max;
}

}  // namespace

TEST_CASE("site probabilities") {
  DiscreteState s = two_site_state(0.0, 1.0);
  CHECK(site_probabilities(s) == std::vector<double>{1.0, 0.0});

  s = two_site_state(kPi / 2.0, 1.0);
  const std::vector<double> p = site_probabilities(s);
  CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-14));

  s.amplitudes = {Complex(0.6, 0.0), Complex(0.0, 0.8)};
  const std::vector<double> q = site_probabilities(s);
  CHECK(q[0] == doctest::Approx(0.36).epsilon(1e-14));
  CHECK(q[1] == doctest::Approx(0.64).epsilon(1e-14));
}

TEST_CASE("self potential") {
  const PhysConstants codata;
  const double m = 1e-14;

  SUBCASE("single site has no self term") {
    DiscreteState s;
    s.positions = {{0, 0, 0}};
    s.amplitudes = {Complex(1.0, 0.0)};
    CHECK(self_potential(s, m, codata) == std::vector<double>{0.0});
  }

  SUBCASE("two sites reproduce the closed-form pair") {
    const double d = 250e-6;
    const double theta = 0.7;
    const DiscreteState s = two_site_state(theta, d);
    const std::vector<double> u = self_potential(s, m, codata);
    const double sin2 = std::sin(theta / 2) * std::sin(theta / 2);
    const double cos2 = std::cos(theta / 2) * std::cos(theta / 2);
    const double scale = codata.G * m * m / d;
    CHECK(u[0] == doctest::Approx(-scale * sin2).epsilon(1e-13));
    CHECK(u[1] == doctest::Approx(-scale * cos2).epsilon(1e-13));
  }

  SUBCASE("equilateral triangle with uniform amplitudes") {
    const double side = 1e-3;
    DiscreteState s;
    s.positions = {{0, 0, 0},
                   {side, 0, 0},
                   {0.5 * side, side * std::sqrt(3.0) / 2.0, 0}};
    const double a = 1.0 / std::sqrt(3.0);
    s.amplitudes = {Complex(a, 0), Complex(a, 0), Complex(a, 0)};
    const std::vector<double> u = self_potential(s, m, codata);
    const double expected = -(2.0 / 3.0) * codata.G * m * m / side;
    for (double uj : u) CHECK(uj == doctest::Approx(expected).epsilon(1e-12));
  }

  SUBCASE("every component is non-positive, negative when shared") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
      const DiscreteState s = random_state(rng, 2 + rep % 7);
      int shared = 0;
      for (const Complex& a : s.amplitudes)
        if (std::norm(a) > 0.0) ++shared;
      for (double uj : self_potential(s, m, codata)) {
        CHECK(uj <= 0.0);
        if (shared >= 2) CHECK(uj < 0.0);
      }
    }
  }

  SUBCASE("1/lambda distance scaling") {
    std::mt19937 rng(11);
    DiscreteState s = random_state(rng, 5);
    const std::vector<double> u = self_potential(s, m, codata);
    const double lambda = 4.0;  // power of two keeps the scaling exact
    for (Vec3& p : s.positions)
      for (double& x : p) x *= lambda;
    const std::vector<double> v = self_potential(s, m, codata);
    for (std::size_t j = 0; j < u.size(); ++j) CHECK(v[j] == u[j] / lambda);
  }

  SUBCASE("coincident sites are rejected") {
    DiscreteState s;
    s.positions = {{0, 0, 0}, {0, 0, 1e-13}};
    s.amplitudes = {Complex(1.0, 0.0), Complex(0.0, 0.0)};
    CHECK_THROWS_AS(self_potential(s, m, codata), DegenerateGeometryError);
  }
}

TEST_CASE("exact potential solution") {
  const PhysConstants codata;
  const double m = 1e-14;
  const double d = 250e-6;

  SUBCASE("t = 0 returns the initial state") {
    const DiscreteState s = two_site_state(0.9, d);
    const DiscreteState out = exact_potential_solution(s, m, codata, 0.0);
    CHECK(max_amplitude_error(out.amplitudes, s.amplitudes) == 0.0);
  }

  SUBCASE("two sites match the interferometer closed form") {
    const double theta = 1.1;
    const double t = 5.0;
    const DiscreteState s = two_site_state(theta, d);
    const DiscreteState out = exact_potential_solution(s, m, codata, t);
    const double rate = codata.G * m * m / (codata.hbar * d);
    const double w1 = rate * std::cos(theta / 2) * std::cos(theta / 2);
    const double w2 = rate * std::sin(theta / 2) * std::sin(theta / 2);
    const Complex b1 = std::cos(theta / 2) * std::polar(1.0, w2 * t);
    const Complex b2 = std::sin(theta / 2) * std::polar(1.0, w1 * t);
    CHECK(std::abs(out.amplitudes[0] - b1) < 1e-14);
    CHECK(std::abs(out.amplitudes[1] - b2) < 1e-14);
  }

  SUBCASE("populations are untouched") {
    std::mt19937 rng(3);
    const DiscreteState s = random_state(rng, 6);
    const double t = time_for_phase(s, m, codata, 15.0);
    const DiscreteState out = exact_potential_solution(s, m, codata, t);
    const std::vector<double> p0 = site_probabilities(s);
    const std::vector<double> p1 = site_probabilities(out);
    for (std::size_t j = 0; j < p0.size(); ++j)
      CHECK(p1[j] == doctest::Approx(p0[j]).epsilon(1e-14));
  }
}

TEST_CASE("rk4 integration") {
  const PhysConstants codata;
  const double m = 1e-14;
  const double d = 250e-6;

  SUBCASE("paper two-site configuration matches the closed form") {
    const DiscreteState s = two_site_state(kPi / 3.0, d);
    const Trajectory traj = integrate(s, {}, m, codata, 5.0);
    const DiscreteState exact = exact_potential_solution(s, m, codata, 5.0);
    CHECK(max_amplitude_error(traj.final_sample().amplitudes,
                              exact.amplitudes) < 1e-9);
    CHECK(traj.metadata.norm_drift < 1e-10);
  }

  SUBCASE("t_final equal to the initial time gives one sample") {
    const DiscreteState s = two_site_state(0.4, d);
    const Trajectory traj = integrate(s, {}, m, codata, 0.0);
    REQUIRE(traj.samples.size() == 1);
    CHECK(traj.samples[0].time == 0.0);
    CHECK(max_amplitude_error(traj.samples[0].amplitudes, s.amplitudes) == 0.0);
  }

  SUBCASE("constant external offset is a pure global phase") {
    const DiscreteState s = two_site_state(0.8, d);
    const double offset = 5e-35;  // J, comparable to hbar-scale rates
    ExternalPotentialSpec v;
    v.values = [offset](double) { return std::vector<double>{offset, offset}; };
    const double t = 4.0;
    const Trajectory with = integrate(s, v, m, codata, t);
    const Trajectory without = integrate(s, {}, m, codata, t);
    const Complex global = std::polar(1.0, -offset * t / codata.hbar);
    const auto& a = with.final_sample().amplitudes;
    const auto& b = without.final_sample().amplitudes;
    for (std::size_t j = 0; j < a.size(); ++j) {
      CHECK(std::norm(a[j]) == doctest::Approx(std::norm(b[j])).epsilon(1e-10));
      CHECK(std::abs(a[j] - global * b[j]) < 1e-8);
    }
  }

  SUBCASE("oracle equivalence on random states, N = 2..8") {
    std::mt19937 rng(42);
    for (std::size_t n = 2; n <= 8; ++n) {
      const DiscreteState s = random_state(rng, n);
      const double t = time_for_phase(s, m, codata, 20.0);
      const Trajectory traj = integrate(s, {}, m, codata, t);
      const DiscreteState exact = exact_potential_solution(s, m, codata, t);
      CHECK(max_amplitude_error(traj.final_sample().amplitudes,
                                exact.amplitudes) < 1e-9);

      // Norm and populations stay put along the whole trajectory.
      const std::vector<double> p0 = site_probabilities(s);
      for (const Trajectory::Sample& sample : traj.samples) {
        double norm = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          const double pj = std::norm(sample.amplitudes[j]);
          norm += pj;
          CHECK(std::abs(pj - p0[j]) < 1e-10);
        }
        CHECK(std::abs(norm - 1.0) < 1e-10);
      }
    }
  }

  SUBCASE("error paths") {
    const DiscreteState s = two_site_state(0.5, d);
    CHECK_THROWS_AS(integrate(s, {}, m, codata, -1.0), ConfigurationError);
    StepPolicy bad;
    bad.max_phase_per_step = 0.0;
    CHECK_THROWS_AS(integrate(s, {}, m, codata, 1.0, bad), ConfigurationError);
  }
}

TEST_CASE("state validation") {
  DiscreteState s;
  CHECK_THROWS_AS(s.validate(), DomainError);  // empty

  s = two_site_state(0.3, 1.0);
  s.amplitudes[0] *= 1.1;  // breaks normalization
  CHECK_THROWS_AS(s.validate(), DomainError);
}
