#pragma once
#include <array>
#include <vector>

#include "ga/multivector.hpp"

namespace ga::kepler {

// Particle of mass m in the potential -k/|r|, state in the (3,0) algebra.
// k > 0 attracts, k < 0 repels.
struct OrbitState {
  Multivector r;
  Multivector v;
  double m = 1.0;
  double k = 1.0;
  double t = 0.0;
};

const Signature &space();
// Errors: invalid_argument for m <= 0 or k == 0, zero_radius for r = 0.
OrbitState make_state(const std::array<double, 3> &r,
                      const std::array<double, 3> &v, double m = 1.0,
                      double k = 1.0, double t = 0.0);

struct Conserved {
  Multivector L; // angular momentum bivector m r ^ v
  Multivector e; // eccentricity vector L v / k - r_hat
  double E = 0;  // 1/2 m v^2 - k/|r|
  double l = 0;  // |L|, l^2 = -L^2
  bool radial = false;
  // |E - (m k^2 / 2 l^2)(e^2 - 1)| / max(1, |E|); NaN for radial motion.
  double energy_identity_residual = 0;
};

// Errors: zero_radius, invalid_argument for k == 0.
Conserved conserved(const OrbitState &s);

// Fixed-step classical RK4 for r' = v, v' = -(k / m |r|^2) r_hat. Returns
// s0 followed by one state per step. Errors: invalid_argument (dt <= 0 or
// nonfinite dt), collision (|r| below min_radius at a stage or along the
// segment between steps), nonfinite_state.
std::vector<OrbitState> simulate(const OrbitState &s0, double dt, long steps,
                                 double min_radius = 1e-9);

// (l^2 / m k) / (1 + e cos theta), theta measured from e. Admissible angles
// have 1 + e cos theta > 0 for k > 0 and < 0 for k < 0; others throw
// Errc::out_of_branch.
double orbit_radius(const Conserved &cq, double m, double k, double theta);

// Angle from e to r in the orbital plane, signed by the orientation of
// e ^ r relative to L. Zero for circular orbits (e = 0).
double orbit_angle(const Conserved &cq, const Multivector &r);

// Period 2 pi sqrt(m a^3 / k) of a bound orbit, a = -k / 2E.
double radial_period(const Conserved &cq, double m, double k);

// m (r x v) component-wise, for comparison with dual(L).
std::array<double, 3> classical_angular_momentum(const OrbitState &s);

} // namespace ga::kepler
