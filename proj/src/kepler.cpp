#include "ga/kepler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ga/error.hpp"

namespace ga::kepler {

namespace {

double radius(const Multivector &r) { return std::sqrt(norm_squared(r)); }

Multivector acceleration(const Multivector &r, double m, double k,
                         double min_radius) {
  const double d = radius(r);
  if (!(d >= min_radius))
    throw Error(std::isfinite(d) ? Errc::collision : Errc::nonfinite_state,
                "particle reached |r| = " + std::to_string(d));
  return r * (-k / (m * d * d * d));
}

// Closest approach to the origin along the straight segment a -> b. A
// plunging orbit can jump over the origin between samples.
double segment_distance(const Multivector &a, const Multivector &b) {
  const Multivector d = b - a;
  const double dd = norm_squared(d);
  double t = dd > 0.0 ? -scalar_product(a, d) / dd : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return radius(a + d * t);
}

bool finite(const Multivector &a) {
  for (const auto &t : a.terms())
    if (!std::isfinite(t.coeff))
      return false;
  return true;
}

} // namespace

const Signature &space() {
  static const Signature sig = make_algebra(3, 0);
  return sig;
}

OrbitState make_state(const std::array<double, 3> &r,
                      const std::array<double, 3> &v, double m, double k,
                      double t) {
  if (!(m > 0.0) || k == 0.0)
    throw Error(Errc::invalid_argument, "need m > 0 and k != 0");
  OrbitState s{Multivector::vector(space(), r), Multivector::vector(space(), v),
               m, k, t};
  if (s.r.is_zero())
    throw Error(Errc::zero_radius, "initial position is at the origin");
  return s;
}

Conserved conserved(const OrbitState &s) {
  if (s.k == 0.0)
    throw Error(Errc::invalid_argument, "force constant k must be nonzero");
  const double d = radius(s.r);
  if (!(d > 0.0))
    throw Error(Errc::zero_radius, "position is at the origin");

  Conserved c{Multivector(s.r.algebra()), Multivector(s.r.algebra())};
  c.L = s.m * outer_product(s.r, s.v);
  c.e = grade_project(c.L * s.v / s.k, 1) - s.r / d;
  c.E = 0.5 * s.m * norm_squared(s.v) - s.k / d;
  c.l = std::sqrt(std::max(0.0, -(c.L * c.L).scalar_part()));
  c.radial = c.L.is_zero();
  if (c.radial) {
    c.energy_identity_residual = std::numeric_limits<double>::quiet_NaN();
  } else {
    const double predicted =
        s.m * s.k * s.k / (2.0 * c.l * c.l) * (norm_squared(c.e) - 1.0);
    c.energy_identity_residual =
        std::abs(c.E - predicted) / std::max(1.0, std::abs(c.E));
  }
  return c;
}

std::vector<OrbitState> simulate(const OrbitState &s0, double dt, long steps,
                                 double min_radius) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw Error(Errc::invalid_argument, "time step must be positive and finite");
  if (steps < 0)
    throw Error(Errc::invalid_argument, "step count must be >= 0");

  std::vector<OrbitState> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  out.push_back(s0);
  const double m = s0.m, k = s0.k;
  Multivector r = s0.r, v = s0.v;
  for (long i = 0; i < steps; ++i) {
    const Multivector k1r = v;
    const Multivector k1v = acceleration(r, m, k, min_radius);
    const Multivector k2r = v + k1v * (0.5 * dt);
    const Multivector k2v = acceleration(r + k1r * (0.5 * dt), m, k, min_radius);
    const Multivector k3r = v + k2v * (0.5 * dt);
    const Multivector k3v = acceleration(r + k2r * (0.5 * dt), m, k, min_radius);
    const Multivector k4r = v + k3v * dt;
    const Multivector k4v = acceleration(r + k3r * dt, m, k, min_radius);
    const Multivector r_prev = r;
    r += (k1r + 2.0 * k2r + 2.0 * k3r + k4r) * (dt / 6.0);
    v += (k1v + 2.0 * k2v + 2.0 * k3v + k4v) * (dt / 6.0);
    if (!finite(r) || !finite(v))
      throw Error(Errc::nonfinite_state, "state became nonfinite");
    if (!(segment_distance(r_prev, r) >= min_radius))
      throw Error(Errc::collision, "particle reached the origin");
    out.push_back({r, v, m, k, s0.t + static_cast<double>(i + 1) * dt});
  }
  return out;
}

double orbit_radius(const Conserved &cq, double m, double k, double theta) {
  const double e = std::sqrt(norm_squared(cq.e));
  const double denom = 1.0 + e * std::cos(theta);
  if ((k > 0.0 && !(denom > 0.0)) || (k < 0.0 && !(denom < 0.0)) || k == 0.0)
    throw Error(Errc::out_of_branch,
                "angle " + std::to_string(theta) + " is not on the orbit");
  return (cq.l * cq.l / (m * k)) / denom;
}

double orbit_angle(const Conserved &cq, const Multivector &r) {
  // Circular orbit: every direction is periapsis.
  if (cq.e.is_zero())
    return 0.0;
  const Multivector &ref = cq.e;
  const double cos_part = scalar_product(ref, r);
  // e ^ r = sin(theta) |e||r| L_hat
  const Multivector wedge = outer_product(ref, r);
  double sin_part = std::sqrt(std::max(0.0, norm_squared(wedge)));
  if (!cq.L.is_zero() && scalar_product(wedge, cq.L) < 0.0)
    sin_part = -sin_part;
  return std::atan2(sin_part, cos_part);
}

double radial_period(const Conserved &cq, double m, double k) {
  if (!(cq.E < 0.0) || k <= 0.0)
    throw Error(Errc::invalid_argument, "only bound orbits have a period");
  const double a = -k / (2.0 * cq.E);
  return 2.0 * std::numbers::pi * std::sqrt(m * a * a * a / k);
}

std::array<double, 3> classical_angular_momentum(const OrbitState &s) {
  const auto r = s.r.vector_part();
  const auto v = s.v.vector_part();
  return {s.m * (r[1] * v[2] - r[2] * v[1]), s.m * (r[2] * v[0] - r[0] * v[2]),
          s.m * (r[0] * v[1] - r[1] * v[0])};
}

} // namespace ga::kepler
