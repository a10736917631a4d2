#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "beampaco/units.hpp"

namespace beampaco {

/// Thrown for orbits the Keplerian routines do not handle (e >= 1, a <= 0).
class UnsupportedOrbit : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Classical elements of an elliptic heliocentric orbit. SI lengths, radians,
/// reference epoch in MJD.
struct OrbitalElements {
  double semi_major_axis = 0.0;
  double eccentricity = 0.0;
  double inclination = 0.0;
  double raan = 0.0;
  double arg_periapsis = 0.0;
  double mean_anomaly_ref = 0.0;
  double epoch_ref = 0.0;
  int body_id = 0;
};

struct StateVector {
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  double epoch = 0.0;  // MJD
};

/// Eccentric anomaly E solving E - e sin E = M, for 0 <= e < 1.
///
/// Newton's method from E0 = M (e < 0.8) or E0 = pi, with a bisection
/// fallback on [M - e, M + e] after 50 iterations. The returned E lies on
/// the same 2*pi branch as M.
double solve_kepler(double mean_anomaly, double eccentricity);

/// Wraps an angle into [0, 2*pi).
double wrap_two_pi(double angle);

/// Heliocentric state of an elliptic orbit at `epoch` (MJD).
/// Throws UnsupportedOrbit for e >= 1 or a <= 0.
StateVector propagate(const OrbitalElements& elements, double epoch, double mu = kMuSun);

/// Elements of the osculating ellipse through `state`. Throws UnsupportedOrbit
/// when the state is not on a bound orbit.
OrbitalElements elements_from_state(const StateVector& state, double mu = kMuSun);

/// Two-body propagation of a Cartesian state by `dt` seconds (any conic),
/// using universal variables.
StateVector propagate_state(const StateVector& state, double dt, double mu = kMuSun);

/// Specific orbital energy v^2/2 - mu/r.
double specific_energy(const StateVector& state, double mu = kMuSun);

double orbital_period(const OrbitalElements& elements, double mu = kMuSun);

/// The body table every planner component reads from: elliptic elements,
/// display names, the identifier used in the source file, and the
/// gravitational parameter they were defined with. Internal ids are the
/// dense indices 0..n-1.
struct AsteroidDataset {
  std::vector<OrbitalElements> bodies;
  std::vector<std::string> names;
  std::vector<long> external_ids;
  double mu = kMuSun;

  std::size_t size() const { return bodies.size(); }
  StateVector state(int id, double epoch) const { return propagate(bodies.at(id), epoch, mu); }
  /// Internal index of a body by its file identifier, or -1.
  int find_external(long external_id) const;
};

}  // namespace beampaco
