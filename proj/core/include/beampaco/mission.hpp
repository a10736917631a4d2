#pragma once

#include <optional>
#include <vector>

#include "beampaco/ephemeris.hpp"

namespace beampaco {

/// Spacecraft, budget and leg-optimizer settings. Masses in kg, thrust in N,
/// leg times in days, mission time in years.
struct MissionConfig {
  double initial_mass = 4000.0;
  double usable_budget = 3500.0;
  double payload_mass = 40.0;
  double penetrator_mass = 1.0;
  double max_mission_time = 15.0;
  double launch_window = 11.0;  // informational
  double max_thrust = 0.3;
  double specific_impulse = 3000.0;
  double standard_gravity = kStandardGravity;
  double accel_safety_fraction = 0.9;
  double leg_time_min = 60.0;
  double leg_time_max = 500.0;
  int leg_grid_points = 50;
  int max_revs = 1;
  /// Relative speed at which the penetrator must hit during a self-fly-by.
  double flyby_min_speed = 400.0;  // m/s

  void validate() const;
  /// Evenly spaced transfer times over [leg_time_min, leg_time_max].
  std::vector<double> leg_time_grid() const;
  double max_mission_days() const { return max_mission_time * kYear; }
  /// Propellant burnt to give `delta_v` to a spacecraft of mass `mass`.
  double propellant_mass(double mass, double delta_v) const;
  /// Acceleration bound enforced on transfer legs at spacecraft mass `mass`.
  double acceleration_limit(double mass) const;
};

enum class LegKind { rendezvous, self_flyby };

struct Leg {
  LegKind kind = LegKind::rendezvous;
  int from_id = -1;
  int to_id = -1;
  double depart_epoch = 0.0;  // MJD
  double arrive_epoch = 0.0;  // MJD
  double delta_v = 0.0;       // m/s
  double mass_cost = 0.0;     // kg, propellant plus deployed hardware
  int revolutions = 0;

  double duration() const { return arrive_epoch - depart_epoch; }
};

/// Resource state of a (partial) mission. time_used is in days and counts
/// from launch; score is the number of fully serviced asteroids.
struct MissionState {
  int current_asteroid = -1;
  double epoch = 0.0;  // MJD
  double mass = 0.0;
  double mass_used = 0.0;
  double time_used = 0.0;
  int score = 0;
  std::vector<int> visited;
  std::vector<Leg> legs;
};

/// The three objectives the search ranks on: score (max), mass and time (min).
struct Objectives {
  int score = 0;
  double mass_used = 0.0;   // kg
  double time_used = 0.0;   // years

  friend bool operator==(const Objectives&, const Objectives&) = default;
};

/// A mission parked at `body` at `epoch` with the given budgets spent.
MissionState make_root(int body, double epoch, const MissionConfig& config, double mass_used = 0.0,
                       double time_used_days = 0.0, int score = 0);

/// Starting state of the GTOC5 experiments: score 1 at asteroid 2001 GP2
/// (file id 1712), departing at MJD 59325.360 with 253.518 kg and
/// 198.155 days already spent. Requires that body in `dataset`.
MissionState gtoc5_root(const AsteroidDataset& dataset, const MissionConfig& config);

inline constexpr long kGtoc5RootExternalId = 1712;
inline constexpr double kGtoc5RootEpoch = 59325.360;
inline constexpr double kGtoc5RootMassUsed = 253.518;
inline constexpr double kGtoc5RootTimeUsed = 198.155;

/// Best rendezvous leg to `target` over the transfer-time grid.
///
/// Per grid point: reject if dT does not exceed the Barker parabolic time,
/// take the cheapest Lambert arc matching both bodies' velocities, reject if
/// dV/dT exceeds the acceleration limit at the current mass. The surviving
/// point with the lowest dV wins (earliest dT on ties). Mass cost is the
/// propellant plus the scientific payload. nullopt when nothing survives.
/// Throws std::invalid_argument for an out-of-range or already visited target.
std::optional<Leg> optimize_rendezvous_leg(const MissionState& state, int target, const MissionConfig& config,
                                           const AsteroidDataset& dataset);

/// Self-fly-by of the current asteroid under a linear acceleration model.
///
/// Starting at rest relative to the asteroid, the spacecraft thrusts away at
/// a = accel_safety_fraction * max_thrust / mass for t1, then thrusts back
/// toward the asteroid for t2 and reaches it at speed flyby_min_speed. The
/// minimum-time profile gives
///   t1 = v / (sqrt(2) a),  t2 = (1 + sqrt(2)) t1,
///   duration = (2 + sqrt(2)) t1,  dV = a * duration = (1 + sqrt(2)) v.
/// Mass cost is the propellant for dV plus the penetrator. nullopt when the
/// mass budget cannot cover it.
std::optional<Leg> self_flyby_leg(const MissionState& state, const MissionConfig& config);

/// State after flying `leg`; nullopt when the result exceeds the mass
/// budget or the mission duration (the pruned case).
std::optional<MissionState> extend(const MissionState& state, const Leg& leg, const MissionConfig& config);

Objectives evaluate_h_s(const MissionState& state);

}  // namespace beampaco
