#include "beampaco/mission.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "beampaco/lambert.hpp"

namespace beampaco {

void MissionConfig::validate() const {
  if (!(initial_mass > 0.0) || !(usable_budget > 0.0) || !(payload_mass > 0.0) || !(penetrator_mass > 0.0)) {
    throw std::invalid_argument("mission masses must be positive");
  }
  if (!(usable_budget < initial_mass)) throw std::invalid_argument("usable budget must be below initial mass");
  if (!(max_mission_time > 0.0)) throw std::invalid_argument("max mission time must be positive");
  if (!(max_thrust > 0.0) || !(specific_impulse > 0.0) || !(standard_gravity > 0.0)) {
    throw std::invalid_argument("propulsion constants must be positive");
  }
  if (!(accel_safety_fraction > 0.0 && accel_safety_fraction <= 1.0)) {
    throw std::invalid_argument("accel_safety_fraction must be in (0, 1]");
  }
  if (!(leg_time_min > 0.0) || !(leg_time_max >= leg_time_min)) {
    throw std::invalid_argument("leg time window must satisfy 0 < min <= max");
  }
  if (leg_grid_points < 1) throw std::invalid_argument("leg grid needs at least one point");
  if (max_revs < 0) throw std::invalid_argument("max_revs must be non-negative");
  if (!(flyby_min_speed >= 0.0)) throw std::invalid_argument("fly-by speed must be non-negative");
}

std::vector<double> MissionConfig::leg_time_grid() const {
  std::vector<double> grid(static_cast<std::size_t>(leg_grid_points));
  if (leg_grid_points == 1) {
    grid[0] = leg_time_min;
    return grid;
  }
  const double step = (leg_time_max - leg_time_min) / (leg_grid_points - 1);
  for (int i = 0; i < leg_grid_points; ++i) grid[i] = leg_time_min + i * step;
  grid.back() = leg_time_max;
  return grid;
}

double MissionConfig::propellant_mass(double mass, double delta_v) const {
  return mass * (1.0 - std::exp(-delta_v / (standard_gravity * specific_impulse)));
}

double MissionConfig::acceleration_limit(double mass) const {
  return accel_safety_fraction * max_thrust / mass;
}

MissionState make_root(int body, double epoch, const MissionConfig& config, double mass_used,
                       double time_used_days, int score) {
  MissionState s;
  s.current_asteroid = body;
  s.epoch = epoch;
  s.mass_used = mass_used;
  s.mass = config.initial_mass - mass_used;
  s.time_used = time_used_days;
  s.score = score;
  s.visited = {body};
  return s;
}

MissionState gtoc5_root(const AsteroidDataset& dataset, const MissionConfig& config) {
  const int body = dataset.find_external(kGtoc5RootExternalId);
  if (body < 0) throw std::invalid_argument("dataset has no body with id 1712 (2001 GP2)");
  return make_root(body, kGtoc5RootEpoch, config, kGtoc5RootMassUsed, kGtoc5RootTimeUsed, 1);
}

std::optional<Leg> optimize_rendezvous_leg(const MissionState& state, int target, const MissionConfig& config,
                                           const AsteroidDataset& dataset) {
  if (target < 0 || static_cast<std::size_t>(target) >= dataset.size()) {
    throw std::invalid_argument("rendezvous target out of range");
  }
  if (target == state.current_asteroid ||
      std::find(state.visited.begin(), state.visited.end(), target) != state.visited.end()) {
    throw std::invalid_argument("rendezvous target already visited");
  }

  const StateVector departure = dataset.state(state.current_asteroid, state.epoch);
  const Vec3 normal = departure.position.cross(departure.velocity);
  const double accel_limit = config.acceleration_limit(state.mass);

  std::optional<Leg> best;
  for (double dt_days : config.leg_time_grid()) {
    const double tof = days_to_seconds(dt_days);
    const StateVector arrival = dataset.state(target, state.epoch + dt_days);
    if (tof <= barker_parabolic_tof(departure.position, arrival.position, dataset.mu, normal)) continue;

    const auto transfer = cheapest_transfer(departure.position, departure.velocity, arrival.position,
                                            arrival.velocity, tof, dataset.mu, config.max_revs);
    if (!transfer) continue;
    if (transfer->delta_v / tof > accel_limit) continue;
    if (best && !(transfer->delta_v < best->delta_v)) continue;

    Leg leg;
    leg.kind = LegKind::rendezvous;
    leg.from_id = state.current_asteroid;
    leg.to_id = target;
    leg.depart_epoch = state.epoch;
    leg.arrive_epoch = state.epoch + dt_days;
    leg.delta_v = transfer->delta_v;
    leg.revolutions = transfer->solution.revolutions;
    best = leg;
  }
  if (best) best->mass_cost = config.propellant_mass(state.mass, best->delta_v) + config.payload_mass;
  return best;
}

std::optional<Leg> self_flyby_leg(const MissionState& state, const MissionConfig& config) {
  const double accel = config.acceleration_limit(state.mass);
  const double t1 = config.flyby_min_speed / (std::numbers::sqrt2 * accel);
  const double duration = (2.0 + std::numbers::sqrt2) * t1;
  const double delta_v = (1.0 + std::numbers::sqrt2) * config.flyby_min_speed;

  Leg leg;
  leg.kind = LegKind::self_flyby;
  leg.from_id = state.current_asteroid;
  leg.to_id = state.current_asteroid;
  leg.depart_epoch = state.epoch;
  leg.arrive_epoch = state.epoch + seconds_to_days(duration);
  leg.delta_v = delta_v;
  leg.mass_cost = config.propellant_mass(state.mass, delta_v) + config.penetrator_mass;
  if (state.mass_used + leg.mass_cost > config.usable_budget) return std::nullopt;
  return leg;
}

std::optional<MissionState> extend(const MissionState& state, const Leg& leg, const MissionConfig& config) {
  MissionState next = state;
  next.epoch = leg.arrive_epoch;
  next.mass -= leg.mass_cost;
  next.mass_used += leg.mass_cost;
  next.time_used += leg.duration();
  if (leg.kind == LegKind::rendezvous) {
    next.current_asteroid = leg.to_id;
    next.visited.push_back(leg.to_id);
  } else {
    next.score += 1;
  }
  next.legs.push_back(leg);
  if (next.mass_used > config.usable_budget || next.time_used > config.max_mission_days()) return std::nullopt;
  return next;
}

Objectives evaluate_h_s(const MissionState& state) {
  return {state.score, state.mass_used, state.time_used / kYear};
}

}  // namespace beampaco
