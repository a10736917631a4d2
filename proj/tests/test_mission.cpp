#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "beampaco/lambert.hpp"
#include "beampaco/mission.hpp"

using namespace beampaco;

namespace {

OrbitalElements circular_elements(double a_au, double phase, double inclination = 0.0) {
  OrbitalElements el;
  el.semi_major_axis = a_au * kAu;
  el.inclination = inclination;
  el.mean_anomaly_ref = phase;
  el.epoch_ref = 59000.0;
  return el;
}

AsteroidDataset make_dataset(std::vector<OrbitalElements> bodies, std::vector<long> ids = {}) {
  AsteroidDataset ds;
  ds.bodies = std::move(bodies);
  for (std::size_t j = 0; j < ds.bodies.size(); ++j) {
    ds.bodies[j].body_id = static_cast<int>(j);
    ds.names.push_back("T" + std::to_string(j));
    ds.external_ids.push_back(ids.empty() ? static_cast<long>(j) : ids[j]);
  }
  return ds;
}

// Best leg by explicit enumeration of the grid, optionally walked backwards.
std::optional<std::pair<double, double>> enumerate_grid(const MissionState& s, int target,
                                                        const AsteroidDataset& ds, bool reverse) {
  std::vector<double> grid;
  for (int i = 0; i < 50; ++i) grid.push_back(60.0 + i * (440.0 / 49.0));
  if (reverse) std::reverse(grid.begin(), grid.end());
  const auto dep = ds.state(s.current_asteroid, s.epoch);
  std::optional<std::pair<double, double>> best;  // (dV, dT)
  for (double dt : grid) {
    const auto arr = ds.state(target, s.epoch + dt);
    const double tof = dt * 86400.0;
    if (tof <= barker_parabolic_tof(dep.position, arr.position, kMuSun, dep.position.cross(dep.velocity))) continue;
    const auto t = cheapest_transfer(dep.position, dep.velocity, arr.position, arr.velocity, tof, kMuSun, 1);
    if (!t) continue;
    if (t->delta_v / tof > 0.9 * 0.3 / s.mass) continue;
    if (!best || t->delta_v < best->first || (t->delta_v == best->first && dt < best->second)) {
      best = std::make_pair(t->delta_v, dt);
    }
  }
  return best;
}

}  // namespace

TEST(MissionConfig, LegTimeGrid) {
  const MissionConfig mc;
  const auto grid = mc.leg_time_grid();
  ASSERT_EQ(grid.size(), 50u);
  EXPECT_EQ(grid.front(), 60.0);
  EXPECT_EQ(grid.back(), 500.0);
  for (std::size_t i = 1; i < grid.size(); ++i) EXPECT_NEAR(grid[i] - grid[i - 1], 440.0 / 49.0, 1e-12);
}

TEST(MissionConfig, RocketEquation) {
  const MissionConfig mc;
  EXPECT_NEAR(mc.propellant_mass(4000.0, 1000.0), 4000.0 * (1.0 - std::exp(-1000.0 / (9.80665 * 3000.0))), 1e-9);
  EXPECT_EQ(mc.propellant_mass(4000.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(mc.acceleration_limit(3000.0), 0.9 * 0.3 / 3000.0);
}

TEST(MissionConfig, Validation) {
  MissionConfig mc;
  mc.accel_safety_fraction = 1.5;
  EXPECT_THROW(mc.validate(), std::invalid_argument);
  mc = {};
  mc.leg_time_min = 600.0;
  EXPECT_THROW(mc.validate(), std::invalid_argument);
  EXPECT_NO_THROW(MissionConfig{}.validate());
}

TEST(RendezvousLeg, RevisitForbidden) {
  const auto ds = make_dataset({circular_elements(1.0, 0.0), circular_elements(1.0, 0.1)});
  const MissionConfig mc;
  const auto root = make_root(0, 59000.0, mc);
  EXPECT_THROW(optimize_rendezvous_leg(root, 0, mc, ds), std::invalid_argument);
  EXPECT_THROW(optimize_rendezvous_leg(root, 2, mc, ds), std::invalid_argument);
}

TEST(RendezvousLeg, RetrogradeTargetInfeasible) {
  const auto ds = make_dataset({circular_elements(1.0, 0.0), circular_elements(1.1, 1.0, kPi - 0.01)});
  const MissionConfig mc;
  const auto root = make_root(0, 59000.0, mc);
  EXPECT_FALSE(optimize_rendezvous_leg(root, 1, mc, ds).has_value());
  // Every grid point fails the Barker bound or the acceleration limit.
  EXPECT_FALSE(enumerate_grid(root, 1, ds, false).has_value());
}

TEST(RendezvousLeg, CoOrbitalMatchesGridEnumeration) {
  const auto ds = make_dataset({circular_elements(1.0, 0.0), circular_elements(1.0, 0.05)});
  const MissionConfig mc;
  const auto root = make_root(0, 59000.0, mc);
  const auto leg = optimize_rendezvous_leg(root, 1, mc, ds);
  ASSERT_TRUE(leg.has_value());
  const auto forward = enumerate_grid(root, 1, ds, false);
  const auto backward = enumerate_grid(root, 1, ds, true);
  ASSERT_TRUE(forward && backward);
  EXPECT_NEAR(leg->delta_v, forward->first, 1e-9 * forward->first);
  EXPECT_EQ(forward->first, backward->first);
  EXPECT_EQ(forward->second, backward->second);
  EXPECT_NEAR(leg->duration(), forward->second, 1e-9);
  EXPECT_EQ(leg->from_id, 0);
  EXPECT_EQ(leg->to_id, 1);
  EXPECT_NEAR(leg->mass_cost, mc.propellant_mass(root.mass, leg->delta_v) + 40.0, 1e-9);
}

TEST(RendezvousLeg, AcceptedLegsSatisfyConstraints) {
  std::vector<OrbitalElements> bodies;
  for (int j = 0; j < 8; ++j) {
    auto el = circular_elements(1.0 + 0.03 * j, 0.4 * j, 0.01 * j);
    el.eccentricity = 0.02 * j;
    bodies.push_back(el);
  }
  const auto ds = make_dataset(bodies);
  const MissionConfig mc;
  const auto root = make_root(0, 59000.0, mc);
  int accepted = 0;
  for (int j = 1; j < 8; ++j) {
    const auto leg = optimize_rendezvous_leg(root, j, mc, ds);
    if (!leg) continue;
    ++accepted;
    const auto dep = ds.state(0, leg->depart_epoch);
    const auto arr = ds.state(j, leg->arrive_epoch);
    const double tof = days_to_seconds(leg->duration());
    EXPECT_GT(leg->arrive_epoch, leg->depart_epoch);
    EXPECT_GT(leg->mass_cost, 0.0);
    EXPECT_LE(leg->delta_v / tof, mc.acceleration_limit(root.mass));
    EXPECT_GT(tof, barker_parabolic_tof(dep.position, arr.position, kMuSun, dep.position.cross(dep.velocity)));
  }
  EXPECT_GT(accepted, 0);
}

TEST(SelfFlyby, ClosedFormAndKinematics) {
  const MissionConfig mc;
  const auto root = make_root(0, 59000.0, mc, 253.518, 198.155, 1);
  const auto leg = self_flyby_leg(root, mc);
  ASSERT_TRUE(leg.has_value());
  const double a = 0.9 * 0.3 / root.mass;
  const double t1 = 400.0 / (std::sqrt(2.0) * a);
  EXPECT_NEAR(leg->delta_v, (1.0 + std::sqrt(2.0)) * 400.0, 1e-9);
  EXPECT_NEAR(leg->delta_v, 965.685424949238, 1e-9);
  EXPECT_NEAR(days_to_seconds(leg->duration()), (2.0 + std::sqrt(2.0)) * t1, 1e-3);
  EXPECT_NEAR(leg->mass_cost, mc.propellant_mass(root.mass, leg->delta_v) + 1.0, 1e-9);
  EXPECT_EQ(leg->kind, LegKind::self_flyby);
  EXPECT_EQ(leg->to_id, leg->from_id);

  // Replay the profile: away at +a for t1, then -a until back at the body.
  const double t2 = days_to_seconds(leg->duration()) - t1;
  const double x1 = 0.5 * a * t1 * t1;
  const double v1 = a * t1;
  const double x_end = x1 + v1 * t2 - 0.5 * a * t2 * t2;
  const double v_end = v1 - a * t2;
  EXPECT_NEAR(x_end / x1, 0.0, 1e-9);
  EXPECT_NEAR(-v_end, 400.0, 1e-6);
  EXPECT_NEAR(a * (t1 + t2), leg->delta_v, 1e-6);
}

TEST(SelfFlyby, ZeroSpeedIsMinimal) {
  MissionConfig mc;
  mc.flyby_min_speed = 0.0;
  const auto root = make_root(0, 59000.0, mc);
  const auto leg = self_flyby_leg(root, mc);
  ASSERT_TRUE(leg.has_value());
  EXPECT_EQ(leg->delta_v, 0.0);
  EXPECT_EQ(leg->duration(), 0.0);
  EXPECT_EQ(leg->mass_cost, mc.penetrator_mass);
}

TEST(SelfFlyby, InsufficientBudget) {
  const MissionConfig mc;
  EXPECT_FALSE(self_flyby_leg(make_root(0, 59000.0, mc, 3499.5), mc).has_value());
  EXPECT_TRUE(self_flyby_leg(make_root(0, 59000.0, mc, 3000.0), mc).has_value());
}

TEST(Extend, GtocRootObjectives) {
  auto ds = make_dataset({circular_elements(1.0, 0.0), circular_elements(1.0, 0.05), circular_elements(1.02, 0.2)},
                         {7, 1712, 9});
  const MissionConfig mc;
  const auto root = gtoc5_root(ds, mc);
  EXPECT_EQ(root.current_asteroid, 1);
  EXPECT_EQ(root.epoch, 59325.360);
  const auto h = evaluate_h_s(root);
  EXPECT_EQ(h.score, 1);
  EXPECT_EQ(h.mass_used, 253.518);
  EXPECT_EQ(h.time_used, 198.155 / 365.25);

  const auto leg = optimize_rendezvous_leg(root, 0, mc, ds);
  ASSERT_TRUE(leg.has_value());
  const auto arrived = extend(root, *leg, mc);
  ASSERT_TRUE(arrived.has_value());
  EXPECT_GT(arrived->mass_used, root.mass_used);
  EXPECT_GT(arrived->time_used, root.time_used);
  EXPECT_EQ(arrived->score, 1);
  const auto flyby = self_flyby_leg(*arrived, mc);
  ASSERT_TRUE(flyby.has_value());
  const auto done = extend(*arrived, *flyby, mc);
  ASSERT_TRUE(done.has_value());
  EXPECT_EQ(done->score, 2);
  EXPECT_GT(done->mass_used, arrived->mass_used);
  EXPECT_GT(done->time_used, arrived->time_used);
  EXPECT_EQ(done->visited, (std::vector<int>{1, 0}));
  EXPECT_NEAR(done->mass + done->mass_used, mc.initial_mass, 1e-9);
  EXPECT_EQ(evaluate_h_s(*done), evaluate_h_s(*done));

  ds.external_ids = {1, 2, 3};
  EXPECT_THROW(gtoc5_root(ds, mc), std::invalid_argument);
}

TEST(Extend, PrunesOverTime) {
  const MissionConfig mc;
  const double limit = 15.0 * 365.25;
  const auto root = make_root(0, 59000.0, mc, 100.0, limit - 10.0);
  Leg leg;
  leg.kind = LegKind::rendezvous;
  leg.from_id = 0;
  leg.to_id = 1;
  leg.depart_epoch = 59000.0;
  leg.mass_cost = 50.0;
  leg.arrive_epoch = 59010.0;
  EXPECT_TRUE(extend(root, leg, mc).has_value());
  leg.arrive_epoch = 59010.5;
  EXPECT_FALSE(extend(root, leg, mc).has_value());
}

TEST(Extend, PrunesOverMass) {
  const MissionConfig mc;
  const auto root = make_root(0, 59000.0, mc, 3400.0, 100.0);
  Leg leg;
  leg.kind = LegKind::rendezvous;
  leg.from_id = 0;
  leg.to_id = 1;
  leg.depart_epoch = 59000.0;
  leg.arrive_epoch = 59100.0;
  leg.mass_cost = 100.0;
  EXPECT_TRUE(extend(root, leg, mc).has_value());
  leg.mass_cost = 100.001;
  EXPECT_FALSE(extend(root, leg, mc).has_value());
}
