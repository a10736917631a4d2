#include "beampaco/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "beampaco/lambert.hpp"
#include "beampaco/rng.hpp"

namespace beampaco {

std::vector<SeriesPoint<std::size_t>> count_distinct_solutions(const RunLog& log, int min_score) {
  std::set<std::vector<int>> seen;
  std::vector<SeriesPoint<std::size_t>> series;
  for (const auto& e : log.events) {
    if (e.kind == EventKind::generation_end || !e.feasible || e.objectives.score < min_score) continue;
    if (seen.insert(e.sequence).second) series.push_back({e.leg_count, seen.size()});
  }
  return series;
}

std::vector<SeriesPoint<double>> hypervolume_series(const RunLog& log, int score, const ObjectivePoint& reference) {
  std::vector<SeriesPoint<double>> series{{0, 0.0}};
  std::vector<ObjectivePoint> front;
  for (const auto& e : log.events) {
    if (e.kind != EventKind::solution_found || !e.feasible || e.objectives.score != score) continue;
    const ObjectivePoint p{e.objectives.mass_used, e.objectives.time_used};
    const bool covered = std::any_of(front.begin(), front.end(),
                                     [&](const ObjectivePoint& q) { return dominates(q, p) || q == p; });
    if (!covered) {
      std::erase_if(front, [&](const ObjectivePoint& q) { return dominates(p, q); });
      front.push_back(p);
    }
    series.push_back({e.leg_count, hypervolume_2d(front, reference)});
  }
  return series;
}

int best_logged_score(const RunLog& log) {
  int best = -1;
  for (const auto& e : log.events) {
    if (e.kind == EventKind::solution_found && e.feasible) best = std::max(best, e.objectives.score);
  }
  return best;
}

std::vector<ObjectivePoint> final_front(const RunLog& log, int score) {
  std::vector<ObjectivePoint> pts;
  for (const auto& e : log.events) {
    if (e.kind == EventKind::solution_found && e.feasible && e.objectives.score == score) {
      pts.push_back({e.objectives.mass_used, e.objectives.time_used});
    }
  }
  std::vector<ObjectivePoint> front;
  for (const auto& p : pts) {
    const bool dominated = std::any_of(pts.begin(), pts.end(), [&](const ObjectivePoint& q) { return dominates(q, p); });
    const bool duplicate = std::find(front.begin(), front.end(), p) != front.end();
    if (!dominated && !duplicate) front.push_back(p);
  }
  return front;
}

std::vector<double> attainment_function(std::span<const std::vector<ObjectivePoint>> fronts,
                                        std::span<const ObjectivePoint> grid) {
  if (fronts.empty()) throw std::invalid_argument("attainment_function needs at least one run");
  std::vector<double> prob(grid.size(), 0.0);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    std::size_t hits = 0;
    for (const auto& front : fronts) {
      const bool attained = std::any_of(front.begin(), front.end(), [&](const ObjectivePoint& p) {
        return p.mass <= grid[g].mass && p.time <= grid[g].time;
      });
      if (attained) ++hits;
    }
    prob[g] = static_cast<double>(hits) / static_cast<double>(fronts.size());
  }
  return prob;
}

std::vector<ObjectivePoint> objective_grid(double mass_lo, double mass_hi, std::size_t mass_steps, double time_lo,
                                           double time_hi, std::size_t time_steps) {
  if (mass_steps < 1 || time_steps < 1) throw std::invalid_argument("objective_grid: empty grid");
  std::vector<ObjectivePoint> grid;
  grid.reserve(mass_steps * time_steps);
  for (std::size_t m = 0; m < mass_steps; ++m) {
    const double mass = mass_steps == 1 ? mass_lo : mass_lo + (mass_hi - mass_lo) * m / (mass_steps - 1);
    for (std::size_t t = 0; t < time_steps; ++t) {
      const double time = time_steps == 1 ? time_lo : time_lo + (time_hi - time_lo) * t / (time_steps - 1);
      grid.push_back({mass, time});
    }
  }
  return grid;
}

std::vector<ObjectivePoint> attainment_surface(std::span<const ObjectivePoint> grid,
                                               std::span<const double> probabilities, double level) {
  if (grid.size() != probabilities.size()) throw std::invalid_argument("attainment_surface: size mismatch");
  std::vector<ObjectivePoint> attained;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (probabilities[g] >= level) attained.push_back(grid[g]);
  }
  std::vector<ObjectivePoint> surface;
  for (const auto& p : attained) {
    const bool dominated =
        std::any_of(attained.begin(), attained.end(), [&](const ObjectivePoint& q) { return dominates(q, p); });
    if (!dominated) surface.push_back(p);
  }
  return surface;
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j);
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman_correlation: size mismatch");
  if (x.size() < 2) return 0.0;
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

std::optional<double> ground_truth_delta_v(int source, int target, double epoch, const MissionConfig& mission,
                                           const AsteroidDataset& dataset) {
  const StateVector dep = dataset.state(source, epoch);
  const Vec3 normal = dep.position.cross(dep.velocity);
  std::optional<double> best;
  for (double dt_days : mission.leg_time_grid()) {
    const double tof = days_to_seconds(dt_days);
    const StateVector arr = dataset.state(target, epoch + dt_days);
    if (tof <= barker_parabolic_tof(dep.position, arr.position, dataset.mu, normal)) continue;
    const auto transfer =
        cheapest_transfer(dep.position, dep.velocity, arr.position, arr.velocity, tof, dataset.mu, mission.max_revs);
    if (transfer && (!best || transfer->delta_v < *best)) best = transfer->delta_v;
  }
  return best;
}

CorrelationReport indicator_correlation_report(const AsteroidDataset& dataset, double epoch, std::size_t sample_size,
                                               std::uint64_t seed, const PhasingConfig& phasing,
                                               const MissionConfig& mission) {
  const std::size_t n = dataset.size();
  if (n < 2) throw std::invalid_argument("correlation report needs at least two bodies");
  if (sample_size > n) throw std::invalid_argument("sample size exceeds dataset size");

  Rng rng(seed);
  CorrelationReport report;
  report.source = static_cast<int>(rng.below(n));
  std::vector<int> others;
  for (std::size_t j = 0; j < n; ++j) {
    if (static_cast<int>(j) != report.source) others.push_back(static_cast<int>(j));
  }
  rng.shuffle(others);
  others.resize(std::min(sample_size, others.size()));

  const double dt = phasing.reference_transfer_time;
  const double backward_epoch = epoch + 2.0 * dt;
  const StateVector src_dep = dataset.state(report.source, epoch);
  const StateVector src_arr = dataset.state(report.source, backward_epoch);

  std::vector<double> improved, forward, truth;
  for (int target : others) {
    const auto dv = ground_truth_delta_v(report.source, target, epoch, mission, dataset);
    if (!dv) continue;
    const StateVector dst_dep = dataset.state(target, epoch);
    const StateVector dst_arr = dataset.state(target, backward_epoch);
    improved.push_back(improved_indicator(src_dep, dst_dep, src_arr, dst_arr, dt, phasing.combination));
    forward.push_back(orbital_indicator(src_dep, dst_dep, dt));
    truth.push_back(*dv);
  }
  report.samples = truth.size();
  report.improved = spearman_correlation(improved, truth);
  report.forward = spearman_correlation(forward, truth);
  return report;
}

}  // namespace beampaco
