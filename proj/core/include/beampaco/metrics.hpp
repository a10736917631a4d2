#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "beampaco/mission.hpp"
#include "beampaco/pareto.hpp"
#include "beampaco/phasing.hpp"
#include "beampaco/run_log.hpp"

namespace beampaco {

template <typename T>
struct SeriesPoint {
  std::uint64_t leg_count = 0;
  T value{};

  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

/// Cumulative number of distinct visit sequences with score >= min_score
/// among the feasible events of a log (leg_optimized and solution_found).
/// One point per increase.
std::vector<SeriesPoint<std::size_t>> count_distinct_solutions(const RunLog& log, int min_score);

/// Hypervolume of the running Pareto front of solution_found events with
/// exactly `score`. Starts at (0, 0.0) and adds one point per such event.
std::vector<SeriesPoint<double>> hypervolume_series(const RunLog& log, int score,
                                                    const ObjectivePoint& reference = kGtoc5Reference);

/// Highest score among a log's solution_found events, or -1.
int best_logged_score(const RunLog& log);

/// Non-dominated (mass, time) points of the solution_found events at `score`.
std::vector<ObjectivePoint> final_front(const RunLog& log, int score);

/// Fraction of runs whose front weakly dominates (dominates or matches)
/// each grid point.
std::vector<double> attainment_function(std::span<const std::vector<ObjectivePoint>> fronts,
                                        std::span<const ObjectivePoint> grid);

/// Regular grid over [mass_lo, mass_hi] x [time_lo, time_hi], mass-major.
std::vector<ObjectivePoint> objective_grid(double mass_lo, double mass_hi, std::size_t mass_steps, double time_lo,
                                           double time_hi, std::size_t time_steps);

/// Minimal grid points attained with probability >= level (the level
/// attainment surface, sampled on the grid).
std::vector<ObjectivePoint> attainment_surface(std::span<const ObjectivePoint> grid,
                                               std::span<const double> probabilities, double level);

/// Spearman rank correlation; tied values get their average rank.
double spearman_correlation(std::span<const double> x, std::span<const double> y);

struct CorrelationReport {
  int source = -1;
  std::size_t samples = 0;   // targets with a ground-truth leg
  double improved = 0.0;     // Spearman(d_o', min dV)
  double forward = 0.0;      // Spearman(d_o, min dV)
};

/// Minimum dV over the transfer-time grid between two bodies, screening
/// with the Barker bound only (no acceleration limit). nullopt when every
/// grid point fails.
std::optional<double> ground_truth_delta_v(int source, int target, double epoch, const MissionConfig& mission,
                                           const AsteroidDataset& dataset);

/// Rank correlation between phasing indicators and ground-truth leg dV from
/// a random source body to `sample_size` random other bodies at `epoch`.
CorrelationReport indicator_correlation_report(const AsteroidDataset& dataset, double epoch, std::size_t sample_size,
                                               std::uint64_t seed, const PhasingConfig& phasing = {},
                                               const MissionConfig& mission = {});

}  // namespace beampaco
