#pragma once

#include <optional>
#include <span>
#include <vector>

#include "beampaco/ephemeris.hpp"

namespace beampaco {

/// How the forward and backward indicator norms are combined.
enum class IndicatorCombination {
  concatenated,  // norm of the 12-component vector: sqrt(fwd^2 + bwd^2)
  mean,          // (fwd + bwd) / 2
};

struct PhasingConfig {
  double reference_transfer_time = 125.0;  // days
  double gamma = 50.0;
  IndicatorCombination combination = IndicatorCombination::concatenated;

  void validate() const;
};

/// Forward orbital phasing indicator: |x_dst - x_src| with
/// x = [r/dT + v, r/dT], both states at the departure epoch. dT in days;
/// the result has velocity units (m/s).
double orbital_indicator(const StateVector& src, const StateVector& dst, double transfer_time_days);

/// Indicator run backward in time from arrival states:
/// x = [r/dT - v, r/dT].
double backward_indicator(const StateVector& src, const StateVector& dst, double transfer_time_days);

/// Forward indicator at the departure epoch combined with the backward
/// indicator at the arrival-side epoch.
double improved_indicator(const StateVector& src_at_departure, const StateVector& dst_at_departure,
                          const StateVector& src_at_arrival, const StateVector& dst_at_arrival,
                          double transfer_time_days,
                          IndicatorCombination combination = IndicatorCombination::concatenated);

/// Per-body successor weights for a trajectory sitting at `current`.
struct HeuristicVector {
  std::vector<double> values;
};

/// Ranks every body other than `current` by improved indicator cost
/// (ascending, ties by id), emits (1 - rank/n)^gamma with n the dataset
/// size, then zeroes visited bodies. `current` gets weight 0. Backward-indicator states are evaluated at
/// t_t + dT, where t_t is `arrival_epoch` when given and epoch + dT
/// otherwise.
HeuristicVector rank_heuristic(int current, double epoch, std::span<const int> visited,
                               const PhasingConfig& config, const AsteroidDataset& dataset,
                               std::optional<double> arrival_epoch = std::nullopt);

/// Improved-indicator costs from `current` to every body (the quantity
/// rank_heuristic ranks).
std::vector<double> indicator_costs(int current, double epoch, const PhasingConfig& config,
                                    const AsteroidDataset& dataset,
                                    std::optional<double> arrival_epoch = std::nullopt);

/// (1 - rank/n)^gamma for ranks 0..n-1.
std::vector<double> rank_weights(std::size_t n, double gamma);

}  // namespace beampaco
