#include "beampaco/phasing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace beampaco {

namespace {

double checked_seconds(double transfer_time_days) {
  if (!(transfer_time_days > 0.0) || !std::isfinite(transfer_time_days)) {
    throw std::invalid_argument("phasing indicator: transfer time must be positive");
  }
  return days_to_seconds(transfer_time_days);
}

double indicator_norm(const StateVector& src, const StateVector& dst, double dt_seconds,
                      double velocity_sign) {
  const Vec3 dr = (dst.position - src.position) / dt_seconds;
  const Vec3 dv = velocity_sign * (dst.velocity - src.velocity);
  return std::sqrt((dr + dv).squaredNorm() + dr.squaredNorm());
}

}  // namespace

void PhasingConfig::validate() const {
  if (!(reference_transfer_time > 0.0)) throw std::invalid_argument("reference transfer time must be > 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
}

double orbital_indicator(const StateVector& src, const StateVector& dst, double transfer_time_days) {
  return indicator_norm(src, dst, checked_seconds(transfer_time_days), 1.0);
}

double backward_indicator(const StateVector& src, const StateVector& dst, double transfer_time_days) {
  return indicator_norm(src, dst, checked_seconds(transfer_time_days), -1.0);
}

double improved_indicator(const StateVector& src_at_departure, const StateVector& dst_at_departure,
                          const StateVector& src_at_arrival, const StateVector& dst_at_arrival,
                          double transfer_time_days, IndicatorCombination combination) {
  const double fwd = orbital_indicator(src_at_departure, dst_at_departure, transfer_time_days);
  const double bwd = backward_indicator(src_at_arrival, dst_at_arrival, transfer_time_days);
  if (combination == IndicatorCombination::mean) return 0.5 * (fwd + bwd);
  return std::sqrt(fwd * fwd + bwd * bwd);
}

std::vector<double> indicator_costs(int current, double epoch, const PhasingConfig& config,
                                    const AsteroidDataset& dataset, std::optional<double> arrival_epoch) {
  config.validate();
  const int n = static_cast<int>(dataset.size());
  if (current < 0 || current >= n) throw std::out_of_range("indicator_costs: current body out of range");

  const double dt = config.reference_transfer_time;
  const double backward_epoch = arrival_epoch.value_or(epoch + dt) + dt;
  const StateVector src_dep = dataset.state(current, epoch);
  const StateVector src_arr = dataset.state(current, backward_epoch);

  std::vector<double> costs(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    costs[j] = improved_indicator(src_dep, dataset.state(j, epoch), src_arr, dataset.state(j, backward_epoch),
                                  dt, config.combination);
  }
  return costs;
}

std::vector<double> rank_weights(std::size_t n, double gamma) {
  std::vector<double> w(n);
  for (std::size_t p = 0; p < n; ++p) {
    w[p] = std::pow(1.0 - static_cast<double>(p) / static_cast<double>(n), gamma);
  }
  return w;
}

HeuristicVector rank_heuristic(int current, double epoch, std::span<const int> visited,
                               const PhasingConfig& config, const AsteroidDataset& dataset,
                               std::optional<double> arrival_epoch) {
  const std::vector<double> costs = indicator_costs(current, epoch, config, dataset, arrival_epoch);
  const std::size_t n = costs.size();

  // The current body is never its own successor; every other body gets a
  // rank, visited or not.
  std::vector<int> order;
  order.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (static_cast<int>(j) != current) order.push_back(static_cast<int>(j));
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return costs[a] < costs[b] || (costs[a] == costs[b] && a < b);
  });

  const std::vector<double> weights = rank_weights(n, config.gamma);
  HeuristicVector h;
  h.values.assign(n, 0.0);
  for (std::size_t p = 0; p < order.size(); ++p) h.values[order[p]] = weights[p];
  for (int v : visited) {
    if (v >= 0 && static_cast<std::size_t>(v) < n) h.values[v] = 0.0;
  }
  return h;
}

}  // namespace beampaco
