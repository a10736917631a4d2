#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "beampaco/mission.hpp"

namespace beampaco {

/// Two minimized costs: mass in kg, time in years.
struct ObjectivePoint {
  double mass = 0.0;
  double time = 0.0;

  friend bool operator==(const ObjectivePoint&, const ObjectivePoint&) = default;
};

/// Hypervolume reference of the GTOC5 budgets: 3500 kg, 15 years.
inline constexpr ObjectivePoint kGtoc5Reference{3500.0, 15.0};

/// a is no worse in both costs and strictly better in one.
constexpr bool dominates(const ObjectivePoint& a, const ObjectivePoint& b) {
  return a.mass <= b.mass && a.time <= b.time && (a.mass < b.mass || a.time < b.time);
}

ObjectivePoint objective_point(const MissionState& state);

/// Pareto fronts by successive non-dominance. Front 0 is the non-dominated
/// set; indices inside a front are ascending.
std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const ObjectivePoint> points);

/// Indices of the best `count` evaluations: score bins in descending order,
/// Pareto fronts of (mass, time) within each bin, and lowest mass (then
/// time, then input position) when a front has to be cut. Members of each
/// front are emitted in that same order.
std::vector<std::size_t> rank_and_select(std::span<const Objectives> evaluations, std::size_t count);

/// Area dominated by `front` and bounded by `reference` (union of the
/// rectangles [p, reference]). Points outside the reference box add nothing.
double hypervolume_2d(std::span<const ObjectivePoint> front, const ObjectivePoint& reference);

/// Mutually non-dominated trajectories that all share the best score seen.
struct Archive {
  int best_score = -1;  // -1 while empty
  std::vector<MissionState> front;

  bool empty() const { return front.empty(); }
  std::vector<ObjectivePoint> points() const;
};

/// Merges candidates into the archive. A higher score replaces the archive
/// with the candidates' non-dominated set at that score; the same score is
/// merged with dominated members dropped; lower scores are ignored. A
/// sequence already present is not added twice.
Archive archive_merge(Archive archive, std::span<const MissionState> candidates);

}  // namespace beampaco
