#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "beampaco/mission.hpp"
#include "beampaco/pareto.hpp"
#include "beampaco/phasing.hpp"
#include "beampaco/pheromone.hpp"
#include "beampaco/rng.hpp"
#include "beampaco/run_log.hpp"

namespace beampaco {

/// Beam Search, Stochastic Beam and Beam P-ACO differ only in these values:
/// q0 = 1 and alpha = 0 is deterministic Beam Search, alpha = 0 alone is
/// Stochastic Beam, and bw = bf = 1 is plain P-ACO.
struct SearchParams {
  int beam_width = 20;
  int branching_factor = 125;
  double q0 = 0.5;
  double alpha = 1.0;
  double beta = 1.0;
  int population_size = 3;
  std::uint64_t leg_budget = 100000;
  std::uint64_t seed = 0;

  void validate() const;
};

enum class SearchMode { deterministic, stochastic, paco };

std::string to_string(SearchMode mode);
SearchMode search_mode_from_string(const std::string& name);

/// Everything the search reads but never changes.
struct Problem {
  const AsteroidDataset* dataset = nullptr;
  MissionConfig mission;
  PhasingConfig phasing;
};

/// tau(i,j)^alpha * h_e(j)^beta over the candidates, normalized to sum 1.
/// Returns an empty vector when every numerator is zero (terminal node).
std::vector<double> combined_heuristic(int node, std::span<const int> candidates, const PheromoneStore& pheromones,
                                       const HeuristicVector& h_e, double alpha, double beta);

/// Chooses up to bf distinct candidates with non-zero weight. With
/// probability q0 the bf heaviest (ties by ascending id); otherwise sampling
/// without replacement, each draw proportional to the remaining weights.
/// A random draw is consumed only when 0 < q0 < 1.
std::vector<int> branch(std::span<const int> candidates, std::span<const double> weights, int branching_factor,
                        double q0, Rng& rng);

/// One tree search from `root`: branch every beam member, optimize each
/// rendezvous leg and its self-fly-by, prune, keep the best bw. Stops when a
/// level yields no feasible extension or, checked between levels, once
/// `legs` reaches the budget. Returns the last non-empty beam.
std::vector<MissionState> run_generation(const Problem& problem, const MissionState& root,
                                         const SearchParams& params, const PheromoneStore& pheromones, Rng& rng,
                                         std::uint64_t& legs, RunLog* log = nullptr, int generation = 0);

struct SearchResult {
  Archive archive;
  RunLog log;
  std::uint64_t legs = 0;
  int generations = 0;
};

/// Generation loop. deterministic: one generation with q0 = 1, alpha = 0.
/// stochastic: independent generations with alpha = 0. paco: each
/// generation's final beam is merged into the archive and the pheromone
/// population rebuilt from it. Repeats until the leg budget is spent.
///
/// Branching draws come from stream 0 of the seed and archive shuffles from
/// stream 1, so pheromone bookkeeping never perturbs branching.
SearchResult run_search(const Problem& problem, const MissionState& root, SearchParams params, SearchMode mode);

}  // namespace beampaco
