#include "beampaco/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace beampaco {

void SearchParams::validate() const {
  if (beam_width < 1) throw std::invalid_argument("beam width must be >= 1");
  if (branching_factor < 1) throw std::invalid_argument("branching factor must be >= 1");
  if (!(q0 >= 0.0 && q0 <= 1.0)) throw std::invalid_argument("q0 must be in [0, 1]");
  if (!(alpha >= 0.0) || !(beta >= 0.0)) throw std::invalid_argument("alpha and beta must be >= 0");
  if (population_size < 1) throw std::invalid_argument("population size k must be >= 1");
}

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::deterministic: return "deterministic";
    case SearchMode::stochastic: return "stochastic";
    case SearchMode::paco: return "paco";
  }
  return "unknown";
}

SearchMode search_mode_from_string(const std::string& name) {
  if (name == "deterministic" || name == "beam") return SearchMode::deterministic;
  if (name == "stochastic") return SearchMode::stochastic;
  if (name == "paco") return SearchMode::paco;
  throw std::invalid_argument("unknown search mode '" + name + "'");
}

std::vector<double> combined_heuristic(int node, std::span<const int> candidates, const PheromoneStore& pheromones,
                                       const HeuristicVector& h_e, double alpha, double beta) {
  std::vector<double> weights(candidates.size());
  double total = 0.0;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const int j = candidates[c];
    const double h = h_e.values.at(j);
    const double w = h > 0.0 ? std::pow(pheromones.tau(node, j), alpha) * std::pow(h, beta) : 0.0;
    weights[c] = w;
    total += w;
  }
  if (!(total > 0.0) || !std::isfinite(total)) return {};
  for (double& w : weights) w /= total;
  return weights;
}

std::vector<int> branch(std::span<const int> candidates, std::span<const double> weights, int branching_factor,
                        double q0, Rng& rng) {
  if (candidates.size() != weights.size()) throw std::invalid_argument("branch: weights/candidates mismatch");
  std::vector<std::size_t> live;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (weights[c] > 0.0) live.push_back(c);
  }
  const std::size_t take = std::min(live.size(), static_cast<std::size_t>(std::max(branching_factor, 0)));
  if (take == 0) return {};

  const bool greedy = q0 >= 1.0 || (q0 > 0.0 && rng.uniform() < q0);
  std::vector<int> chosen;
  chosen.reserve(take);
  if (greedy) {
    std::partial_sort(live.begin(), live.begin() + static_cast<std::ptrdiff_t>(take), live.end(),
                      [&](std::size_t a, std::size_t b) {
                        return weights[a] > weights[b] || (weights[a] == weights[b] && candidates[a] < candidates[b]);
                      });
    for (std::size_t k = 0; k < take; ++k) chosen.push_back(candidates[live[k]]);
    return chosen;
  }

  std::vector<double> remaining(live.size());
  for (std::size_t k = 0; k < live.size(); ++k) remaining[k] = weights[live[k]];
  for (std::size_t draw = 0; draw < take; ++draw) {
    const double total = std::accumulate(remaining.begin(), remaining.end(), 0.0);
    const double target = rng.uniform() * total;
    std::size_t pick = remaining.size();
    double cumulative = 0.0;
    std::size_t last_positive = remaining.size();
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      if (remaining[k] <= 0.0) continue;
      last_positive = k;
      cumulative += remaining[k];
      if (target < cumulative) {
        pick = k;
        break;
      }
    }
    if (pick == remaining.size()) pick = last_positive;
    chosen.push_back(candidates[live[pick]]);
    remaining[pick] = 0.0;
  }
  return chosen;
}

std::vector<MissionState> run_generation(const Problem& problem, const MissionState& root,
                                         const SearchParams& params, const PheromoneStore& pheromones, Rng& rng,
                                         std::uint64_t& legs, RunLog* log, int generation) {
  const AsteroidDataset& dataset = *problem.dataset;
  std::vector<MissionState> beam{root};
  std::vector<int> candidates;
  candidates.reserve(dataset.size());

  while (legs < params.leg_budget) {
    std::vector<MissionState> pool;
    for (const MissionState& member : beam) {
      const HeuristicVector h_e =
          rank_heuristic(member.current_asteroid, member.epoch, member.visited, problem.phasing, dataset);
      candidates.clear();
      for (std::size_t j = 0; j < h_e.values.size(); ++j) {
        if (h_e.values[j] > 0.0) candidates.push_back(static_cast<int>(j));
      }
      const std::vector<double> weights =
          combined_heuristic(member.current_asteroid, candidates, pheromones, h_e, params.alpha, params.beta);
      if (weights.empty()) continue;

      for (int target : branch(candidates, weights, params.branching_factor, params.q0, rng)) {
        ++legs;
        RunEvent event;
        event.leg_count = legs;
        event.kind = EventKind::leg_optimized;
        event.generation = generation;
        event.sequence = member.visited;
        event.sequence.push_back(target);

        std::optional<MissionState> extended;
        if (const auto leg = optimize_rendezvous_leg(member, target, problem.mission, dataset)) {
          if (auto arrived = extend(member, *leg, problem.mission)) {
            if (const auto flyby = self_flyby_leg(*arrived, problem.mission)) {
              extended = extend(*arrived, *flyby, problem.mission);
            }
          }
        }
        if (extended) {
          event.feasible = true;
          event.objectives = evaluate_h_s(*extended);
          pool.push_back(std::move(*extended));
        }
        if (log) log->events.push_back(std::move(event));
      }
    }
    if (pool.empty()) break;

    std::vector<Objectives> evaluations;
    evaluations.reserve(pool.size());
    for (const auto& s : pool) evaluations.push_back(evaluate_h_s(s));
    std::vector<MissionState> next;
    for (std::size_t idx : rank_and_select(evaluations, static_cast<std::size_t>(params.beam_width))) {
      next.push_back(std::move(pool[idx]));
    }
    beam = std::move(next);
  }
  return beam;
}

SearchResult run_search(const Problem& problem, const MissionState& root, SearchParams params, SearchMode mode) {
  if (problem.dataset == nullptr) throw std::invalid_argument("run_search: problem has no dataset");
  params.validate();
  problem.mission.validate();
  problem.phasing.validate();
  if (mode == SearchMode::deterministic) {
    params.q0 = 1.0;
    params.alpha = 0.0;
  } else if (mode == SearchMode::stochastic) {
    params.alpha = 0.0;
  }

  const Rng seeded(params.seed);
  Rng branch_rng = seeded.split(0);
  Rng shuffle_rng = seeded.split(1);
  PheromoneStore pheromones(problem.dataset->size(), static_cast<std::size_t>(params.population_size));

  SearchResult result;
  for (;;) {
    const std::uint64_t legs_before = result.legs;
    const int generation = result.generations;
    std::vector<MissionState> beam =
        run_generation(problem, root, params, pheromones, branch_rng, result.legs, &result.log, generation);

    for (const auto& s : beam) {
      result.log.events.push_back({result.legs, EventKind::solution_found, generation, s.visited, true,
                                   evaluate_h_s(s)});
    }
    result.archive = archive_merge(std::move(result.archive), beam);
    result.log.events.push_back({result.legs, EventKind::generation_end, generation, {}, false, {}});
    ++result.generations;

    if (mode == SearchMode::deterministic) break;
    if (result.legs >= params.leg_budget || result.legs == legs_before) break;
    if (mode == SearchMode::paco) pheromone_reset(result.archive, pheromones, shuffle_rng);
  }
  return result;
}

}  // namespace beampaco
