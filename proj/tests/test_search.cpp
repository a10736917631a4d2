#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "beampaco/dataset.hpp"
#include "beampaco/search.hpp"
#include "oracles.hpp"

using namespace beampaco;

namespace {

struct Instance {
  AsteroidDataset dataset;
  Problem problem;
  MissionState root;

  Instance(std::size_t count, std::uint64_t seed, const BeltRanges& ranges = oracle::compact_family()) {
    dataset = generate_synthetic_belt(count, seed, ranges);
    problem.dataset = &dataset;
    root = make_root(0, 59000.0, problem.mission);
  }
  Instance(const Instance&) = delete;
};

std::vector<std::vector<int>> sequences(const std::vector<MissionState>& beam) {
  std::vector<std::vector<int>> out;
  for (const auto& s : beam) out.push_back(s.visited);
  return out;
}

bool same_archive(const Archive& a, const Archive& b) {
  if (a.best_score != b.best_score || a.front.size() != b.front.size()) return false;
  for (std::size_t i = 0; i < a.front.size(); ++i) {
    if (a.front[i].visited != b.front[i].visited) return false;
    if (!(evaluate_h_s(a.front[i]) == evaluate_h_s(b.front[i]))) return false;
  }
  return true;
}

}  // namespace

TEST(SearchParams, Validation) {
  SearchParams p;
  EXPECT_NO_THROW(p.validate());
  p.q0 = 1.5;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.beam_width = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.alpha = -1.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(SearchMode, Names) {
  for (auto m : {SearchMode::deterministic, SearchMode::stochastic, SearchMode::paco}) {
    EXPECT_EQ(search_mode_from_string(to_string(m)), m);
  }
  EXPECT_THROW(search_mode_from_string("annealing"), std::invalid_argument);
}

TEST(CombinedHeuristic, AlphaZeroIgnoresPheromones) {
  HeuristicVector h{{0.0, 0.5, 0.25, 1.0}};
  const std::vector<int> cands{1, 2, 3};
  PheromoneStore store(4, 3);
  for (int r = 0; r < 3; ++r) store.deposit(0, 2);
  const auto w = combined_heuristic(0, cands, store, h, 0.0, 2.0);
  const double total = 0.25 + 0.0625 + 1.0;
  ASSERT_EQ(w.size(), 3u);
  EXPECT_DOUBLE_EQ(w[0], 0.25 / total);
  EXPECT_DOUBLE_EQ(w[1], 0.0625 / total);
  EXPECT_DOUBLE_EQ(w[2], 1.0 / total);
}

TEST(CombinedHeuristic, EmptyPopulationIsProportionalToHeuristic) {
  HeuristicVector h{{0.0, 0.5, 0.25, 1.0}};
  const std::vector<int> cands{1, 2, 3};
  const PheromoneStore store(4, 3);
  const auto w = combined_heuristic(0, cands, store, h, 1.0, 1.0);
  EXPECT_DOUBLE_EQ(w[0], 0.5 / 1.75);
  EXPECT_DOUBLE_EQ(w[1], 0.25 / 1.75);
  EXPECT_DOUBLE_EQ(w[2], 1.0 / 1.75);
}

TEST(CombinedHeuristic, PheromoneBiasesWeights) {
  HeuristicVector h{{0.0, 1.0, 1.0}};
  const std::vector<int> cands{1, 2};
  PheromoneStore store(3, 1);
  store.deposit(0, 2);
  const auto w = combined_heuristic(0, cands, store, h, 1.0, 1.0);
  // tau_init = 1/2 and tau_max = 1.
  EXPECT_DOUBLE_EQ(w[0], 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(w[1], 2.0 / 3.0);
}

TEST(CombinedHeuristic, TerminalNodeGivesEmpty) {
  HeuristicVector h{{0.0, 0.0, 0.0}};
  const std::vector<int> cands{1, 2};
  EXPECT_TRUE(combined_heuristic(0, cands, PheromoneStore(3, 3), h, 1.0, 1.0).empty());
}

TEST(Branch, GreedyTakesTopWithIdTies) {
  const std::vector<int> cands{4, 2, 9, 7, 1};
  const std::vector<double> w{0.1, 0.3, 0.3, 0.05, 0.25};
  for (std::uint64_t seed : {0u, 1u, 77u}) {
    Rng rng(seed);
    EXPECT_EQ(branch(cands, w, 3, 1.0, rng), (std::vector<int>{2, 9, 1}));
  }
}

TEST(Branch, ExhaustiveSampleReturnsAll) {
  const std::vector<int> cands{4, 2, 9, 7, 1};
  const std::vector<double> w{0.1, 0.3, 0.3, 0.05, 0.25};
  Rng rng(5);
  auto picked = branch(cands, w, 5, 0.0, rng);
  std::sort(picked.begin(), picked.end());
  EXPECT_EQ(picked, (std::vector<int>{1, 2, 4, 7, 9}));
}

TEST(Branch, ZeroWeightsNeverChosen) {
  const std::vector<int> cands{1, 2, 3};
  const std::vector<double> w{0.0, 1.0, 0.0};
  Rng rng(5);
  EXPECT_EQ(branch(cands, w, 3, 0.0, rng), (std::vector<int>{2}));
  EXPECT_TRUE(branch(std::vector<int>{}, std::vector<double>{}, 3, 0.5, rng).empty());
}

TEST(Branch, SamplingFrequency) {
  const std::vector<int> cands{0, 1};
  const std::vector<double> w{0.9, 0.1};
  Rng rng(2024);
  int first = 0;
  const int draws = 10000;
  for (int d = 0; d < draws; ++d) first += branch(cands, w, 1, 0.0, rng)[0] == 0 ? 1 : 0;
  EXPECT_NEAR(static_cast<double>(first) / draws, 0.9, 0.02);
}

TEST(RunGeneration, GreedyDescentIsSingleDeterministicPath) {
  Instance inst(12, 1, oracle::tight_family());
  SearchParams p;
  p.beam_width = 1;
  p.branching_factor = 1;
  p.q0 = 1.0;
  p.alpha = 0.0;
  const PheromoneStore store(inst.dataset.size(), 3);
  Rng rng_a(1), rng_b(2);
  std::uint64_t legs_a = 0, legs_b = 0;
  const auto a = run_generation(inst.problem, inst.root, p, store, rng_a, legs_a);
  const auto b = run_generation(inst.problem, inst.root, p, store, rng_b, legs_b);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(sequences(a), sequences(b));
  EXPECT_EQ(legs_a, legs_b);
  EXPECT_GT(a[0].score, 1);
}

TEST(RunGeneration, TerminalRootReturnsRoot) {
  Instance inst(5, 3);
  auto root = inst.root;
  root.visited = {0, 1, 2, 3, 4};
  SearchParams p;
  const PheromoneStore store(inst.dataset.size(), 3);
  Rng rng(1);
  std::uint64_t legs = 0;
  const auto beam = run_generation(inst.problem, root, p, store, rng, legs);
  ASSERT_EQ(beam.size(), 1u);
  EXPECT_EQ(beam[0].visited, root.visited);
  EXPECT_EQ(legs, 0u);
}

TEST(RunGeneration, MatchesReferenceBeamSearch) {
  for (std::uint64_t seed : {1u, 7u, 11u}) {
    Instance inst(12, seed, oracle::tight_family());
    SearchParams p;
    p.beam_width = 4;
    p.branching_factor = 4;
    p.q0 = 1.0;
    p.alpha = 0.0;
    const PheromoneStore store(inst.dataset.size(), 3);
    Rng rng(seed);
    std::uint64_t legs = 0;
    const auto beam = run_generation(inst.problem, inst.root, p, store, rng, legs);
    const auto expected =
        oracle::reference_beam_search(inst.root, 4, 4, inst.problem.mission, inst.problem.phasing, inst.dataset);
    EXPECT_EQ(sequences(beam), sequences(expected)) << "belt seed " << seed;
    for (std::size_t i = 0; i < std::min(beam.size(), expected.size()); ++i) {
      EXPECT_EQ(evaluate_h_s(beam[i]), evaluate_h_s(expected[i]));
    }
  }
}

TEST(RunGeneration, ExhaustiveSettingsFindEnumeratedOptimum) {
  Instance inst(9, 1, oracle::tight_family());
  SearchParams p;
  p.beam_width = 1000000;
  p.branching_factor = static_cast<int>(inst.dataset.size());
  p.leg_budget = 1u << 30;
  const auto result = run_search(inst.problem, inst.root, p, SearchMode::deterministic);
  const auto best = oracle::exhaustive_best(inst.root, inst.problem.mission, inst.dataset);
  ASSERT_FALSE(result.archive.empty());
  const auto& front = result.archive.front;
  const auto lightest = *std::min_element(front.begin(), front.end(), [](const auto& a, const auto& b) {
    return a.mass_used < b.mass_used;
  });
  EXPECT_EQ(result.archive.best_score, best.score);
  EXPECT_EQ(lightest.visited, best.visited);
  EXPECT_EQ(lightest.mass_used, best.mass_used);
}

TEST(RunGeneration, AlphaZeroIgnoresPheromoneContents) {
  Instance inst(60, 9);
  SearchParams p;
  p.beam_width = 4;
  p.branching_factor = 5;
  p.q0 = 0.5;
  p.alpha = 0.0;
  PheromoneStore empty(inst.dataset.size(), 3);
  PheromoneStore loaded(inst.dataset.size(), 3);
  for (int i = 0; i < 60; ++i) loaded.deposit_sequence(std::vector<int>{i, (i * 13 + 7) % 60});
  Rng rng_a(31), rng_b(31);
  std::uint64_t legs_a = 0, legs_b = 0;
  RunLog log_a, log_b;
  run_generation(inst.problem, inst.root, p, empty, rng_a, legs_a, &log_a);
  run_generation(inst.problem, inst.root, p, loaded, rng_b, legs_b, &log_b);
  EXPECT_EQ(log_a, log_b);
  EXPECT_GT(log_a.events.size(), 0u);
}

TEST(RunSearch, DeterministicIsRepeatable) {
  Instance inst(60, 4);
  SearchParams p;
  p.beam_width = 5;
  p.branching_factor = 5;
  const auto a = run_search(inst.problem, inst.root, p, SearchMode::deterministic);
  const auto b = run_search(inst.problem, inst.root, p, SearchMode::deterministic);
  EXPECT_EQ(a.log, b.log);
  EXPECT_TRUE(same_archive(a.archive, b.archive));
  EXPECT_EQ(a.generations, 1);
}

TEST(RunSearch, SeededStochasticIsRepeatable) {
  Instance inst(60, 4);
  SearchParams p;
  p.beam_width = 3;
  p.branching_factor = 4;
  p.leg_budget = 400;
  p.seed = 17;
  for (auto mode : {SearchMode::stochastic, SearchMode::paco}) {
    const auto a = run_search(inst.problem, inst.root, p, mode);
    const auto b = run_search(inst.problem, inst.root, p, mode);
    EXPECT_EQ(a.log, b.log);
    EXPECT_TRUE(same_archive(a.archive, b.archive));
    EXPECT_GT(a.generations, 1);
  }
}

TEST(RunSearch, GreedyStochasticReducesToBeamSearch) {
  Instance inst(60, 6);
  SearchParams p;
  p.beam_width = 4;
  p.branching_factor = 4;
  p.q0 = 1.0;
  p.leg_budget = 300;
  const auto det = run_search(inst.problem, inst.root, p, SearchMode::deterministic);
  const auto sto = run_search(inst.problem, inst.root, p, SearchMode::stochastic);
  std::vector<RunEvent> first;
  for (const auto& e : sto.log.events) {
    if (e.generation == 0) first.push_back(e);
  }
  EXPECT_EQ(first, det.log.events);
  EXPECT_TRUE(same_archive(det.archive, sto.archive));
}

TEST(RunSearch, PacoWithoutFeedbackEqualsStochastic) {
  Instance inst(60, 6);
  SearchParams p;
  p.beam_width = 3;
  p.branching_factor = 4;
  p.alpha = 0.0;
  p.leg_budget = 500;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    p.seed = seed;
    const auto sto = run_search(inst.problem, inst.root, p, SearchMode::stochastic);
    const auto aco = run_search(inst.problem, inst.root, p, SearchMode::paco);
    EXPECT_EQ(sto.log, aco.log);
    EXPECT_TRUE(same_archive(sto.archive, aco.archive));
  }
}

TEST(RunSearch, LegBudgetAccounting) {
  Instance inst(60, 8);
  for (std::uint64_t budget : {1u, 50u, 333u}) {
    SearchParams p;
    p.beam_width = 3;
    p.branching_factor = 5;
    p.leg_budget = budget;
    p.seed = budget;
    const auto r = run_search(inst.problem, inst.root, p, SearchMode::paco);
    std::uint64_t optimized = 0;
    std::uint64_t last = 0;
    for (const auto& e : r.log.events) {
      EXPECT_GE(e.leg_count, last);
      last = e.leg_count;
      if (e.kind == EventKind::leg_optimized) {
        ++optimized;
        EXPECT_EQ(e.leg_count, optimized);
      }
      if (e.kind == EventKind::solution_found) {
        EXPECT_EQ(e.sequence.front(), inst.root.visited.front());
      }
    }
    EXPECT_EQ(optimized, r.legs);
    EXPECT_GE(r.legs, budget);
    EXPECT_LE(r.legs, budget + 3u * 5u);
  }
}

TEST(RunSearch, PacoArchiveFeedsPheromones) {
  Instance inst(60, 8);
  SearchParams p;
  p.beam_width = 3;
  p.branching_factor = 4;
  p.leg_budget = 300;
  p.seed = 4;
  const auto aco = run_search(inst.problem, inst.root, p, SearchMode::paco);
  const auto sto = run_search(inst.problem, inst.root, p, SearchMode::stochastic);
  // Generation 0 cannot see any feedback yet.
  std::vector<RunEvent> a0, s0;
  for (const auto& e : aco.log.events) {
    if (e.generation == 0) a0.push_back(e);
  }
  for (const auto& e : sto.log.events) {
    if (e.generation == 0) s0.push_back(e);
  }
  EXPECT_EQ(a0, s0);
  EXPECT_NE(aco.log, sto.log);
}
