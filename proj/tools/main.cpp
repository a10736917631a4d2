// beampaco command-line driver.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "beampaco/dataset.hpp"
#include "beampaco/metrics.hpp"
#include "beampaco/search.hpp"

using namespace beampaco;

namespace {

constexpr long kGtoc5RootExternalId = 1712;

struct DatasetOptions {
  std::string path;
  std::size_t synth_count = 200;
  std::uint64_t synth_seed = 1;
};

struct RootOptions {
  std::string text;  // ID:MJD, external id
};

struct SearchOptions {
  std::string mode = "paco";
  SearchParams params;
  double gamma = 50.0;
  double reference_transfer_time = 125.0;
};

void add_dataset_options(CLI::App* app, DatasetOptions& d) {
  app->add_option("--dataset", d.path, "asteroid file (id, name, epoch, a, e, i, raan, argp, M)");
  app->add_option("--synth-count", d.synth_count, "synthetic belt size when no dataset is given")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  app->add_option("--synth-seed", d.synth_seed, "synthetic belt seed when no dataset is given");
}

void add_search_options(CLI::App* app, SearchOptions& s, RootOptions& r) {
  app->add_option("--mode", s.mode, "deterministic, stochastic or paco")
      ->check(CLI::IsMember({"deterministic", "stochastic", "paco"}));
  app->add_option("--bw", s.params.beam_width, "beam width")->check(CLI::PositiveNumber);
  app->add_option("--bf", s.params.branching_factor, "branching factor")->check(CLI::PositiveNumber);
  app->add_option("--q0", s.params.q0, "greedy branching probability")->check(CLI::Range(0.0, 1.0));
  app->add_option("--alpha", s.params.alpha, "pheromone exponent")->check(CLI::NonNegativeNumber);
  app->add_option("--beta", s.params.beta, "heuristic exponent")->check(CLI::NonNegativeNumber);
  app->add_option("--k", s.params.population_size, "pheromone population size")->check(CLI::PositiveNumber);
  app->add_option("--gamma", s.gamma, "rank heuristic exponent")->check(CLI::PositiveNumber);
  app->add_option("--dt-ref", s.reference_transfer_time, "phasing indicator transfer time, days")
      ->check(CLI::PositiveNumber);
  app->add_option("--budget", s.params.leg_budget, "optimized-leg budget")->check(CLI::PositiveNumber);
  app->add_option("--seed", s.params.seed, "random seed");
  app->add_option("--root", r.text, "start body and epoch as ID:MJD (external id); default GTOC5 root or first body");
}

AsteroidDataset open_dataset(const DatasetOptions& d) {
  if (!d.path.empty()) return load_dataset(d.path);
  return generate_synthetic_belt(d.synth_count, d.synth_seed);
}

MissionState make_start(const AsteroidDataset& ds, const RootOptions& r, const MissionConfig& mission) {
  if (r.text.empty()) {
    if (ds.find_external(kGtoc5RootExternalId) >= 0 && ds.size() > 1000) return gtoc5_root(ds, mission);
    return make_root(0, ds.bodies[0].epoch_ref, mission);
  }
  const auto colon = r.text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("--root expects ID:MJD, got '" + r.text + "'");
  const long id = std::stol(r.text.substr(0, colon));
  const double epoch = std::stod(r.text.substr(colon + 1));
  const int body = ds.find_external(id);
  if (body < 0) throw std::invalid_argument("--root: no body with id " + std::to_string(id));
  return make_root(body, epoch, mission);
}

Problem make_problem(const AsteroidDataset& ds, const SearchOptions& s) {
  Problem p;
  p.dataset = &ds;
  p.phasing.gamma = s.gamma;
  p.phasing.reference_transfer_time = s.reference_transfer_time;
  return p;
}

std::string sequence_ids(const AsteroidDataset& ds, const std::vector<int>& seq) {
  std::string out;
  for (int b : seq) out += (out.empty() ? "" : " ") + std::to_string(ds.external_ids[b]);
  return out;
}

double final_hypervolume(const SearchResult& r) {
  if (r.archive.empty()) return 0.0;
  return hypervolume_2d(r.archive.points(), kGtoc5Reference);
}

int cmd_run(const DatasetOptions& d, const SearchOptions& s, const RootOptions& r, const std::string& log_path) {
  const auto ds = open_dataset(d);
  const Problem problem = make_problem(ds, s);
  const auto root = make_start(ds, r, problem.mission);
  const auto result = run_search(problem, root, s.params, search_mode_from_string(s.mode));
  if (!log_path.empty()) save_run_log(log_path, result.log);

  std::printf("# mode=%s bw=%d bf=%d seed=%llu legs=%llu generations=%d best_score=%d hypervolume=%.6f\n",
              s.mode.c_str(), s.params.beam_width, s.params.branching_factor,
              static_cast<unsigned long long>(s.params.seed), static_cast<unsigned long long>(result.legs),
              result.generations, result.archive.best_score, final_hypervolume(result));
  std::printf("score,mass_used_kg,time_used_yr,sequence\n");
  for (const auto& m : result.archive.front) {
    const auto o = evaluate_h_s(m);
    std::printf("%d,%.6f,%.6f,%s\n", o.score, o.mass_used, o.time_used, sequence_ids(ds, m.visited).c_str());
  }
  return 0;
}

int cmd_sweep(const DatasetOptions& d, SearchOptions s, const RootOptions& r, const std::vector<int>& bws,
              const std::vector<int>& bfs, int seeds) {
  const auto ds = open_dataset(d);
  const Problem problem = make_problem(ds, s);
  const auto root = make_start(ds, r, problem.mission);
  const auto mode = search_mode_from_string(s.mode);
  const std::uint64_t first_seed = s.params.seed;
  std::printf("mode,bw,bf,seed,legs,best_score,hypervolume\n");
  for (int bw : bws) {
    for (int bf : bfs) {
      for (int k = 0; k < seeds; ++k) {
        s.params.beam_width = bw;
        s.params.branching_factor = bf;
        s.params.seed = first_seed + static_cast<std::uint64_t>(k);
        const auto res = run_search(problem, root, s.params, mode);
        std::printf("%s,%d,%d,%llu,%llu,%d,%.6f\n", s.mode.c_str(), bw, bf,
                    static_cast<unsigned long long>(s.params.seed), static_cast<unsigned long long>(res.legs),
                    res.archive.best_score, final_hypervolume(res));
        std::fflush(stdout);
      }
    }
  }
  return 0;
}

int cmd_batch(const DatasetOptions& d, SearchOptions s, const RootOptions& r, int seeds, const std::string& out_dir) {
  const auto ds = open_dataset(d);
  const Problem problem = make_problem(ds, s);
  const auto root = make_start(ds, r, problem.mission);
  const auto mode = search_mode_from_string(s.mode);
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  const std::uint64_t first_seed = s.params.seed;
  std::printf("seed,legs,generations,best_score,hypervolume,log\n");
  for (int k = 0; k < seeds; ++k) {
    s.params.seed = first_seed + static_cast<std::uint64_t>(k);
    const auto res = run_search(problem, root, s.params, mode);
    std::string path;
    if (!out_dir.empty()) {
      path = (std::filesystem::path(out_dir) / (s.mode + "_seed" + std::to_string(s.params.seed) + ".jsonl")).string();
      save_run_log(path, res.log);
    }
    std::printf("%llu,%llu,%d,%d,%.6f,%s\n", static_cast<unsigned long long>(s.params.seed),
                static_cast<unsigned long long>(res.legs), res.generations, res.archive.best_score,
                final_hypervolume(res), path.c_str());
    std::fflush(stdout);
  }
  return 0;
}

int cmd_synth(std::size_t count, std::uint64_t seed, const BeltRanges& ranges, const std::string& out) {
  const auto belt = generate_synthetic_belt(count, seed, ranges);
  if (out.empty() || out == "-") {
    write_dataset(std::cout, belt);
    return 0;
  }
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot write " + out);
  write_dataset(file, belt);
  return 0;
}

int cmd_report(const std::vector<std::string>& logs, const std::string& metric, std::optional<int> score,
               std::size_t grid_steps) {
  std::vector<RunLog> loaded;
  for (const auto& path : logs) loaded.push_back(load_run_log(path));
  int target = -1;
  if (score) {
    target = *score;
  } else {
    for (const auto& l : loaded) target = std::max(target, best_logged_score(l));
  }

  if (metric == "attainment") {
    std::vector<std::vector<ObjectivePoint>> fronts;
    for (const auto& l : loaded) fronts.push_back(final_front(l, target));
    const auto grid = objective_grid(0.0, kGtoc5Reference.mass, grid_steps, 0.0, kGtoc5Reference.time, grid_steps);
    const auto p = attainment_function(fronts, grid);
    std::printf("# score=%d runs=%zu\nmass_used_kg,time_used_yr,probability\n", target, fronts.size());
    for (std::size_t g = 0; g < grid.size(); ++g) std::printf("%.6f,%.6f,%.6f\n", grid[g].mass, grid[g].time, p[g]);
    return 0;
  }

  std::printf("# score=%d\nlog,leg_count,%s\n", target, metric.c_str());
  for (std::size_t f = 0; f < loaded.size(); ++f) {
    if (metric == "hypervolume") {
      for (const auto& pt : hypervolume_series(loaded[f], target)) {
        std::printf("%s,%llu,%.6f\n", logs[f].c_str(), static_cast<unsigned long long>(pt.leg_count), pt.value);
      }
    } else {
      for (const auto& pt : count_distinct_solutions(loaded[f], target)) {
        std::printf("%s,%llu,%zu\n", logs[f].c_str(), static_cast<unsigned long long>(pt.leg_count), pt.value);
      }
    }
  }
  return 0;
}

int cmd_correlate(const DatasetOptions& d, const std::vector<double>& epochs, std::size_t samples,
                  std::uint64_t seed) {
  const auto ds = open_dataset(d);
  std::printf("epoch,source,samples,improved,forward\n");
  std::vector<double> improved, forward, gain;
  for (std::size_t e = 0; e < epochs.size(); ++e) {
    const auto rep = indicator_correlation_report(ds, epochs[e], std::min(samples, ds.size() - 1), seed + e);
    std::printf("%.3f,%ld,%zu,%.6f,%.6f\n", epochs[e], ds.external_ids[rep.source], rep.samples, rep.improved,
                rep.forward);
    improved.push_back(rep.improved);
    forward.push_back(rep.forward);
    gain.push_back(rep.improved - rep.forward);
  }
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  };
  std::printf("# median improved=%.6f forward=%.6f paired_gain=%.6f\n", median(improved), median(forward),
              median(gain));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beam search and population-based ACO for multi-asteroid rendezvous sequences"};
  app.require_subcommand(1);

  DatasetOptions data;
  SearchOptions search;
  RootOptions root;

  auto* run = app.add_subcommand("run", "one search, archive front to stdout");
  add_dataset_options(run, data);
  add_search_options(run, search, root);
  std::string log_path;
  run->add_option("--log", log_path, "write the event log (JSON lines)");

  auto* sweep = app.add_subcommand("sweep", "grid over beam width and branching factor");
  add_dataset_options(sweep, data);
  add_search_options(sweep, search, root);
  std::vector<int> bws{1, 5, 10, 20}, bfs{1, 10, 50, 125};
  int seeds = 1;
  sweep->add_option("--bw-list", bws, "beam widths")->delimiter(',')->check(CLI::PositiveNumber);
  sweep->add_option("--bf-list", bfs, "branching factors")->delimiter(',')->check(CLI::PositiveNumber);
  sweep->add_option("--seeds", seeds, "runs per setup, seeds from --seed upwards")->check(CLI::PositiveNumber);

  auto* batch = app.add_subcommand("batch", "one setup over consecutive seeds");
  add_dataset_options(batch, data);
  add_search_options(batch, search, root);
  std::string out_dir;
  batch->add_option("--seeds", seeds, "number of runs")->check(CLI::PositiveNumber);
  batch->add_option("--out-dir", out_dir, "directory for per-seed logs");

  auto* synth = app.add_subcommand("synth", "write a synthetic belt in dataset format");
  std::size_t synth_count = 200;
  std::uint64_t synth_seed = 1;
  BeltRanges ranges;
  std::string synth_out;
  synth->add_option("--count", synth_count, "number of bodies")->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  synth->add_option("--seed", synth_seed, "random seed");
  synth->add_option("--a-min", ranges.a_min, "AU");
  synth->add_option("--a-max", ranges.a_max, "AU");
  synth->add_option("--e-max", ranges.e_max);
  synth->add_option("--i-max", ranges.i_max, "deg");
  synth->add_option("--epoch", ranges.epoch, "element epoch, MJD");
  synth->add_option("-o,--out", synth_out, "output file, default stdout");

  auto* report = app.add_subcommand("report", "metric series from event logs");
  std::vector<std::string> logs;
  std::string metric = "hypervolume";
  std::optional<int> score;
  std::size_t grid_steps = 36;
  report->add_option("logs", logs, "event log files")->required()->check(CLI::ExistingFile);
  report->add_option("--metric", metric, "hypervolume, distinct or attainment")
      ->check(CLI::IsMember({"hypervolume", "distinct", "attainment"}));
  report->add_option("--score", score, "score level, default the best logged");
  report->add_option("--grid", grid_steps, "attainment grid points per axis")->check(CLI::Range(2, 10000));

  auto* correlate = app.add_subcommand("correlate", "rank correlation of phasing indicators with leg dV");
  add_dataset_options(correlate, data);
  std::vector<double> epochs{59000, 59365, 59730, 60095, 60460, 60825, 61190, 61555, 61920, 62285};
  std::size_t samples = 100;
  std::uint64_t corr_seed = 0;
  correlate->add_option("--epochs", epochs, "departure epochs, MJD")->delimiter(',');
  correlate->add_option("--samples", samples, "targets per epoch")->check(CLI::PositiveNumber);
  correlate->add_option("--seed", corr_seed, "source and target sampling seed");

  CLI11_PARSE(app, argc, argv);

  try {
    search.params.validate();
    if (*run) return cmd_run(data, search, root, log_path);
    if (*sweep) return cmd_sweep(data, search, root, bws, bfs, seeds);
    if (*batch) return cmd_batch(data, search, root, seeds, out_dir);
    if (*synth) return cmd_synth(synth_count, synth_seed, ranges, synth_out);
    if (*report) return cmd_report(logs, metric, score, grid_steps);
    if (*correlate) return cmd_correlate(data, epochs, samples, corr_seed);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "beampaco: %s\n", e.what());
    return 1;
  }
  return 1;
}
