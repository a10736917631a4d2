#include "beampaco/pareto.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace beampaco {

ObjectivePoint objective_point(const MissionState& state) {
  const Objectives o = evaluate_h_s(state);
  return {o.mass_used, o.time_used};
}

std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const ObjectivePoint> points) {
  const std::size_t n = points.size();
  std::vector<std::vector<std::size_t>> dominated_by(n);
  std::vector<std::size_t> domination_count(n, 0);
  std::vector<std::vector<std::size_t>> fronts;

  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates(points[i], points[j])) {
        dominated_by[i].push_back(j);
        ++domination_count[j];
      } else if (dominates(points[j], points[i])) {
        dominated_by[j].push_back(i);
        ++domination_count[i];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (domination_count[i] == 0) current.push_back(i);
  }
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t i : current) {
      for (std::size_t j : dominated_by[i]) {
        if (--domination_count[j] == 0) next.push_back(j);
      }
    }
    std::sort(next.begin(), next.end());
    fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return fronts;
}

std::vector<std::size_t> rank_and_select(std::span<const Objectives> evaluations, std::size_t count) {
  std::map<int, std::vector<std::size_t>, std::greater<>> bins;
  for (std::size_t i = 0; i < evaluations.size(); ++i) bins[evaluations[i].score].push_back(i);

  std::vector<std::size_t> selected;
  selected.reserve(std::min(count, evaluations.size()));
  for (const auto& [score, members] : bins) {
    if (selected.size() >= count) break;
    std::vector<ObjectivePoint> points;
    points.reserve(members.size());
    for (std::size_t i : members) points.push_back({evaluations[i].mass_used, evaluations[i].time_used});

    for (const auto& front : non_dominated_sort(points)) {
      if (selected.size() >= count) break;
      std::vector<std::size_t> ordered;
      ordered.reserve(front.size());
      for (std::size_t k : front) ordered.push_back(members[k]);
      std::sort(ordered.begin(), ordered.end(), [&](std::size_t a, std::size_t b) {
        const auto& ea = evaluations[a];
        const auto& eb = evaluations[b];
        if (ea.mass_used != eb.mass_used) return ea.mass_used < eb.mass_used;
        if (ea.time_used != eb.time_used) return ea.time_used < eb.time_used;
        return a < b;
      });
      const std::size_t take = std::min(ordered.size(), count - selected.size());
      selected.insert(selected.end(), ordered.begin(), ordered.begin() + static_cast<std::ptrdiff_t>(take));
    }
  }
  return selected;
}

double hypervolume_2d(std::span<const ObjectivePoint> front, const ObjectivePoint& reference) {
  std::vector<ObjectivePoint> inside;
  inside.reserve(front.size());
  for (const auto& p : front) {
    if (p.mass < reference.mass && p.time < reference.time) inside.push_back(p);
  }
  std::sort(inside.begin(), inside.end(), [](const ObjectivePoint& a, const ObjectivePoint& b) {
    return a.mass < b.mass || (a.mass == b.mass && a.time < b.time);
  });
  double area = 0.0;
  double ceiling = reference.time;
  for (const auto& p : inside) {
    if (p.time < ceiling) {
      area += (reference.mass - p.mass) * (ceiling - p.time);
      ceiling = p.time;
    }
  }
  return area;
}

std::vector<ObjectivePoint> Archive::points() const {
  std::vector<ObjectivePoint> pts;
  pts.reserve(front.size());
  for (const auto& s : front) pts.push_back(objective_point(s));
  return pts;
}

Archive archive_merge(Archive archive, std::span<const MissionState> candidates) {
  int top = -1;
  for (const auto& c : candidates) top = std::max(top, c.score);
  if (top < 0 || top < archive.best_score) return archive;

  std::vector<MissionState> pool;
  if (top == archive.best_score) pool = std::move(archive.front);
  for (const auto& c : candidates) {
    if (c.score != top) continue;
    const bool known = std::any_of(pool.begin(), pool.end(),
                                   [&](const MissionState& m) { return m.visited == c.visited; });
    if (!known) pool.push_back(c);
  }

  std::vector<ObjectivePoint> pts;
  pts.reserve(pool.size());
  for (const auto& s : pool) pts.push_back(objective_point(s));

  Archive merged;
  merged.best_score = top;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const bool dominated = std::any_of(pts.begin(), pts.end(),
                                       [&](const ObjectivePoint& q) { return dominates(q, pts[i]); });
    if (!dominated) merged.front.push_back(std::move(pool[i]));
  }
  return merged;
}

}  // namespace beampaco
