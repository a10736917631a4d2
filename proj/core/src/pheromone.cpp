#include "beampaco/pheromone.hpp"

#include <algorithm>
#include <stdexcept>

#include "beampaco/pareto.hpp"
#include "beampaco/rng.hpp"

namespace beampaco {

PheromoneStore::PheromoneStore(std::size_t nodes, std::size_t capacity) : capacity_(capacity), queues_(nodes) {
  if (nodes < 2) throw std::invalid_argument("pheromone store needs at least two nodes");
  if (capacity < 1) throw std::invalid_argument("pheromone population size must be at least 1");
}

double PheromoneStore::tau_init() const { return 1.0 / static_cast<double>(nodes() - 1); }

double PheromoneStore::tau_delta() const { return (tau_max() - tau_init()) / static_cast<double>(capacity_); }

std::uint64_t PheromoneStore::denominator() const { return capacity_ * (nodes() - 1); }

std::size_t PheromoneStore::deposits(std::size_t i, std::size_t j) const {
  const auto& q = queues_.at(i);
  return static_cast<std::size_t>(std::count(q.begin(), q.end(), static_cast<int>(j)));
}

std::uint64_t PheromoneStore::numerator(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  // tau_init = k / (k (n-1)),  tau_delta = (n-2) / (k (n-1)).
  return capacity_ + deposits(i, j) * (nodes() - 2);
}

double PheromoneStore::tau(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  return tau_init() + static_cast<double>(deposits(i, j)) * tau_delta();
}

void PheromoneStore::deposit(std::size_t i, int j) {
  auto& q = queues_.at(i);
  q.push_back(j);
  if (q.size() > capacity_) q.pop_front();
}

void PheromoneStore::deposit_sequence(std::span<const int> sequence) {
  for (std::size_t e = 1; e < sequence.size(); ++e) {
    deposit(static_cast<std::size_t>(sequence[e - 1]), sequence[e]);
  }
}

void PheromoneStore::clear() {
  for (auto& q : queues_) q.clear();
}

void pheromone_reset(const Archive& archive, PheromoneStore& store, Rng& rng) {
  store.clear();
  std::vector<std::size_t> order(archive.front.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  for (std::size_t idx : order) store.deposit_sequence(archive.front[idx].visited);
}

}  // namespace beampaco
