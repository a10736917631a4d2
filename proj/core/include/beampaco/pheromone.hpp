#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <vector>

namespace beampaco {

class Rng;
struct Archive;

/// Population-based pheromone matrix: one FIFO queue of successor ids per
/// node, each holding at most k entries. The concentration on edge (i, j) is
///
///   tau(i, j) = tau_init + l * tau_delta,  l = occurrences of j in queue i,
///   tau_init = 1 / (n - 1),  tau_max = 1,  tau_delta = (tau_max - tau_init) / k,
///
/// and tau(i, i) = 0. Every value is an integer multiple of 1 / (k (n - 1)),
/// exposed through numerator() for exact arithmetic.
class PheromoneStore {
public:
  PheromoneStore(std::size_t nodes, std::size_t capacity);

  std::size_t nodes() const { return queues_.size(); }
  std::size_t capacity() const { return capacity_; }

  double tau_init() const;
  double tau_max() const { return 1.0; }
  double tau_delta() const;

  double tau(std::size_t i, std::size_t j) const;
  /// tau(i, j) * denominator(), an exact integer.
  std::uint64_t numerator(std::size_t i, std::size_t j) const;
  std::uint64_t denominator() const;
  /// Occurrences of j in queue i.
  std::size_t deposits(std::size_t i, std::size_t j) const;

  const std::deque<int>& queue(std::size_t i) const { return queues_.at(i); }

  /// Appends j to queue i, evicting the oldest entry when full.
  void deposit(std::size_t i, int j);
  /// Deposits every directed edge of a visit sequence.
  void deposit_sequence(std::span<const int> sequence);
  void clear();

private:
  std::size_t capacity_;
  std::vector<std::deque<int>> queues_;
};

/// Rebuilds the population from the archive: queues emptied, archive
/// members shuffled with `rng`, then each member's edges deposited in order.
void pheromone_reset(const Archive& archive, PheromoneStore& store, Rng& rng);

}  // namespace beampaco
