#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace beampaco {

/// Seedable random source with output that is identical on every platform.
///
/// The engine is std::mt19937_64, seeded through std::seed_seq; both are
/// fully specified by the C++ standard. The standard distributions are not,
/// so the conversions to doubles and bounded integers are done here:
///   uniform()  = (next() >> 11) * 2^-53, in [0, 1)
///   below(n)   = rejection sampling on the top bits, unbiased
/// Independent streams for one seed are obtained with a stream id, which is
/// mixed into the seed sequence (stream 0 is the plain seed).
class Rng {
public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  double uniform();
  std::uint64_t below(std::uint64_t bound);
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// A new generator on stream `stream` of this generator's seed. Does not
  /// consume from this generator.
  [[nodiscard]] Rng split(std::uint64_t stream) const { return Rng(seed_, stream); }

  std::uint64_t seed() const { return seed_; }

  /// Fisher-Yates shuffle drawing from this generator.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace beampaco
