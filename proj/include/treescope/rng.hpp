#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

namespace treescope {

/// xoshiro256** (Blackman & Vigna) seeded through SplitMix64.
///
/// All sampling helpers use integer arithmetic or exactly-rounded IEEE
/// operations only, so a given seed yields the same stream on every platform.
/// std:: distributions are deliberately not used: their algorithms are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0);

  /// Independent stream for a named stage, e.g. Rng::stream(seed, "order").
  static Rng stream(std::uint64_t seed, std::string_view name);

  std::uint64_t next();

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// True with probability p (p clamped to [0, 1]).
  bool bernoulli(double p);

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

/// FNV-1a, used to turn stage names into stream offsets.
std::uint64_t fnv1a(std::string_view text);

}  // namespace treescope
