#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "kaczrank/core.hpp"

namespace kaczrank {

/// Deterministic, platform-independent pseudorandom stream.
///
/// The generator is xoshiro256++ with the state seeded through splitmix64,
/// so equal seeds give byte-identical draw sequences on every platform.
/// All randomness in the library flows through this class; none of the
/// <random> distributions are used because their output is
/// implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Unbiased uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  bool bernoulli(double p);

  /// Fisher-Yates shuffle driven by this stream.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::array<std::uint64_t, 4> state_;
};

enum class SampleMode {
  kWithReplacement,
  kWithoutReplacement,
  kFriendly,
  kAdversarial,
};

/// How a run consumes its comparison pool.
struct SamplerSpec {
  SampleMode mode = SampleMode::kWithReplacement;
  double subset_fraction = 1.0;   // q in (0, 1]
  double flip_probability = 0.0;  // p in [0, 1/2)
};

void check_sampler_spec(const SamplerSpec& spec);

/// All n(n-1)/2 comparisons oriented consistently with the true ranking.
std::vector<Comparison> full_comparison_set(int n, const Ranking& truth);

/// floor(q*m) distinct comparisons chosen uniformly without replacement.
/// Throws when the subset would be empty.
std::vector<Comparison> subset_sample(const std::vector<Comparison>& full, double q,
                                      RandomStream& stream);

/// The n-1 adjacent-rank comparisons, top pair first.
std::vector<Comparison> backbone(const Ranking& truth);

/// Full comparison list arranged by a knowledgeable provider.
/// Friendly: backbone first, the rest in random order. Adversarial: one
/// backbone comparison withheld to the final position, the rest shuffled.
std::vector<Comparison> ordered_stream(SampleMode mode, const Ranking& truth,
                                       RandomStream& stream);

/// Returns c unchanged with probability 1-p and swapped with probability p.
/// Consumes exactly one draw per call, so flips are independent across calls
/// and stream consumption does not depend on p.
Comparison apply_noise(const Comparison& c, double p, RandomStream& stream);

/// Draw source for a solver run, realizing the sampling protocols.
///
/// With replacement the pool never exhausts; the other modes emit a fixed
/// arrangement once (a seeded shuffle for without-replacement, the provider
/// order for friendly/adversarial) and then report exhaustion.
class ComparisonSampler {
 public:
  /// truth may be null except for the friendly/adversarial modes.
  ComparisonSampler(std::vector<Comparison> pool, const SamplerSpec& spec,
                    const Ranking* truth, RandomStream& stream);

  std::optional<Comparison> next(RandomStream& stream);

 private:
  std::vector<Comparison> pool_;
  bool with_replacement_ = true;
  std::size_t cursor_ = 0;
};

}  // namespace kaczrank
