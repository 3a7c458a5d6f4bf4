#include "kaczrank/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kaczrank {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t RandomStream::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RandomStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
  // Rejection sampling to remove modulo bias.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

bool RandomStream::bernoulli(double p) { return uniform() < p; }

void check_sampler_spec(const SamplerSpec& spec) {
  if (!(spec.subset_fraction > 0.0) || spec.subset_fraction > 1.0) {
    throw std::invalid_argument("subset fraction q must lie in (0, 1]");
  }
  if (spec.flip_probability < 0.0 || spec.flip_probability >= 0.5) {
    throw std::invalid_argument("flip probability p must lie in [0, 1/2)");
  }
}

std::vector<Comparison> full_comparison_set(int n, const Ranking& truth) {
  if (n < 2) throw std::invalid_argument("need at least two items");
  if (truth.size() != n || !truth.is_valid()) {
    throw std::invalid_argument("truth must be a permutation of the n items");
  }
  std::vector<Comparison> out;
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (int better = 0; better < n; ++better) {
    for (int worse = better + 1; worse < n; ++worse) {
      out.push_back({truth.order[static_cast<std::size_t>(worse)],
                     truth.order[static_cast<std::size_t>(better)]});
    }
  }
  return out;
}

std::vector<Comparison> subset_sample(const std::vector<Comparison>& full, double q,
                                      RandomStream& stream) {
  if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("q must lie in (0, 1]");
  const auto take =
      static_cast<std::size_t>(std::floor(q * static_cast<double>(full.size())));
  if (take == 0) {
    throw std::invalid_argument("subset would be empty: no rankable data");
  }
  std::vector<Comparison> pool = full;
  // Partial Fisher-Yates; the first `take` slots form a uniform sample.
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(
                                  stream.uniform_below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(take);
  return pool;
}

std::vector<Comparison> backbone(const Ranking& truth) {
  if (truth.size() < 2 || !truth.is_valid()) {
    throw std::invalid_argument("truth must rank at least two items");
  }
  std::vector<Comparison> out;
  out.reserve(static_cast<std::size_t>(truth.size() - 1));
  for (int place = 0; place + 1 < truth.size(); ++place) {
    out.push_back({truth.order[static_cast<std::size_t>(place + 1)],
                   truth.order[static_cast<std::size_t>(place)]});
  }
  return out;
}

std::vector<Comparison> ordered_stream(SampleMode mode, const Ranking& truth,
                                       RandomStream& stream) {
  if (mode != SampleMode::kFriendly && mode != SampleMode::kAdversarial) {
    throw std::invalid_argument("ordered_stream handles friendly/adversarial only");
  }
  const std::vector<Comparison> spine = backbone(truth);
  std::vector<Comparison> rest;
  for (const Comparison& c : full_comparison_set(truth.size(), truth)) {
    if (std::find(spine.begin(), spine.end(), c) == spine.end()) rest.push_back(c);
  }

  std::vector<Comparison> out;
  if (mode == SampleMode::kFriendly) {
    out = spine;
    stream.shuffle(rest);
    out.insert(out.end(), rest.begin(), rest.end());
  } else {
    // Withhold one backbone comparison to the very end; everything else
    // arrives first in random order.
    const std::size_t held =
        static_cast<std::size_t>(stream.uniform_below(spine.size()));
    for (std::size_t i = 0; i < spine.size(); ++i) {
      if (i != held) rest.push_back(spine[i]);
    }
    stream.shuffle(rest);
    out = std::move(rest);
    out.push_back(spine[held]);
  }
  return out;
}

Comparison apply_noise(const Comparison& c, double p, RandomStream& stream) {
  if (p < 0.0 || p >= 0.5) {
    throw std::invalid_argument("flip probability p must lie in [0, 1/2)");
  }
  return stream.bernoulli(p) ? c.flipped() : c;
}

ComparisonSampler::ComparisonSampler(std::vector<Comparison> pool,
                                     const SamplerSpec& spec, const Ranking* truth,
                                     RandomStream& stream)
    : pool_(std::move(pool)) {
  check_sampler_spec(spec);
  switch (spec.mode) {
    case SampleMode::kWithReplacement:
      if (pool_.empty()) throw std::invalid_argument("empty comparison pool");
      with_replacement_ = true;
      break;
    case SampleMode::kWithoutReplacement:
      if (pool_.empty()) throw std::invalid_argument("empty comparison pool");
      with_replacement_ = false;
      stream.shuffle(pool_);
      break;
    case SampleMode::kFriendly:
    case SampleMode::kAdversarial:
      if (truth == nullptr) {
        throw std::invalid_argument(
            "friendly/adversarial sampling needs the true ranking");
      }
      with_replacement_ = false;
      pool_ = ordered_stream(spec.mode, *truth, stream);
      break;
  }
}

std::optional<Comparison> ComparisonSampler::next(RandomStream& stream) {
  if (with_replacement_) {
    return pool_[static_cast<std::size_t>(stream.uniform_below(pool_.size()))];
  }
  if (cursor_ >= pool_.size()) return std::nullopt;
  return pool_[cursor_++];
}

}  // namespace kaczrank
