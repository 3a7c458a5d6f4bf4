#include "kaczrank/solvers.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "kaczrank/metrics.hpp"
#include "kaczrank/parallel.hpp"
#include "kaczrank/stats.hpp"

namespace kaczrank {

void check_solver_config(const SolverConfig& config) {
  if (!(config.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (config.max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be at least 1");
  }
  if (!(config.omega > 0.0) || !(config.omega < 2.0)) {
    throw std::invalid_argument("omega must lie in (0, 2)");
  }
  if (config.alpha && *config.alpha < 1) {
    throw std::invalid_argument("alpha must be at least 1 when finite");
  }
  if (config.record_every < 1) {
    throw std::invalid_argument("record_every must be at least 1");
  }
}

bool kacz_step_inplace(ScoreVector& x, const Comparison& c, double epsilon,
                       double omega) {
  const auto low = static_cast<std::size_t>(c.low);
  const auto high = static_cast<std::size_t>(c.high);
  const double r = x[low] - x[high] + epsilon;
  if (r <= 0.0) return false;
  const double shift = omega * (r / 2.0);  // squared row norm is exactly 2
  x[low] -= shift;
  x[high] += shift;
  return true;
}

ScoreVector kacz_step(const ScoreVector& x, const Comparison& c, double epsilon,
                      double omega) {
  check_comparison(c, static_cast<int>(x.size()));
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (!(omega > 0.0) || !(omega < 2.0)) {
    throw std::invalid_argument("omega must lie in (0, 2)");
  }
  ScoreVector out = x;
  kacz_step_inplace(out, c, epsilon, omega);
  return out;
}

bool cautious_step_inplace(ScoreVector& x, Ranking& current_ranking,
                           const Comparison& c, double epsilon,
                           std::optional<int> alpha) {
  const auto low = static_cast<std::size_t>(c.low);
  const auto high = static_cast<std::size_t>(c.high);
  const double r = x[low] - x[high] + epsilon;
  if (r <= 0.0) return false;
  const double shift = r / 2.0;
  if (!alpha) {
    x[low] -= shift;
    x[high] += shift;
    return true;
  }
  x[low] -= shift;
  x[high] += shift;
  Ranking candidate = ranking_from_scores(x);
  if (hamming(current_ranking, candidate) < *alpha) {
    current_ranking = std::move(candidate);
    return true;
  }
  x[low] += shift;  // rejected: restore the iterate bit-for-bit
  x[high] -= shift;
  return false;
}

ScoreVector cautious_step(const ScoreVector& x, const Comparison& c, double epsilon,
                          std::optional<int> alpha) {
  check_comparison(c, static_cast<int>(x.size()));
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (alpha && *alpha < 1) {
    throw std::invalid_argument("alpha must be at least 1 when finite");
  }
  ScoreVector out = x;
  Ranking current = ranking_from_scores(out);
  cautious_step_inplace(out, current, c, epsilon, alpha);
  return out;
}

namespace {

enum class StopMode { kNone, kNoiselessRankingHit, kFirstRankingHit };

// ranking_from_scores(x) == truth without sorting: the truth order must be
// a descending chain under the (score, tie by index) comparator.
bool ranking_matches(const ScoreVector& x, const Ranking& truth) {
  for (int place = 0; place + 1 < truth.size(); ++place) {
    const int better = truth.order[static_cast<std::size_t>(place)];
    const int worse = truth.order[static_cast<std::size_t>(place + 1)];
    const double xb = x[static_cast<std::size_t>(better)];
    const double xw = x[static_cast<std::size_t>(worse)];
    if (xb < xw || (xb == xw && better > worse)) return false;
  }
  return true;
}

TraceSample make_sample(std::int64_t iteration, const ScoreVector& x,
                        const Ranking& truth, const TraceConfig& cfg) {
  TraceSample s;
  s.iteration = iteration;
  const Ranking current = ranking_from_scores(x);
  s.hamming = hamming(current, truth);
  s.k_distances.reserve(cfg.k_list.size());
  for (int k : cfg.k_list) s.k_distances.push_back(k_distance(current, truth, k));
  if (cfg.kendall) s.kendall = kendall_tau(current, truth);
  if (cfg.cayley) s.cayley = cayley(current, truth);
  if (cfg.feasible_system != nullptr) {
    s.feasible_distance =
        distance_to_feasible(x, *cfg.feasible_system, cfg.feasible_tol);
  }
  return s;
}

template <typename NextFn>
RunResult run_loop(ScoreVector x0, int item_count, NextFn&& next_comparison,
                   const SolverConfig& config, Variant variant, const Ranking* truth,
                   const TraceConfig* trace_cfg, StopMode stop_mode) {
  if (trace_cfg != nullptr && truth == nullptr) {
    throw std::invalid_argument("tracing requires the true ranking");
  }
  if (truth != nullptr && (truth->size() != item_count || !truth->is_valid())) {
    throw std::invalid_argument("truth must be a permutation of the n items");
  }

  RunResult result;
  SolverState& state = result.state;
  state.iterate = std::move(x0);

  Ranking cached;  // maintained only for the cautious variant
  if (variant == Variant::kCautious) cached = ranking_from_scores(state.iterate);

  if (truth != nullptr && ranking_matches(state.iterate, *truth)) {
    state.hit_iteration = 0;
  }
  if (trace_cfg != nullptr) {
    result.trace.k_list = trace_cfg->k_list;
    result.trace.samples.push_back(make_sample(0, state.iterate, *truth, *trace_cfg));
  }
  const bool stop_now =
      stop_mode != StopMode::kNone && state.hit_iteration.has_value();
  if (stop_now) return result;

  for (std::int64_t t = 1; t <= config.max_iterations; ++t) {
    const std::optional<Comparison> drawn = next_comparison();
    if (!drawn) break;  // pool exhausted

    if (variant == Variant::kKacz) {
      kacz_step_inplace(state.iterate, *drawn, config.epsilon, config.omega);
    } else {
      cautious_step_inplace(state.iterate, cached, *drawn, config.epsilon,
                            config.alpha);
    }
    state.iteration = t;

    bool hit_now = false;
    if (truth != nullptr && !state.hit_iteration &&
        ranking_matches(state.iterate, *truth)) {
      state.hit_iteration = t;
      hit_now = true;
    }
    if (trace_cfg != nullptr && (t % config.record_every == 0 || hit_now)) {
      result.trace.samples.push_back(
          make_sample(t, state.iterate, *truth, *trace_cfg));
    }
    if (hit_now && stop_mode != StopMode::kNone) break;
  }

  if (trace_cfg != nullptr && result.trace.samples.back().iteration != state.iteration) {
    result.trace.samples.push_back(
        make_sample(state.iteration, state.iterate, *truth, *trace_cfg));
  }
  return result;
}

ScoreVector start_iterate(int item_count, const SolverConfig& config,
                          RandomStream* stream) {
  ScoreVector x0(static_cast<std::size_t>(item_count), 0.0);
  if (config.start == SolverConfig::Start::kUniform) {
    if (stream == nullptr) {
      throw std::invalid_argument("the uniform start needs a random stream");
    }
    for (double& v : x0) v = stream->uniform();
  }
  return x0;
}

}  // namespace

RunResult run(const std::vector<Comparison>& pool, int item_count,
              const SamplerSpec& sampler, RandomStream& stream,
              const SolverConfig& config, Variant variant, const Ranking* truth,
              const TraceConfig* trace) {
  if (item_count < 2) throw std::invalid_argument("need at least two items");
  check_solver_config(config);
  check_sampler_spec(sampler);
  for (const Comparison& c : pool) check_comparison(c, item_count);

  ComparisonSampler source(pool, sampler, truth, stream);
  const double p = sampler.flip_probability;
  auto next = [&]() -> std::optional<Comparison> {
    const std::optional<Comparison> c = source.next(stream);
    if (!c) return std::nullopt;
    return apply_noise(*c, p, stream);
  };

  StopMode stop = StopMode::kNone;
  if (config.early_stop && truth != nullptr && p == 0.0) {
    stop = StopMode::kNoiselessRankingHit;
  }
  return run_loop(start_iterate(item_count, config, &stream), item_count, next,
                  config, variant, truth, trace, stop);
}

RunResult run_sequence(std::span<const Comparison> sequence, int item_count,
                       const SolverConfig& config, Variant variant,
                       const Ranking* truth, const TraceConfig* trace) {
  if (item_count < 2) throw std::invalid_argument("need at least two items");
  check_solver_config(config);
  for (const Comparison& c : sequence) check_comparison(c, item_count);

  std::size_t cursor = 0;
  auto next = [&]() -> std::optional<Comparison> {
    if (cursor >= sequence.size()) return std::nullopt;
    return sequence[cursor++];
  };
  const StopMode stop = config.early_stop && truth != nullptr
                            ? StopMode::kNoiselessRankingHit
                            : StopMode::kNone;
  return run_loop(start_iterate(item_count, config, nullptr), item_count, next,
                  config, variant, truth, trace, stop);
}

HitSummary hitting_time(const std::vector<Comparison>& pool, int item_count,
                        const SamplerSpec& sampler, const SolverConfig& config,
                        Variant variant, const Ranking& truth,
                        std::uint64_t base_seed, int trials) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  check_solver_config(config);
  check_sampler_spec(sampler);
  for (const Comparison& c : pool) check_comparison(c, item_count);

  HitSummary summary;
  summary.per_trial.assign(static_cast<std::size_t>(trials), 0);
  summary.censored.assign(static_cast<std::size_t>(trials), false);

  parallel_for(trials, [&](int trial) {
    RandomStream stream(base_seed + static_cast<std::uint64_t>(trial));
    ComparisonSampler source(pool, sampler, &truth, stream);
    const double p = sampler.flip_probability;
    auto next = [&]() -> std::optional<Comparison> {
      const std::optional<Comparison> c = source.next(stream);
      if (!c) return std::nullopt;
      return apply_noise(*c, p, stream);
    };
    const RunResult result =
        run_loop(start_iterate(item_count, config, &stream), item_count, next,
                 config, variant, &truth, nullptr, StopMode::kFirstRankingHit);
    const auto slot = static_cast<std::size_t>(trial);
    if (result.state.hit_iteration) {
      summary.per_trial[slot] = *result.state.hit_iteration;
    } else {
      summary.per_trial[slot] = config.max_iterations;
      summary.censored[slot] = true;
    }
  });

  std::vector<double> values(summary.per_trial.begin(), summary.per_trial.end());
  summary.median = quantile(values, 0.5);
  summary.q25 = quantile(values, 0.25);
  summary.q75 = quantile(values, 0.75);
  return summary;
}

}  // namespace kaczrank
