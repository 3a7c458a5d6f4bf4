#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kaczrank/core.hpp"
#include "kaczrank/sampling.hpp"

namespace kaczrank {

enum class Variant { kKacz, kCautious };

struct SolverConfig {
  double epsilon = kDefaultEpsilon;
  std::int64_t max_iterations = 10000;
  std::optional<int> alpha;  // CautiousRank cap on ranking change; nullopt = unlimited
  double omega = 1.0;        // relaxation; 1 lands on the boundary, (1,2) over-projects
  std::int64_t record_every = 10;
  bool early_stop = true;  // stop at ranking hit when truth is known and data is noiseless

  enum class Start { kZero, kUniform };
  Start start = Start::kZero;
};

void check_solver_config(const SolverConfig& config);

struct SolverState {
  ScoreVector iterate;
  std::int64_t iteration = 0;
  std::optional<std::int64_t> hit_iteration;  // first t with ranking(x^t) == truth
};

/// What to record per trace sample, beyond Hamming distance.
struct TraceConfig {
  std::vector<int> k_list{5, 10};
  bool kendall = false;
  bool cayley = false;
  const ComparisonSystem* feasible_system = nullptr;  // record d(x, S) when set
  double feasible_tol = 1e-7;
};

struct TraceSample {
  std::int64_t iteration = 0;
  int hamming = 0;
  std::vector<int> k_distances;  // parallel to Trace::k_list
  std::optional<std::int64_t> kendall;
  std::optional<int> cayley;
  std::optional<double> feasible_distance;
};

struct Trace {
  std::vector<int> k_list;
  std::vector<TraceSample> samples;
};

struct RunResult {
  SolverState state;
  Trace trace;
};

/// One projection of the inequality Kaczmarz update: if the comparison is
/// violated (residual r > 0), move x by -omega*(r/2) along its row; a
/// satisfied comparison leaves x untouched. Only the two involved entries
/// change.
ScoreVector kacz_step(const ScoreVector& x, const Comparison& c, double epsilon,
                      double omega);

/// The noise-robust step: compute the unit-relaxation projection candidate y
/// and accept it only when the residual is positive and the ranking moves by
/// a Hamming distance below alpha (nullopt = unlimited, which reproduces
/// kacz_step at omega 1).
ScoreVector cautious_step(const ScoreVector& x, const Comparison& c, double epsilon,
                          std::optional<int> alpha);

/// In-place forms used by the run loop; return whether x changed.
bool kacz_step_inplace(ScoreVector& x, const Comparison& c, double epsilon,
                       double omega);
bool cautious_step_inplace(ScoreVector& x, Ranking& current_ranking,
                           const Comparison& c, double epsilon,
                           std::optional<int> alpha);

/// Full solver run over a comparison pool.
///
/// Draws through the sampler (noise applied at draw time), steps the chosen
/// variant, and stops at max_iterations, pool exhaustion, or -- when truth
/// is supplied, the data is noiseless, and config.early_stop holds -- the
/// first iteration whose extracted ranking equals truth. Traces are
/// recorded at the configured stride plus the initial, hit, and final
/// iterations, and require truth.
RunResult run(const std::vector<Comparison>& pool, int item_count,
              const SamplerSpec& sampler, RandomStream& stream,
              const SolverConfig& config, Variant variant,
              const Ranking* truth = nullptr, const TraceConfig* trace = nullptr);

/// Same loop over an explicit pre-arranged sequence of comparisons (noise,
/// if any, must already be baked in). Used for provider orders and for
/// feeding identical data to solver and baseline.
RunResult run_sequence(std::span<const Comparison> sequence, int item_count,
                       const SolverConfig& config, Variant variant,
                       const Ranking* truth = nullptr,
                       const TraceConfig* trace = nullptr);

struct HitSummary {
  std::vector<std::int64_t> per_trial;  // censored trials report max_iterations
  std::vector<bool> censored;
  double median = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
};

/// Repeats run() across trials with derived seeds (base_seed + trial index)
/// and summarizes the per-trial ranking hitting times. Trials that never hit
/// are kept, censored at max_iterations.
HitSummary hitting_time(const std::vector<Comparison>& pool, int item_count,
                        const SamplerSpec& sampler, const SolverConfig& config,
                        Variant variant, const Ranking& truth,
                        std::uint64_t base_seed, int trials);

}  // namespace kaczrank
