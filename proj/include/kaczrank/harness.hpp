#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kaczrank/core.hpp"
#include "kaczrank/sampling.hpp"
#include "kaczrank/solvers.hpp"

namespace kaczrank::harness {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Shortest decimal string that parses back to exactly v.
std::string format_double(double v);

/// Comparison file: first line `n=<count>`, then one `low,high` pair per
/// line meaning x_low < x_high; `#` comments and blank lines are skipped.
struct ParsedComparisons {
  int item_count = 0;
  std::vector<Comparison> comparisons;
};

ParsedComparisons parse_comparisons(std::istream& in);
ParsedComparisons parse_comparisons_file(const std::filesystem::path& path);

/// Long-format experiment output: a `#`-prefixed metadata header, a column
/// row, then comma-separated data rows. Cells are kept as strings so a
/// written table reads back identically.
struct ResultTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::string> meta(const std::string& key) const;
  void write(std::ostream& out) const;
  static ResultTable read(std::istream& in);
  void write_file(const std::filesystem::path& path) const;
  static ResultTable read_file(const std::filesystem::path& path);

  friend bool operator==(const ResultTable&, const ResultTable&) = default;
};

enum class ExperimentKind {
  kTrace,
  kPartialSweep,
  kScaling,
  kAlphaSweep,
  kNoiseSweep,
  kPartialNoisySweep,
  kBaselineCompare,
};

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& text);
std::string to_string(Variant variant);
Variant variant_from_string(const std::string& text);
std::string to_string(SampleMode mode);
SampleMode sample_mode_from_string(const std::string& text);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::kTrace;
  std::vector<int> n_list{50};
  int trials = 20;
  std::int64_t max_iterations = 10000;
  double epsilon = kDefaultEpsilon;
  std::vector<int> k_list{5, 10};
  Variant variant = Variant::kKacz;
  std::vector<std::optional<int>> alpha_list{std::nullopt};
  std::vector<double> q_list{1.0};
  std::vector<double> p_list{0.0};
  std::uint64_t base_seed = 1;
  std::int64_t record_every = 10;
  double omega = 1.0;
  SampleMode mode = SampleMode::kWithReplacement;
};

void check_experiment_spec(const ExperimentSpec& spec);

/// Single-line `key=value;...` echo embedded in result tables; the inverse
/// reproduces the spec exactly, which is what makes tables re-runnable.
std::string to_key_values(const ExperimentSpec& spec);
ExperimentSpec spec_from_key_values(const std::string& text);

/// `key=value` lines, one per line, mirroring the CLI flags.
ExperimentSpec load_spec_file(const std::filesystem::path& path);

/// Runs the experiment grid (parameters x trials, trial seed = base seed +
/// trial index) and returns per-trial rows plus median/q25/q75 aggregates.
ResultTable run_experiment(const ExperimentSpec& spec);

std::string experiment_file_name(const ExperimentSpec& spec);

/// Runs and persists; returns the written path.
std::filesystem::path write_experiment(const ExperimentSpec& spec,
                                       const std::filesystem::path& out_dir);

}  // namespace kaczrank::harness
