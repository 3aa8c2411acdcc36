#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tashkeel/text.hpp"

namespace tashkeel {

// Character-inclusion policy for scoring. The five flags select which
// gold cells enter the DER/WER denominators.
struct EvalConfig {
  bool include_numbers = true;
  bool include_punct = true;
  bool include_space = true;
  bool include_last = true;
  bool include_unlabeled = true;

  static EvalConfig all_include();
  static EvalConfig fadel_compat();    // numbers/punct out, space/last/unlabeled in
  static EvalConfig abandah_compat();  // punct out, rest in
  static EvalConfig madhfar_compat();  // everything in
  static std::optional<EvalConfig> preset(std::string_view name);

  static EvalConfig from_json_text(std::string_view text);  // throws ConfigError
  static EvalConfig from_json_file(const std::string& path);

  friend bool operator==(const EvalConfig&, const EvalConfig&) = default;
};

bool cell_included(const Cell& cell, bool is_last_of_word, const EvalConfig& cfg);

// Raw scoring tallies. A commutative monoid: per-line counts merge into
// file-level micro-averages.
struct MetricsCounts {
  std::uint64_t evaluated_cells = 0;
  std::uint64_t wrong_cells = 0;
  std::uint64_t evaluated_words = 0;
  std::uint64_t wrong_words = 0;
  std::uint64_t predicted_only_cells = 0;
  std::uint64_t unscorable_examples = 0;

  // confusion[i][j]: included gold cells of class i predicted as class j.
  std::array<std::array<std::uint64_t, Label::kClassCount>, Label::kClassCount> confusion{};
  // Gold cells aligned to a gap (or belonging to unscorable lines).
  std::array<std::uint64_t, Label::kClassCount> confusion_gap{};
  std::array<std::uint64_t, Label::kClassCount> gold_count{};
  std::array<std::uint64_t, Label::kClassCount> error_count{};

  void add_pair(const DiacritizedText& gold, const DiacritizedText& predicted,
                const EvalConfig& cfg);
  // Counts every included gold cell as wrong (unscorable hypothesis line).
  void add_unscorable(const DiacritizedText& gold, const EvalConfig& cfg);
  void merge(const MetricsCounts& other);

  double der() const;
  double wer() const;
};

// Finished report: percentages plus the row-stochastic confusion matrix.
struct MetricsReport {
  MetricsCounts counts;
  double der = 0.0;
  double wer = 0.0;
  // Row i sums to 1 over the 16 label columns when class i has any
  // non-gap gold cells; gap fractions are reported separately.
  std::array<std::array<double, Label::kClassCount>, Label::kClassCount> confusion{};
  std::array<double, Label::kClassCount> confusion_mismatch{};

  static MetricsReport from_counts(const MetricsCounts& counts);
  std::string to_json() const;
  std::string confusion_tsv() const;
};

MetricsReport compute_metrics(const DiacritizedText& gold, const DiacritizedText& predicted,
                              const EvalConfig& cfg);

// Line-aligned file scoring, micro-averaged. With sentinel_hyp the
// hypothesis lines hold the sentinel output format and are reconstructed
// against the stripped reference; reconstruction failures score as
// all-wrong and count as unscorable.
MetricsReport evaluate_files(const std::string& ref_path, const std::string& hyp_path,
                             const EvalConfig& cfg, bool sentinel_hyp = false);

struct LabelFrequencyError {
  int class_id = 0;
  std::uint64_t count = 0;
  double error_rate = 0.0;
};

struct PowerLawFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points_used = 0;
};

struct FitOutcome {
  std::optional<PowerLawFit> fit;     // nullopt: fewer than 3 usable points
  std::vector<int> excluded_class_ids;  // zero-count or zero-error labels
};

// Least squares of log(error rate) on log(frequency).
FitOutcome frequency_error_fit(const std::vector<LabelFrequencyError>& points);

std::vector<LabelFrequencyError> label_frequency_errors(const MetricsCounts& counts);

}  // namespace tashkeel
