#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tashkeel/text.hpp"

namespace tashkeel {

struct CorpusExample {
  std::size_t id = 0;
  std::string text;  // normalized
  DiacritizedText parse;
  ParseReport report;
};

// Normalizes and parses one raw line.
CorpusExample make_example(std::size_t id, std::string_view raw_line);

// Streams a line-delimited corpus. Blank (empty or whitespace-only) lines
// are skipped; ids number the surviving examples in file order.
class CorpusReader {
 public:
  explicit CorpusReader(const std::string& path);  // throws IoError
  std::optional<CorpusExample> next();             // throws Utf8Error

 private:
  std::ifstream in_;
  std::string path_;
  std::size_t next_id_ = 0;
  std::size_t line_no_ = 0;
};

std::vector<CorpusExample> load_corpus(const std::string& path);

enum class FilterRule : std::uint8_t {
  MinDiacriticCoverage,
  RequireCleanParse,
  MaxCells,
  DropIfForeignMarked,
  AllowedBaseClasses,
  MinWords,
};

std::string_view filter_rule_name(FilterRule rule);

struct FilterSpec {
  double min_diacritic_coverage = 0.0;  // fraction of Arabic letters labeled
  bool require_clean_parse = false;
  std::size_t max_cells = 0;  // positive
  bool drop_if_foreign_marked = false;
  std::array<bool, 5> allowed_base_classes{};  // indexed by BaseClass
  std::size_t min_words = 0;                   // positive

  void validate() const;  // throws ConfigError

  static FilterSpec permissive();
  static FilterSpec clean_strict();
  static FilterSpec clean_loose();
  static std::optional<FilterSpec> preset(std::string_view name);

  // One key per field, all six required, unknown keys rejected.
  static FilterSpec from_json_text(std::string_view text);  // throws ConfigError
  static FilterSpec from_json_file(const std::string& path);
  std::string to_json() const;
};

// Labeled-letter fraction of one example; 0 when it has no Arabic letters.
double diacritic_coverage(const DiacritizedText& dt);

// Whether any non-Arabic-letter base carries a label.
bool has_foreign_marked(const DiacritizedText& dt);

// First violated rule in field order, or nullopt when the example passes.
std::optional<FilterRule> first_violation(const CorpusExample& ex, const FilterSpec& spec);

struct FilterOutcome {
  std::vector<CorpusExample> kept;
  std::vector<std::pair<CorpusExample, FilterRule>> rejected;
};

FilterOutcome filter_corpus(std::vector<CorpusExample> examples, const FilterSpec& spec);

struct CorpusStats {
  std::uint64_t examples = 0;
  std::uint64_t words = 0;
  std::uint64_t arabic_letter_cells = 0;
  std::uint64_t labeled_arabic_letter_cells = 0;
  // Label occurrences over non-whitespace cells (whitespace structurally
  // never carries a label).
  std::array<std::uint64_t, Label::kClassCount> label_counts{};

  void add(const CorpusExample& ex);
  void merge(const CorpusStats& other);
  double diacritic_coverage_percent() const;
  std::string to_json() const;
};

CorpusStats corpus_stats(const std::vector<CorpusExample>& examples);

struct SplitFractions {
  double train = 0;
  double dev = 0;
  double test = 0;
};

struct SplitResult {
  std::vector<std::size_t> train;
  std::vector<std::size_t> dev;
  std::vector<std::size_t> test;
};

// Deterministic seeded partition of [0, count). Dev and test sizes floor;
// train takes the remainder. Each part is sorted ascending.
SplitResult split_corpus(std::size_t count, SplitFractions fractions,
                         std::uint64_t seed);  // throws InvalidFractions

}  // namespace tashkeel
