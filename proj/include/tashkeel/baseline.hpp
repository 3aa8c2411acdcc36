#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tashkeel/corpus.hpp"
#include "tashkeel/text.hpp"

namespace tashkeel {

// Word-dictionary diacritizer with a character-context back-off chain:
// (char, prev, is_last) -> (char, is_last) -> (char) -> (). Counts from
// the second training stage are scaled by a curriculum weight so the
// cleaner data dominates the argmax decisions.
class BaselineModel {
 public:
  static constexpr std::uint16_t kFormatVersion = 1;

  BaselineModel() = default;

  // stage2 may be null. lambda defaults to |stage1 cells| / |stage2 cells|
  // so both stages contribute equal total weight. Throws EmptyCorpus when
  // no labeled cell exists in either stage, ConfigError on lambda <= 0.
  static BaselineModel train(const std::vector<CorpusExample>& stage1,
                             const std::vector<CorpusExample>* stage2 = nullptr,
                             std::optional<double> lambda = std::nullopt);

  // Inserts marks only; the output always strips back to the input.
  std::string predict(std::string_view undiac) const;

  void save(const std::string& path) const;           // IoError
  static BaselineModel load(const std::string& path);  // IoError, VersionMismatch

  double lambda() const { return lambda_; }
  std::uint64_t stage1_cells() const { return stage1_cells_; }
  std::uint64_t stage2_cells() const { return stage2_cells_; }
  std::size_t word_table_size() const { return words_.size(); }

  // Test hook: the stored form for an undiacritized key, if any.
  std::optional<std::string> word_form(std::string_view key) const;

 private:
  struct WordEntry {
    std::string form;
    double count = 0.0;
  };

  Label backoff_label(char32_t base, char32_t prev, bool last) const;

  std::unordered_map<std::string, WordEntry> words_;
  std::unordered_map<std::uint64_t, std::uint8_t> ctx3_;  // (char, prev, last)
  std::unordered_map<std::uint64_t, std::uint8_t> ctx2_;  // (char, last)
  std::unordered_map<std::uint32_t, std::uint8_t> ctx1_;  // (char)
  std::optional<std::uint8_t> ctx0_;                      // ()
  double lambda_ = 1.0;
  std::uint64_t stage1_cells_ = 0;
  std::uint64_t stage2_cells_ = 0;
};

}  // namespace tashkeel
