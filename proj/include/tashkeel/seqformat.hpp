#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tashkeel/text.hpp"

namespace tashkeel {

// One training record: UTF-8 bytes of the undiacritized input and the
// diacritized target. Boundaries mark where packed examples start; a
// freshly encoded record has the single boundary (0, 0).
struct ByteRecord {
  std::string input;
  std::string target;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> segment_boundaries{{0, 0}};

  friend bool operator==(const ByteRecord& a, const ByteRecord& b) {
    return a.input == b.input && a.target == b.target &&
           a.segment_boundaries == b.segment_boundaries;
  }
};

ByteRecord encode_record(std::string_view undiac, std::string_view diac);  // MismatchedPair

struct DecodeResult {
  std::string text;
  std::size_t replacements = 0;
};

// Never fails; ill-formed byte runs become U+FFFD.
DecodeResult decode_prediction(std::string_view bytes);

constexpr std::size_t kGap = static_cast<std::size_t>(-1);

struct CellAlignment {
  // (gold cell index or kGap, predicted cell index or kGap), in order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t cost = 0;  // Levenshtein distance over base scalars
};

// Minimum edit-distance alignment over base scalars, unit costs.
// Ties prefer match > substitution > deletion > insertion.
CellAlignment align_cells(const DiacritizedText& gold, const DiacritizedText& predicted);

std::string to_sentinel_target(std::string_view diac);  // SentinelCollision

// Substitutes input scalars back for the sentinels; nullopt when the
// sentinel count does not match the input length (unscorable prediction).
std::optional<std::string> from_sentinel_prediction(std::string_view pred,
                                                    std::string_view original_input);

struct PackingConfig {
  std::size_t max_len_bytes = 512;
  bool raw_truncate = false;  // paper-faithful first-N-bytes cut
};

// Truncates over-long records (at cell granularity unless raw_truncate)
// and packs short ones first-fit in arrival order. Both sides of every
// output fit in max_len_bytes.
std::vector<ByteRecord> pack_and_truncate(const std::vector<ByteRecord>& records,
                                          const PackingConfig& cfg);

// Length-prefixed binary framing, little-endian.
void write_record(std::ostream& out, const ByteRecord& rec);
void write_records(std::ostream& out, const std::vector<ByteRecord>& recs);
std::vector<ByteRecord> read_records(std::istream& in);  // IoError on truncation

// Tab-separated input/target, one record per line; refuses records
// containing tab or newline bytes.
void write_records_tsv(std::ostream& out, const std::vector<ByteRecord>& recs);

}  // namespace tashkeel
