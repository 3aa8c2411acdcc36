#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tashkeel/unicode.hpp"

namespace tashkeel {

// The eight harakat, U+064B through U+0652. Anything outside this range,
// superscript alef included, is treated as a base character.
enum class Mark : char32_t {
  Fathatan = 0x064B,
  Dammatan = 0x064C,
  Kasratan = 0x064D,
  Fatha = 0x064E,
  Damma = 0x064F,
  Kasra = 0x0650,
  Shadda = 0x0651,
  Sukun = 0x0652,
};

constexpr char32_t kFirstMark = 0x064B;
constexpr char32_t kLastMark = 0x0652;

constexpr bool is_diacritic_mark(char32_t cp) {
  return cp >= kFirstMark && cp <= kLastMark;
}

std::string_view mark_name(Mark m);

// Per-cell diacritic class. 16 classes total: none, the eight single
// marks, shadda combined with the six vowel/tanwin marks, and
// shadda+sukun (representable, linguistically invalid).
class Label {
 public:
  static constexpr int kClassCount = 16;

  constexpr Label() = default;  // NoDiacritic

  static Label single(Mark m);
  static Label combined(Mark vowel);  // shadda + non-shadda mark
  static std::optional<Label> from_class_id(int id);
  static Label from_marks(bool shadda, std::optional<Mark> vowel);

  int class_id() const { return id_; }
  bool none() const { return id_ == 0; }
  bool has_shadda() const;
  std::optional<Mark> vowel() const;  // the non-shadda component
  bool is_shadda_sukun() const { return id_ == 15; }

  std::string_view name() const;
  static std::optional<Label> from_name(std::string_view name);

  // Appends the mark codepoints in canonical order: shadda first.
  void append_marks(std::u32string& out) const;

  friend bool operator==(Label a, Label b) { return a.id_ == b.id_; }
  friend bool operator!=(Label a, Label b) { return a.id_ != b.id_; }
  friend bool operator<(Label a, Label b) { return a.id_ < b.id_; }

 private:
  explicit constexpr Label(int id) : id_(id) {}
  int id_ = 0;
};

enum class BaseClass : std::uint8_t {
  ArabicLetter,
  Digit,
  Punctuation,
  Whitespace,
  Other,
};

std::string_view base_class_name(BaseClass c);
std::optional<BaseClass> base_class_from_name(std::string_view name);

BaseClass classify_base(char32_t scalar);

struct Cell {
  char32_t base = 0;
  Label label;
  BaseClass cls = BaseClass::Other;

  friend bool operator==(const Cell& a, const Cell& b) {
    return a.base == b.base && a.label == b.label && a.cls == b.cls;
  }
};

// A parsed line: cells in order plus the whitespace-delimited word
// structure. Spans index cells and cover exactly the non-whitespace ones.
struct DiacritizedText {
  std::vector<Cell> cells;
  std::vector<std::pair<std::size_t, std::size_t>> word_spans;  // [start, end)

  static DiacritizedText from_cells(std::vector<Cell> cells);

  friend bool operator==(const DiacritizedText& a, const DiacritizedText& b) {
    return a.cells == b.cells;
  }
};

enum class ParseIssue : std::uint8_t {
  OverstackedMarks,
  DuplicateMark,
  LeadingMark,
  ShaddaSukun,
};

std::string_view parse_issue_name(ParseIssue issue);

struct ParseReport {
  std::vector<std::pair<std::size_t, ParseIssue>> malformed_cells;
  bool clean() const { return malformed_cells.empty(); }
  bool has(ParseIssue issue) const;
};

struct ParseResult {
  DiacritizedText text;
  ParseReport report;
};

struct StripResult {
  std::string text;
  std::vector<Label> labels;
};

// Canonicalization: NFC-style composition and mark reordering for the
// Arabic block (project order puts shadda before its vowel), presentation
// forms decomposed, tatweel dropped, whitespace runs collapsed to one
// space. Total and idempotent; never throws.
std::string normalize_text(std::string_view raw);

// Expects normalized input. All defects are reported, never fatal.
ParseResult parse_cells(std::string_view text);

// Expects normalized input. Labels line up one-to-one with the scalars
// of the returned string.
StripResult strip_diacritics(std::string_view text);

std::string render_cells(const DiacritizedText& dt);

// Rebuilds cells from a stripped string and its labels (inverse of
// strip_diacritics).
DiacritizedText cells_from_strip(std::string_view stripped,
                                 const std::vector<Label>& labels);

}  // namespace tashkeel
