#include "tashkeel/text.hpp"

#include <algorithm>
#include <array>

#include "tashkeel/errors.hpp"

namespace tashkeel {

namespace {

constexpr std::array<std::string_view, 8> kMarkNames = {
    "Fathatan", "Dammatan", "Kasratan", "Fatha", "Damma", "Kasra", "Shadda", "Sukun",
};

constexpr std::array<std::string_view, Label::kClassCount> kLabelNames = {
    "NoDiacritic",
    "Fathatan",
    "Dammatan",
    "Kasratan",
    "Fatha",
    "Damma",
    "Kasra",
    "Shadda",
    "Sukun",
    "Shadda+Fathatan",
    "Shadda+Dammatan",
    "Shadda+Kasratan",
    "Shadda+Fatha",
    "Shadda+Damma",
    "Shadda+Kasra",
    "Shadda+Sukun",
};

constexpr std::array<std::string_view, 5> kBaseClassNames = {
    "arabic-letter", "digit", "punctuation", "whitespace", "other",
};

// Mark ordering inside a combining run. Derived from the canonical
// combining classes except that shadda sorts before the vowel and tanwin
// marks, which is the order the corpus convention and render_cells use.
int reorder_key(char32_t cp) {
  if (cp == static_cast<char32_t>(Mark::Shadda)) return 53;
  return uni::combining_class(cp) * 2;
}

}  // namespace

std::string_view mark_name(Mark m) {
  return kMarkNames[static_cast<char32_t>(m) - kFirstMark];
}

Label Label::single(Mark m) {
  return Label(static_cast<int>(static_cast<char32_t>(m) - kFirstMark) + 1);
}

Label Label::combined(Mark vowel) {
  if (vowel == Mark::Shadda) return Label(7);
  if (vowel == Mark::Sukun) return Label(15);
  return Label(9 + static_cast<int>(static_cast<char32_t>(vowel) - kFirstMark));
}

std::optional<Label> Label::from_class_id(int id) {
  if (id < 0 || id >= kClassCount) return std::nullopt;
  return Label(id);
}

Label Label::from_marks(bool shadda, std::optional<Mark> vowel) {
  if (!shadda) return vowel ? single(*vowel) : Label();
  return vowel ? combined(*vowel) : single(Mark::Shadda);
}

bool Label::has_shadda() const { return id_ == 7 || id_ >= 9; }

std::optional<Mark> Label::vowel() const {
  if (id_ == 0 || id_ == 7) return std::nullopt;
  if (id_ <= 8) return static_cast<Mark>(kFirstMark + id_ - 1);
  if (id_ == 15) return Mark::Sukun;
  return static_cast<Mark>(kFirstMark + id_ - 9);
}

std::string_view Label::name() const { return kLabelNames[id_]; }

std::optional<Label> Label::from_name(std::string_view name) {
  for (int i = 0; i < kClassCount; ++i) {
    if (kLabelNames[i] == name) return Label(i);
  }
  return std::nullopt;
}

void Label::append_marks(std::u32string& out) const {
  if (has_shadda()) out.push_back(static_cast<char32_t>(Mark::Shadda));
  if (auto v = vowel()) out.push_back(static_cast<char32_t>(*v));
}

std::string_view base_class_name(BaseClass c) {
  return kBaseClassNames[static_cast<std::size_t>(c)];
}

std::optional<BaseClass> base_class_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kBaseClassNames.size(); ++i) {
    if (kBaseClassNames[i] == name) return static_cast<BaseClass>(i);
  }
  return std::nullopt;
}

BaseClass classify_base(char32_t scalar) {
  if (uni::is_whitespace(scalar)) return BaseClass::Whitespace;
  if (uni::is_digit(scalar)) return BaseClass::Digit;
  if (uni::is_arabic_letter(scalar)) return BaseClass::ArabicLetter;
  if (uni::is_punctuation(scalar)) return BaseClass::Punctuation;
  return BaseClass::Other;
}

DiacritizedText DiacritizedText::from_cells(std::vector<Cell> cells) {
  DiacritizedText dt;
  dt.cells = std::move(cells);
  std::size_t start = 0;
  bool in_word = false;
  for (std::size_t i = 0; i < dt.cells.size(); ++i) {
    bool ws = dt.cells[i].cls == BaseClass::Whitespace;
    if (!ws && !in_word) {
      start = i;
      in_word = true;
    } else if (ws && in_word) {
      dt.word_spans.emplace_back(start, i);
      in_word = false;
    }
  }
  if (in_word) dt.word_spans.emplace_back(start, dt.cells.size());
  return dt;
}

bool ParseReport::has(ParseIssue issue) const {
  return std::any_of(malformed_cells.begin(), malformed_cells.end(),
                     [issue](const auto& e) { return e.second == issue; });
}

std::string_view parse_issue_name(ParseIssue issue) {
  switch (issue) {
    case ParseIssue::OverstackedMarks: return "OverstackedMarks";
    case ParseIssue::DuplicateMark: return "DuplicateMark";
    case ParseIssue::LeadingMark: return "LeadingMark";
    case ParseIssue::ShaddaSukun: return "ShaddaSukun";
  }
  return "?";
}

std::string normalize_text(std::string_view raw) {
  std::u32string scalars = uni::decode_utf8_lossy(raw);

  // Presentation forms expand to their compatibility sequences, then
  // tatweel goes away and precomposed hamza/madda letters split so the
  // composition pass below can canonicalize uniformly.
  std::u32string work;
  work.reserve(scalars.size());
  for (char32_t cp : scalars) {
    if (auto dec = uni::presentation_decomposition(cp); !dec.empty()) {
      work.append(dec);
    } else {
      work.push_back(cp);
    }
  }

  std::u32string decomposed;
  decomposed.reserve(work.size());
  for (char32_t cp : work) {
    if (cp == uni::kTatweel) continue;
    char32_t starter, mark;
    if (uni::arabic_canonical_decompose(cp, starter, mark)) {
      decomposed.push_back(starter);
      decomposed.push_back(mark);
    } else {
      decomposed.push_back(cp);
    }
  }

  // Canonical reordering over maximal runs of combining marks.
  std::size_t i = 0;
  while (i < decomposed.size()) {
    if (uni::combining_class(decomposed[i]) == 0) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < decomposed.size() && uni::combining_class(decomposed[j]) != 0) ++j;
    std::stable_sort(decomposed.begin() + i, decomposed.begin() + j,
                     [](char32_t a, char32_t b) { return reorder_key(a) < reorder_key(b); });
    i = j;
  }

  // Canonical composition (UAX #15 style) over the Arabic pair table.
  std::u32string composed;
  composed.reserve(decomposed.size());
  std::ptrdiff_t starter_pos = -1;
  int last_cc = 0;
  for (char32_t cp : decomposed) {
    int cc = uni::combining_class(cp);
    if (cc == 0) {
      composed.push_back(cp);
      starter_pos = static_cast<std::ptrdiff_t>(composed.size()) - 1;
      last_cc = 0;
      continue;
    }
    if (starter_pos >= 0 && last_cc < cc) {
      if (char32_t c = uni::arabic_compose(composed[starter_pos], cp)) {
        composed[starter_pos] = c;
        continue;
      }
    }
    composed.push_back(cp);
    last_cc = cc;
  }

  std::u32string out;
  out.reserve(composed.size());
  bool in_ws = false;
  for (char32_t cp : composed) {
    if (uni::is_whitespace(cp)) {
      if (!in_ws) out.push_back(U' ');
      in_ws = true;
    } else {
      out.push_back(cp);
      in_ws = false;
    }
  }

  return uni::encode_utf8(out);
}

ParseResult parse_cells(std::string_view text) {
  std::u32string scalars = uni::decode_utf8_lossy(text);

  ParseResult result;
  auto& cells = result.text.cells;
  auto& report = result.report.malformed_cells;

  std::vector<std::u32string> attached;  // marks per cell, in input order
  for (char32_t cp : scalars) {
    if (is_diacritic_mark(cp)) {
      if (cells.empty() || cells.back().cls == BaseClass::Whitespace) {
        report.emplace_back(cells.empty() ? 0 : cells.size() - 1, ParseIssue::LeadingMark);
        continue;
      }
      attached.back().push_back(cp);
    } else {
      cells.push_back(Cell{cp, Label(), classify_base(cp)});
      attached.emplace_back();
    }
  }

  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    const std::u32string& marks = attached[idx];
    if (marks.empty()) continue;

    std::u32string unique;
    for (char32_t m : marks) {
      if (unique.find(m) == std::u32string::npos) unique.push_back(m);
    }
    if (unique.size() != marks.size()) {
      report.emplace_back(idx, ParseIssue::DuplicateMark);
    }

    bool has_shadda =
        unique.find(static_cast<char32_t>(Mark::Shadda)) != std::u32string::npos;
    char32_t first_other = 0;
    for (char32_t m : unique) {
      if (m != static_cast<char32_t>(Mark::Shadda)) {
        first_other = m;
        break;
      }
    }

    if (unique.size() > 2 || (unique.size() == 2 && !has_shadda)) {
      report.emplace_back(idx, ParseIssue::OverstackedMarks);
    }

    Label label = Label::from_marks(
        has_shadda, first_other ? std::optional<Mark>(static_cast<Mark>(first_other))
                                : std::nullopt);
    if (label.is_shadda_sukun()) {
      report.emplace_back(idx, ParseIssue::ShaddaSukun);
    }
    cells[idx].label = label;
  }

  result.text = DiacritizedText::from_cells(std::move(cells));
  return result;
}

StripResult strip_diacritics(std::string_view text) {
  ParseResult parsed = parse_cells(text);
  StripResult out;
  out.labels.reserve(parsed.text.cells.size());
  for (const Cell& c : parsed.text.cells) {
    uni::append_utf8(out.text, c.base);
    out.labels.push_back(c.label);
  }
  return out;
}

std::string render_cells(const DiacritizedText& dt) {
  std::u32string out;
  out.reserve(dt.cells.size() * 2);
  for (const Cell& c : dt.cells) {
    out.push_back(c.base);
    c.label.append_marks(out);
  }
  return uni::encode_utf8(out);
}

DiacritizedText cells_from_strip(std::string_view stripped,
                                 const std::vector<Label>& labels) {
  std::u32string scalars = uni::decode_utf8_lossy(stripped);
  if (scalars.size() != labels.size()) {
    throw Error("cells_from_strip: scalar count " + std::to_string(scalars.size()) +
                " != label count " + std::to_string(labels.size()));
  }
  std::vector<Cell> cells;
  cells.reserve(scalars.size());
  for (std::size_t i = 0; i < scalars.size(); ++i) {
    cells.push_back(Cell{scalars[i], labels[i], classify_base(scalars[i])});
  }
  return DiacritizedText::from_cells(std::move(cells));
}

}  // namespace tashkeel
