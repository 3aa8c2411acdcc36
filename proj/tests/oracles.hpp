#pragma once

// Reference implementations the production code is checked against.
// Deliberately naive and structured differently from the library: the
// scorer re-derives character strata and word boundaries from scratch
// instead of reusing Cell::cls or DiacritizedText::word_spans.

#include <cstdint>
#include <string>
#include <vector>

#include "tashkeel/metrics.hpp"
#include "tashkeel/seqformat.hpp"
#include "tashkeel/text.hpp"
#include "tashkeel/unicode.hpp"

namespace oracles {

// Plain full-matrix Levenshtein cost.
inline std::size_t lev_cost(const std::u32string& a, const std::u32string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1,
                                          std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      std::size_t del = d[i - 1][j] + 1;
      std::size_t ins = d[i][j - 1] + 1;
      d[i][j] = std::min(sub, std::min(del, ins));
    }
  }
  return d[a.size()][b.size()];
}

inline std::u32string bases_of(const tashkeel::DiacritizedText& dt) {
  std::u32string out;
  for (const auto& c : dt.cells) out.push_back(c.base);
  return out;
}

struct Score {
  std::uint64_t cells = 0;
  std::uint64_t wrong = 0;
  std::uint64_t words = 0;
  std::uint64_t wrong_words = 0;

  double der() const { return cells ? 100.0 * static_cast<double>(wrong) / cells : 0.0; }
  double wer() const { return words ? 100.0 * static_cast<double>(wrong_words) / words : 0.0; }
};

inline Score score_pair(const tashkeel::DiacritizedText& gold,
                        const tashkeel::DiacritizedText& pred,
                        const tashkeel::EvalConfig& cfg) {
  using tashkeel::kGap;

  tashkeel::CellAlignment al = tashkeel::align_cells(gold, pred);

  const std::size_t n = gold.cells.size();
  std::vector<std::ptrdiff_t> pred_of(n, -2);
  for (auto [gi, pi] : al.pairs) {
    if (gi != kGap) pred_of[gi] = pi == kGap ? -1 : static_cast<std::ptrdiff_t>(pi);
  }

  auto ws = [&](std::size_t i) { return tashkeel::uni::is_whitespace(gold.cells[i].base); };

  std::vector<bool> included(n), wrong(n);
  for (std::size_t i = 0; i < n; ++i) {
    char32_t base = gold.cells[i].base;
    bool space = ws(i);
    bool digit = tashkeel::uni::is_digit(base);
    bool letter = tashkeel::uni::is_arabic_letter(base);
    bool punctish = !space && !digit && !letter;  // punctuation and "other"
    bool last = !space && (i + 1 == n || ws(i + 1));
    bool unlabeled = gold.cells[i].label.none();

    bool excluded = (digit && !cfg.include_numbers) || (punctish && !cfg.include_punct) ||
                    (space && !cfg.include_space) || (last && !cfg.include_last) ||
                    (unlabeled && !cfg.include_unlabeled);
    included[i] = !excluded;
    if (!included[i]) continue;

    bool bad;
    if (pred_of[i] < 0) {
      bad = true;  // dropped by the prediction (or never aligned)
    } else {
      bad = pred.cells[static_cast<std::size_t>(pred_of[i])].label != gold.cells[i].label;
    }
    wrong[i] = bad;
  }

  Score s;
  for (std::size_t i = 0; i < n; ++i) {
    if (included[i]) {
      ++s.cells;
      if (wrong[i]) ++s.wrong;
    }
  }

  std::size_t i = 0;
  while (i < n) {
    if (ws(i)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    bool any_included = false, any_wrong = false;
    while (j < n && !ws(j)) {
      any_included = any_included || included[j];
      any_wrong = any_wrong || (included[j] && wrong[j]);
      ++j;
    }
    if (any_included) {
      ++s.words;
      if (any_wrong) ++s.wrong_words;
    }
    i = j;
  }
  return s;
}

}  // namespace oracles
