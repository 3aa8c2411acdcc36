#pragma once

#include <unistd.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "tashkeel/corpus.hpp"
#include "tashkeel/text.hpp"

namespace testutil {

// Deterministic across platforms; tests must not depend on libstdc++
// distribution internals.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }

  double uniform() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }

  bool chance(double p) { return uniform() < p; }

  double gauss() {
    double u1 = uniform(), u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }
};

inline constexpr std::array<char32_t, 21> kLetters = {
    0x0627, 0x0628, 0x062A, 0x062B, 0x062C, 0x062D, 0x062E, 0x062F, 0x0631, 0x0632, 0x0633,
    0x0635, 0x0637, 0x0639, 0x0641, 0x0642, 0x0643, 0x0644, 0x0645, 0x0646, 0x0648,
};

inline char32_t random_letter(Rng& rng) { return kLetters[rng.below(kLetters.size())]; }

// Corpus-like label distribution; never yields shadda+sukun.
inline tashkeel::Label random_label(Rng& rng) {
  using tashkeel::Label;
  using tashkeel::Mark;
  std::uint32_t roll = rng.below(100);
  if (roll < 20) return Label();
  if (roll < 50) return Label::single(Mark::Fatha);
  if (roll < 60) return Label::single(Mark::Damma);
  if (roll < 72) return Label::single(Mark::Kasra);
  if (roll < 84) return Label::single(Mark::Sukun);
  if (roll < 87) return Label::single(Mark::Fathatan);
  if (roll < 89) return Label::single(Mark::Dammatan);
  if (roll < 91) return Label::single(Mark::Kasratan);
  if (roll < 92) return Label::single(Mark::Shadda);
  if (roll < 95) return Label::combined(Mark::Fatha);
  if (roll < 97) return Label::combined(Mark::Damma);
  if (roll < 99) return Label::combined(Mark::Kasra);
  return Label::combined(Mark::Fathatan);
}

inline tashkeel::Label random_label_nonempty(Rng& rng) {
  tashkeel::Label label;
  while (label.none()) label = random_label(rng);
  return label;
}

inline std::vector<tashkeel::Cell> random_word_cells(Rng& rng, std::size_t len,
                                                     bool full_labels = false) {
  std::vector<tashkeel::Cell> cells;
  for (std::size_t i = 0; i < len; ++i) {
    char32_t base = random_letter(rng);
    tashkeel::Label label = full_labels ? random_label_nonempty(rng) : random_label(rng);
    cells.push_back({base, label, tashkeel::classify_base(base)});
  }
  return cells;
}

// Well-formed line: words separated by single spaces, optional digit and
// punctuation tokens, whitespace unlabeled. Rendering it yields a
// normalized string with a clean parse.
inline tashkeel::DiacritizedText random_text(Rng& rng, std::size_t max_words,
                                             bool with_nonletters = true) {
  std::vector<tashkeel::Cell> cells;
  std::size_t words = 1 + rng.below(static_cast<std::uint32_t>(max_words));
  for (std::size_t w = 0; w < words; ++w) {
    if (w > 0) cells.push_back({U' ', tashkeel::Label(), tashkeel::BaseClass::Whitespace});
    if (with_nonletters && rng.chance(0.12)) {
      char32_t digit = U'0' + rng.below(10);
      cells.push_back({digit, tashkeel::Label(), tashkeel::BaseClass::Digit});
      continue;
    }
    auto word = random_word_cells(rng, 1 + rng.below(6));
    cells.insert(cells.end(), word.begin(), word.end());
    if (with_nonletters && rng.chance(0.1)) {
      cells.push_back({0x060C, tashkeel::Label(), tashkeel::BaseClass::Punctuation});
    }
  }
  return tashkeel::DiacritizedText::from_cells(std::move(cells));
}

// Hypothesis-side mutation: label flips, base substitutions, deletions,
// insertions. Exercises every alignment branch.
inline tashkeel::DiacritizedText mutate_text(const tashkeel::DiacritizedText& gold, Rng& rng,
                                             double p_label, double p_sub, double p_del,
                                             double p_ins) {
  std::vector<tashkeel::Cell> cells;
  for (const tashkeel::Cell& c : gold.cells) {
    if (rng.chance(p_del)) continue;
    tashkeel::Cell copy = c;
    if (copy.cls != tashkeel::BaseClass::Whitespace) {
      if (rng.chance(p_sub)) {
        copy.base = random_letter(rng);
        copy.cls = tashkeel::classify_base(copy.base);
      }
      if (rng.chance(p_label)) {
        copy.label = *tashkeel::Label::from_class_id(static_cast<int>(rng.below(16)));
      }
    }
    cells.push_back(copy);
    if (rng.chance(p_ins)) {
      char32_t base = random_letter(rng);
      cells.push_back({base, random_label(rng), tashkeel::classify_base(base)});
    }
  }
  return tashkeel::DiacritizedText::from_cells(std::move(cells));
}

// Deterministic vocabulary whose words each have one canonical
// diacritization; the learnable signal for the baseline tests.
struct SynthVocab {
  std::vector<std::string> undiac;  // stripped word
  std::vector<std::string> diac;    // canonical diacritized form

  static SynthVocab make(Rng& rng, std::size_t size) {
    SynthVocab v;
    std::vector<std::u32string> seen_keys;
    while (v.undiac.size() < size) {
      // fully labeled: every vocabulary line has 100% diacritic coverage
      auto cells = random_word_cells(rng, 2 + rng.below(5), /*full_labels=*/true);
      std::u32string key;
      for (const auto& c : cells) key.push_back(c.base);
      bool dup = false;
      for (const auto& k : seen_keys) dup = dup || k == key;
      if (dup) continue;
      seen_keys.push_back(key);
      auto dt = tashkeel::DiacritizedText::from_cells(cells);
      std::string form = tashkeel::render_cells(dt);
      v.diac.push_back(form);
      v.undiac.push_back(tashkeel::strip_diacritics(form).text);
    }
    return v;
  }

  std::size_t zipfish(Rng& rng) const {
    double u = rng.uniform();
    return static_cast<std::size_t>(u * u * static_cast<double>(undiac.size()));
  }

  std::string sample_line(Rng& rng, std::size_t min_words, std::size_t max_words) const {
    std::size_t words =
        min_words + rng.below(static_cast<std::uint32_t>(max_words - min_words + 1));
    std::string line;
    for (std::size_t w = 0; w < words; ++w) {
      if (w > 0) line += ' ';
      line += diac[zipfish(rng)];
    }
    return line;
  }
};

// Replaces each label with a random one (possibly none) with probability p.
inline std::string corrupt_labels(const std::string& diac_line, Rng& rng, double p) {
  auto parsed = tashkeel::parse_cells(tashkeel::normalize_text(diac_line));
  for (auto& cell : parsed.text.cells) {
    if (cell.cls == tashkeel::BaseClass::Whitespace) continue;
    if (rng.chance(p)) {
      cell.label = *tashkeel::Label::from_class_id(static_cast<int>(rng.below(15)));
      if (cell.label.is_shadda_sukun()) cell.label = tashkeel::Label();
    }
  }
  return tashkeel::render_cells(parsed.text);
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    dir_ = std::filesystem::temp_directory_path() /
           ("tashkeel_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  std::filesystem::path dir_;
};

inline void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  for (const auto& l : lines) out << l << '\n';
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace testutil
