#include "tashkeel/corpus.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "tashkeel/errors.hpp"

namespace tashkeel {

namespace {

using ordered_json = nlohmann::ordered_json;

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
  });
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

CorpusExample make_example(std::size_t id, std::string_view raw_line) {
  CorpusExample ex;
  ex.id = id;
  ex.text = normalize_text(raw_line);
  ParseResult parsed = parse_cells(ex.text);
  ex.parse = std::move(parsed.text);
  ex.report = std::move(parsed.report);
  return ex;
}

CorpusReader::CorpusReader(const std::string& path) : in_(path, std::ios::binary), path_(path) {
  if (!in_) throw IoError("cannot open corpus file: " + path);
}

std::optional<CorpusExample> CorpusReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) continue;
    std::u32string scalars;
    std::size_t offset = 0;
    if (!uni::decode_utf8_strict(line, scalars, &offset)) {
      throw Utf8Error(line_no_, offset);
    }
    return make_example(next_id_++, line);
  }
  if (in_.bad()) throw IoError("read error on corpus file: " + path_);
  return std::nullopt;
}

std::vector<CorpusExample> load_corpus(const std::string& path) {
  CorpusReader reader(path);
  std::vector<CorpusExample> out;
  while (auto ex = reader.next()) out.push_back(std::move(*ex));
  return out;
}

std::string_view filter_rule_name(FilterRule rule) {
  switch (rule) {
    case FilterRule::MinDiacriticCoverage: return "min_diacritic_coverage";
    case FilterRule::RequireCleanParse: return "require_clean_parse";
    case FilterRule::MaxCells: return "max_cells";
    case FilterRule::DropIfForeignMarked: return "drop_if_foreign_marked";
    case FilterRule::AllowedBaseClasses: return "allowed_base_classes";
    case FilterRule::MinWords: return "min_words";
  }
  return "?";
}

void FilterSpec::validate() const {
  if (!(min_diacritic_coverage >= 0.0 && min_diacritic_coverage <= 1.0)) {
    throw ConfigError("min_diacritic_coverage must be in [0, 1]");
  }
  if (max_cells == 0) throw ConfigError("max_cells must be positive");
  if (min_words == 0) throw ConfigError("min_words must be positive");
}

FilterSpec FilterSpec::permissive() {
  FilterSpec s;
  s.min_diacritic_coverage = 0.0;
  s.require_clean_parse = false;
  s.max_cells = 1u << 20;
  s.drop_if_foreign_marked = false;
  s.allowed_base_classes = {true, true, true, true, true};
  s.min_words = 1;
  return s;
}

FilterSpec FilterSpec::clean_strict() {
  FilterSpec s;
  s.min_diacritic_coverage = 0.80;
  s.require_clean_parse = true;
  s.max_cells = 512;
  s.drop_if_foreign_marked = true;
  s.allowed_base_classes = {true, true, true, true, false};  // no "other"
  s.min_words = 1;
  return s;
}

FilterSpec FilterSpec::clean_loose() {
  FilterSpec s;
  s.min_diacritic_coverage = 0.20;
  s.require_clean_parse = false;
  s.max_cells = 4096;
  s.drop_if_foreign_marked = false;
  s.allowed_base_classes = {true, true, true, true, true};
  s.min_words = 1;
  return s;
}

std::optional<FilterSpec> FilterSpec::preset(std::string_view name) {
  if (name == "permissive") return permissive();
  if (name == "clean-strict") return clean_strict();
  if (name == "clean-loose") return clean_loose();
  return std::nullopt;
}

FilterSpec FilterSpec::from_json_text(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("filter config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("filter config must be a JSON object");

  static constexpr const char* kKeys[] = {
      "min_diacritic_coverage", "require_clean_parse",   "max_cells",
      "drop_if_foreign_marked", "allowed_base_classes", "min_words",
  };
  for (const auto& [key, _] : j.items()) {
    if (std::find_if(std::begin(kKeys), std::end(kKeys),
                     [&](const char* k) { return key == k; }) == std::end(kKeys)) {
      throw ConfigError("unknown filter config key: " + key);
    }
  }
  for (const char* k : kKeys) {
    if (!j.contains(k)) throw ConfigError(std::string("missing filter config key: ") + k);
  }

  FilterSpec s;
  try {
    s.min_diacritic_coverage = j.at("min_diacritic_coverage").get<double>();
    s.require_clean_parse = j.at("require_clean_parse").get<bool>();
    s.max_cells = j.at("max_cells").get<std::size_t>();
    s.drop_if_foreign_marked = j.at("drop_if_foreign_marked").get<bool>();
    s.min_words = j.at("min_words").get<std::size_t>();
    s.allowed_base_classes.fill(false);
    for (const auto& name : j.at("allowed_base_classes")) {
      auto cls = base_class_from_name(name.get<std::string>());
      if (!cls) throw ConfigError("unknown base class: " + name.get<std::string>());
      s.allowed_base_classes[static_cast<std::size_t>(*cls)] = true;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad filter config value: ") + e.what());
  }
  s.validate();
  return s;
}

FilterSpec FilterSpec::from_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open filter config: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json_text(text);
}

std::string FilterSpec::to_json() const {
  ordered_json j;
  j["min_diacritic_coverage"] = min_diacritic_coverage;
  j["require_clean_parse"] = require_clean_parse;
  j["max_cells"] = max_cells;
  j["drop_if_foreign_marked"] = drop_if_foreign_marked;
  ordered_json classes = ordered_json::array();
  for (std::size_t i = 0; i < allowed_base_classes.size(); ++i) {
    if (allowed_base_classes[i]) classes.push_back(base_class_name(static_cast<BaseClass>(i)));
  }
  j["allowed_base_classes"] = classes;
  j["min_words"] = min_words;
  return j.dump(2);
}

double diacritic_coverage(const DiacritizedText& dt) {
  std::uint64_t letters = 0, labeled = 0;
  for (const Cell& c : dt.cells) {
    if (c.cls != BaseClass::ArabicLetter) continue;
    ++letters;
    if (!c.label.none()) ++labeled;
  }
  if (letters == 0) return 0.0;
  return static_cast<double>(labeled) / static_cast<double>(letters);
}

bool has_foreign_marked(const DiacritizedText& dt) {
  return std::any_of(dt.cells.begin(), dt.cells.end(), [](const Cell& c) {
    return c.cls != BaseClass::ArabicLetter && !c.label.none();
  });
}

std::optional<FilterRule> first_violation(const CorpusExample& ex, const FilterSpec& spec) {
  const auto& dt = ex.parse;
  std::uint64_t letters = 0, labeled = 0;
  for (const Cell& c : dt.cells) {
    if (c.cls != BaseClass::ArabicLetter) continue;
    ++letters;
    if (!c.label.none()) ++labeled;
  }
  double required = spec.min_diacritic_coverage * static_cast<double>(letters);
  if (static_cast<double>(labeled) + 1e-9 < required ||
      (letters == 0 && spec.min_diacritic_coverage > 0.0)) {
    return FilterRule::MinDiacriticCoverage;
  }
  if (spec.require_clean_parse && !ex.report.clean()) return FilterRule::RequireCleanParse;
  if (dt.cells.size() > spec.max_cells) return FilterRule::MaxCells;
  if (spec.drop_if_foreign_marked && has_foreign_marked(dt)) {
    return FilterRule::DropIfForeignMarked;
  }
  for (const Cell& c : dt.cells) {
    if (!spec.allowed_base_classes[static_cast<std::size_t>(c.cls)]) {
      return FilterRule::AllowedBaseClasses;
    }
  }
  if (dt.word_spans.size() < spec.min_words) return FilterRule::MinWords;
  return std::nullopt;
}

FilterOutcome filter_corpus(std::vector<CorpusExample> examples, const FilterSpec& spec) {
  spec.validate();
  FilterOutcome out;
  for (auto& ex : examples) {
    if (auto rule = first_violation(ex, spec)) {
      out.rejected.emplace_back(std::move(ex), *rule);
    } else {
      out.kept.push_back(std::move(ex));
    }
  }
  return out;
}

void CorpusStats::add(const CorpusExample& ex) {
  ++examples;
  words += ex.parse.word_spans.size();
  for (const Cell& c : ex.parse.cells) {
    if (c.cls == BaseClass::Whitespace) continue;
    label_counts[static_cast<std::size_t>(c.label.class_id())]++;
    if (c.cls == BaseClass::ArabicLetter) {
      ++arabic_letter_cells;
      if (!c.label.none()) ++labeled_arabic_letter_cells;
    }
  }
}

void CorpusStats::merge(const CorpusStats& other) {
  examples += other.examples;
  words += other.words;
  arabic_letter_cells += other.arabic_letter_cells;
  labeled_arabic_letter_cells += other.labeled_arabic_letter_cells;
  for (std::size_t i = 0; i < label_counts.size(); ++i) label_counts[i] += other.label_counts[i];
}

double CorpusStats::diacritic_coverage_percent() const {
  if (arabic_letter_cells == 0) return 0.0;
  return 100.0 * static_cast<double>(labeled_arabic_letter_cells) /
         static_cast<double>(arabic_letter_cells);
}

std::string CorpusStats::to_json() const {
  ordered_json j;
  j["examples"] = examples;
  j["words"] = words;
  j["diacritic_coverage"] = diacritic_coverage_percent();
  j["arabic_letter_cells"] = arabic_letter_cells;
  ordered_json labels;
  for (int i = 0; i < Label::kClassCount; ++i) {
    labels[std::string(Label::from_class_id(i)->name())] = label_counts[i];
  }
  j["per_label"] = labels;
  return j.dump(2);
}

CorpusStats corpus_stats(const std::vector<CorpusExample>& examples) {
  CorpusStats stats;
  for (const auto& ex : examples) stats.add(ex);
  return stats;
}

SplitResult split_corpus(std::size_t count, SplitFractions fractions, std::uint64_t seed) {
  double sum = fractions.train + fractions.dev + fractions.test;
  if (std::abs(sum - 1.0) > 1e-9 || fractions.train < 0 || fractions.dev < 0 ||
      fractions.test < 0) {
    throw InvalidFractions("split fractions must be non-negative and sum to 1");
  }

  std::vector<std::size_t> ids(count);
  for (std::size_t i = 0; i < count; ++i) ids[i] = i;

  std::uint64_t state = seed;
  for (std::size_t i = count; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(splitmix64(state) % i);
    std::swap(ids[i - 1], ids[j]);
  }

  std::size_t dev_n = static_cast<std::size_t>(std::floor(fractions.dev * count));
  std::size_t test_n = static_cast<std::size_t>(std::floor(fractions.test * count));
  std::size_t train_n = count - dev_n - test_n;

  SplitResult result;
  result.train.assign(ids.begin(), ids.begin() + train_n);
  result.dev.assign(ids.begin() + train_n, ids.begin() + train_n + dev_n);
  result.test.assign(ids.begin() + train_n + dev_n, ids.end());
  std::sort(result.train.begin(), result.train.end());
  std::sort(result.dev.begin(), result.dev.end());
  std::sort(result.test.begin(), result.test.end());
  return result;
}

}  // namespace tashkeel
