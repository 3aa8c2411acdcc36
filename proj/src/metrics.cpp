#include "tashkeel/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tashkeel/errors.hpp"
#include "tashkeel/seqformat.hpp"

namespace tashkeel {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<bool> last_of_word_flags(const DiacritizedText& dt) {
  std::vector<bool> last(dt.cells.size(), false);
  for (auto [start, end] : dt.word_spans) last[end - 1] = true;
  return last;
}

std::vector<bool> inclusion_flags(const DiacritizedText& dt, const EvalConfig& cfg) {
  std::vector<bool> last = last_of_word_flags(dt);
  std::vector<bool> included(dt.cells.size());
  for (std::size_t i = 0; i < dt.cells.size(); ++i) {
    included[i] = cell_included(dt.cells[i], last[i], cfg);
  }
  return included;
}

}  // namespace

EvalConfig EvalConfig::all_include() { return EvalConfig{}; }

EvalConfig EvalConfig::fadel_compat() {
  EvalConfig c;
  c.include_numbers = false;
  c.include_punct = false;
  return c;
}

EvalConfig EvalConfig::abandah_compat() {
  EvalConfig c;
  c.include_punct = false;
  return c;
}

EvalConfig EvalConfig::madhfar_compat() { return EvalConfig{}; }

std::optional<EvalConfig> EvalConfig::preset(std::string_view name) {
  if (name == "all-include") return all_include();
  if (name == "fadel-compat") return fadel_compat();
  if (name == "abandah-compat") return abandah_compat();
  if (name == "madhfar-compat") return madhfar_compat();
  return std::nullopt;
}

EvalConfig EvalConfig::from_json_text(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("eval config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("eval config must be a JSON object");
  static constexpr const char* kKeys[] = {
      "include_numbers", "include_punct", "include_space", "include_last", "include_unlabeled",
  };
  for (const auto& [key, _] : j.items()) {
    if (std::find_if(std::begin(kKeys), std::end(kKeys),
                     [&](const char* k) { return key == k; }) == std::end(kKeys)) {
      throw ConfigError("unknown eval config key: " + key);
    }
  }
  EvalConfig c;
  try {
    if (j.contains("include_numbers")) c.include_numbers = j["include_numbers"].get<bool>();
    if (j.contains("include_punct")) c.include_punct = j["include_punct"].get<bool>();
    if (j.contains("include_space")) c.include_space = j["include_space"].get<bool>();
    if (j.contains("include_last")) c.include_last = j["include_last"].get<bool>();
    if (j.contains("include_unlabeled")) c.include_unlabeled = j["include_unlabeled"].get<bool>();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad eval config value: ") + e.what());
  }
  return c;
}

EvalConfig EvalConfig::from_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open eval config: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json_text(text);
}

bool cell_included(const Cell& cell, bool is_last_of_word, const EvalConfig& cfg) {
  switch (cell.cls) {
    case BaseClass::Digit:
      if (!cfg.include_numbers) return false;
      break;
    case BaseClass::Punctuation:
    case BaseClass::Other:  // follows the punctuation flag
      if (!cfg.include_punct) return false;
      break;
    case BaseClass::Whitespace:
      if (!cfg.include_space) return false;
      break;
    case BaseClass::ArabicLetter:
      break;
  }
  if (is_last_of_word && !cfg.include_last) return false;
  if (cell.label.none() && !cfg.include_unlabeled) return false;
  return true;
}

void MetricsCounts::add_pair(const DiacritizedText& gold, const DiacritizedText& predicted,
                             const EvalConfig& cfg) {
  CellAlignment alignment = align_cells(gold, predicted);
  std::vector<bool> included = inclusion_flags(gold, cfg);
  std::vector<bool> wrong(gold.cells.size(), false);

  for (auto [gi, pi] : alignment.pairs) {
    if (gi == kGap) {
      ++predicted_only_cells;
      continue;
    }
    if (!included[gi]) continue;
    int g = gold.cells[gi].label.class_id();
    ++evaluated_cells;
    ++gold_count[g];
    if (pi == kGap) {
      ++confusion_gap[g];
      ++wrong_cells;
      ++error_count[g];
      wrong[gi] = true;
    } else {
      int p = predicted.cells[pi].label.class_id();
      ++confusion[g][p];
      if (p != g) {
        ++wrong_cells;
        ++error_count[g];
        wrong[gi] = true;
      }
    }
  }

  for (auto [start, end] : gold.word_spans) {
    bool any_included = false, any_wrong = false;
    for (std::size_t i = start; i < end; ++i) {
      any_included = any_included || included[i];
      any_wrong = any_wrong || wrong[i];
    }
    if (!any_included) continue;
    ++evaluated_words;
    if (any_wrong) ++wrong_words;
  }
}

void MetricsCounts::add_unscorable(const DiacritizedText& gold, const EvalConfig& cfg) {
  std::vector<bool> included = inclusion_flags(gold, cfg);
  for (std::size_t i = 0; i < gold.cells.size(); ++i) {
    if (!included[i]) continue;
    int g = gold.cells[i].label.class_id();
    ++evaluated_cells;
    ++wrong_cells;
    ++gold_count[g];
    ++error_count[g];
    ++confusion_gap[g];
  }
  for (auto [start, end] : gold.word_spans) {
    bool any_included = false;
    for (std::size_t i = start; i < end; ++i) any_included = any_included || included[i];
    if (!any_included) continue;
    ++evaluated_words;
    ++wrong_words;
  }
  ++unscorable_examples;
}

void MetricsCounts::merge(const MetricsCounts& other) {
  evaluated_cells += other.evaluated_cells;
  wrong_cells += other.wrong_cells;
  evaluated_words += other.evaluated_words;
  wrong_words += other.wrong_words;
  predicted_only_cells += other.predicted_only_cells;
  unscorable_examples += other.unscorable_examples;
  for (int i = 0; i < Label::kClassCount; ++i) {
    confusion_gap[i] += other.confusion_gap[i];
    gold_count[i] += other.gold_count[i];
    error_count[i] += other.error_count[i];
    for (int j = 0; j < Label::kClassCount; ++j) confusion[i][j] += other.confusion[i][j];
  }
}

double MetricsCounts::der() const {
  if (evaluated_cells == 0) return 0.0;
  return 100.0 * static_cast<double>(wrong_cells) / static_cast<double>(evaluated_cells);
}

double MetricsCounts::wer() const {
  if (evaluated_words == 0) return 0.0;
  return 100.0 * static_cast<double>(wrong_words) / static_cast<double>(evaluated_words);
}

MetricsReport MetricsReport::from_counts(const MetricsCounts& counts) {
  MetricsReport r;
  r.counts = counts;
  r.der = counts.der();
  r.wer = counts.wer();
  for (int i = 0; i < Label::kClassCount; ++i) {
    std::uint64_t row = 0;
    for (int j = 0; j < Label::kClassCount; ++j) row += counts.confusion[i][j];
    if (row > 0) {
      for (int j = 0; j < Label::kClassCount; ++j) {
        r.confusion[i][j] =
            static_cast<double>(counts.confusion[i][j]) / static_cast<double>(row);
      }
    }
    std::uint64_t with_gap = row + counts.confusion_gap[i];
    r.confusion_mismatch[i] =
        with_gap > 0 ? static_cast<double>(counts.confusion_gap[i]) / static_cast<double>(with_gap)
                     : 0.0;
  }
  return r;
}

std::string MetricsReport::to_json() const {
  ordered_json j;
  j["der"] = der;
  j["wer"] = wer;
  j["evaluated_cells"] = counts.evaluated_cells;
  j["evaluated_words"] = counts.evaluated_words;
  j["wrong_cells"] = counts.wrong_cells;
  j["wrong_words"] = counts.wrong_words;
  j["predicted_only_cells"] = counts.predicted_only_cells;
  j["unscorable_examples"] = counts.unscorable_examples;
  ordered_json conf = ordered_json::array();
  for (int i = 0; i < Label::kClassCount; ++i) {
    ordered_json row = ordered_json::array();
    for (int jj = 0; jj < Label::kClassCount; ++jj) row.push_back(confusion[i][jj]);
    conf.push_back(row);
  }
  j["confusion"] = conf;
  ordered_json mismatch = ordered_json::array();
  for (int i = 0; i < Label::kClassCount; ++i) mismatch.push_back(confusion_mismatch[i]);
  j["confusion_mismatch"] = mismatch;
  ordered_json per_label;
  for (int i = 0; i < Label::kClassCount; ++i) {
    ordered_json entry;
    entry["gold"] = counts.gold_count[i];
    entry["errors"] = counts.error_count[i];
    per_label[std::string(Label::from_class_id(i)->name())] = entry;
  }
  j["per_label"] = per_label;
  return j.dump(2);
}

std::string MetricsReport::confusion_tsv() const {
  std::ostringstream out;
  out << "gold\\predicted";
  for (int j = 0; j < Label::kClassCount; ++j) {
    out << '\t' << Label::from_class_id(j)->name();
  }
  out << "\tMismatch\n";
  out.precision(6);
  out << std::fixed;
  for (int i = 0; i < Label::kClassCount; ++i) {
    out << Label::from_class_id(i)->name();
    for (int j = 0; j < Label::kClassCount; ++j) out << '\t' << confusion[i][j];
    out << '\t' << confusion_mismatch[i] << '\n';
  }
  return out.str();
}

MetricsReport compute_metrics(const DiacritizedText& gold, const DiacritizedText& predicted,
                              const EvalConfig& cfg) {
  MetricsCounts counts;
  counts.add_pair(gold, predicted, cfg);
  return MetricsReport::from_counts(counts);
}

MetricsReport evaluate_files(const std::string& ref_path, const std::string& hyp_path,
                             const EvalConfig& cfg, bool sentinel_hyp) {
  std::ifstream ref(ref_path, std::ios::binary);
  if (!ref) throw IoError("cannot open reference file: " + ref_path);
  std::ifstream hyp(hyp_path, std::ios::binary);
  if (!hyp) throw IoError("cannot open hypothesis file: " + hyp_path);

  MetricsCounts counts;
  std::string ref_line, hyp_line;
  while (true) {
    bool have_ref = static_cast<bool>(std::getline(ref, ref_line));
    bool have_hyp = static_cast<bool>(std::getline(hyp, hyp_line));
    if (have_ref != have_hyp) {
      throw LineCountMismatch("reference and hypothesis files have different line counts");
    }
    if (!have_ref) break;
    if (!ref_line.empty() && ref_line.back() == '\r') ref_line.pop_back();
    if (!hyp_line.empty() && hyp_line.back() == '\r') hyp_line.pop_back();

    DiacritizedText gold = parse_cells(normalize_text(ref_line)).text;

    if (sentinel_hyp) {
      std::string stripped;
      for (const Cell& c : gold.cells) uni::append_utf8(stripped, c.base);
      DecodeResult decoded = decode_prediction(hyp_line);
      std::optional<std::string> restored = from_sentinel_prediction(decoded.text, stripped);
      if (!restored) {
        counts.add_unscorable(gold, cfg);
        continue;
      }
      DiacritizedText predicted = parse_cells(normalize_text(*restored)).text;
      counts.add_pair(gold, predicted, cfg);
    } else {
      DecodeResult decoded = decode_prediction(hyp_line);
      DiacritizedText predicted = parse_cells(normalize_text(decoded.text)).text;
      counts.add_pair(gold, predicted, cfg);
    }
  }
  if (ref.bad() || hyp.bad()) throw IoError("read failure while scoring files");
  return MetricsReport::from_counts(counts);
}

std::vector<LabelFrequencyError> label_frequency_errors(const MetricsCounts& counts) {
  std::vector<LabelFrequencyError> out;
  for (int i = 0; i < Label::kClassCount; ++i) {
    LabelFrequencyError p;
    p.class_id = i;
    p.count = counts.gold_count[i];
    p.error_rate = p.count > 0 ? static_cast<double>(counts.error_count[i]) /
                                     static_cast<double>(p.count)
                               : 0.0;
    out.push_back(p);
  }
  return out;
}

FitOutcome frequency_error_fit(const std::vector<LabelFrequencyError>& points) {
  FitOutcome outcome;
  std::vector<std::pair<double, double>> usable;  // (log freq, log err)
  for (const auto& p : points) {
    if (p.count == 0 || p.error_rate <= 0.0) {
      outcome.excluded_class_ids.push_back(p.class_id);
      continue;
    }
    usable.emplace_back(std::log(static_cast<double>(p.count)), std::log(p.error_rate));
  }
  if (usable.size() < 3) return outcome;

  double n = static_cast<double>(usable.size());
  double sx = 0, sy = 0;
  for (auto [x, y] : usable) {
    sx += x;
    sy += y;
  }
  double mx = sx / n, my = sy / n;
  double sxx = 0, syy = 0, sxy = 0;
  for (auto [x, y] : usable) {
    sxx += (x - mx) * (x - mx);
    syy += (y - my) * (y - my);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0) return outcome;  // all frequencies equal; slope undefined

  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  fit.points_used = usable.size();
  outcome.fit = fit;
  return outcome;
}

}  // namespace tashkeel
