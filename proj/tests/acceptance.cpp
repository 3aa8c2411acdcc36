// Acceptance suite: every release-gating property in one binary, one
// PASS/FAIL line per criterion. Run via ctest or directly; exits nonzero
// if any criterion fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tashkeel/baseline.hpp"
#include "tashkeel/corpus.hpp"
#include "tashkeel/errors.hpp"
#include "tashkeel/metrics.hpp"
#include "tashkeel/seqformat.hpp"
#include "tashkeel/text.hpp"
#include "testutil.hpp"

using namespace tashkeel;

namespace {

int g_failures = 0;

void run(const std::string& name, const std::function<std::string()>& body) {
  std::string detail;
  bool ok = false;
  try {
    detail = body();
    ok = true;
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (ok) {
    std::cout << "PASS  " << name << (detail.empty() ? "" : " — " + detail) << "\n";
  } else {
    std::cout << "FAIL  " << name << " — " << detail << "\n";
    ++g_failures;
  }
}

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw CheckFailure(what);
}

std::string u32(std::u32string_view cps) { return uni::encode_utf8(cps); }

// --- criterion 1 -----------------------------------------------------

std::string metric_oracle_equivalence() {
  auto start = std::chrono::steady_clock::now();
  testutil::Rng rng(10001);
  for (int iter = 0; iter < 1000; ++iter) {
    DiacritizedText gold = testutil::random_text(rng, 6);
    while (gold.cells.size() > 40) gold = testutil::random_text(rng, 4);
    // mutations of gold plus a share of unrelated hypotheses
    DiacritizedText pred = iter % 5 == 4
                               ? testutil::random_text(rng, 6)
                               : testutil::mutate_text(gold, rng, 0.25, 0.08, 0.06, 0.06);

    EvalConfig cfg;
    cfg.include_numbers = rng.chance(0.5);
    cfg.include_punct = rng.chance(0.5);
    cfg.include_space = rng.chance(0.5);
    cfg.include_last = rng.chance(0.5);
    cfg.include_unlabeled = rng.chance(0.5);

    MetricsReport got = compute_metrics(gold, pred, cfg);
    oracles::Score expected = oracles::score_pair(gold, pred, cfg);
    expect(got.counts.evaluated_cells == expected.cells, "evaluated_cells mismatch");
    expect(got.counts.wrong_cells == expected.wrong, "wrong_cells mismatch");
    expect(got.counts.evaluated_words == expected.words, "evaluated_words mismatch");
    expect(got.counts.wrong_words == expected.wrong_words, "wrong_words mismatch");
    expect(got.der == expected.der(), "der mismatch");
    expect(got.wer == expected.wer(), "wer mismatch");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect(secs < 5.0, "runtime over 5s");
  std::ostringstream msg;
  msg << "1000 random pairs identical to the brute-force scorer in " << secs << "s";
  return msg.str();
}

// --- criterion 2 -----------------------------------------------------

std::string round_trip_suite() {
  testutil::Rng rng(10002);
  for (int iter = 0; iter < 10000; ++iter) {
    DiacritizedText dt = testutil::random_text(rng, 8);
    std::string original = render_cells(dt);
    std::string normalized = normalize_text(original);
    expect(normalized == original, "generator output not canonical");

    StripResult stripped = strip_diacritics(normalized);
    DiacritizedText rebuilt = cells_from_strip(stripped.text, stripped.labels);
    expect(render_cells(rebuilt) == normalized, "strip/re-insert failed to reproduce input");
  }
  return "10000 strip/re-insert round trips, 100% identical";
}

// --- criterion 3 -----------------------------------------------------

// One line with a planted error in every stratum. Gold labels in
// parentheses, hypothesis errors marked:
//   word1  ba(F->D!) ta(D) tha(K->F! last)
//   word2  3(none->F!) 7(none, last)       digits
//   word3  jim(F) ha(none->D!) kha(S last)
//   word4  comma(none->K! last)            punctuation
//   word5  dal(F) ra(FF last)
DiacritizedText protocol_gold_line() {
  std::vector<Cell> cells;
  auto letter = [&](char32_t b, Label l) { cells.push_back({b, l, classify_base(b)}); };
  auto space = [&] { cells.push_back({U' ', Label(), BaseClass::Whitespace}); };
  letter(0x0628, Label::single(Mark::Fatha));
  letter(0x062A, Label::single(Mark::Damma));
  letter(0x062B, Label::single(Mark::Kasra));
  space();
  letter(0x0663, Label());  // Arabic-Indic three
  letter(U'7', Label());
  space();
  letter(0x062C, Label::single(Mark::Fatha));
  letter(0x062D, Label());
  letter(0x062E, Label::single(Mark::Sukun));
  space();
  letter(0x060C, Label());  // Arabic comma
  space();
  letter(0x062F, Label::single(Mark::Fatha));
  letter(0x0631, Label::single(Mark::Fathatan));
  return DiacritizedText::from_cells(cells);
}

DiacritizedText protocol_hyp_line() {
  DiacritizedText dt = protocol_gold_line();
  dt.cells[0].label = Label::single(Mark::Damma);   // letter error
  dt.cells[2].label = Label::single(Mark::Fatha);   // last-of-word error
  dt.cells[4].label = Label::single(Mark::Fatha);   // digit error
  dt.cells[8].label = Label::single(Mark::Damma);   // unlabeled-cell error
  dt.cells[11].label = Label::single(Mark::Kasra);  // punctuation error
  return dt;
}

std::string protocol_fidelity() {
  constexpr int kLines = 20;
  std::string gold_line = render_cells(protocol_gold_line());
  std::string hyp_line = render_cells(protocol_hyp_line());

  testutil::TempDir tmp("acceptance_protocol");
  std::vector<std::string> ref(kLines, gold_line), hyp(kLines, hyp_line);
  testutil::write_lines(tmp.path("ref.txt"), ref);
  testutil::write_lines(tmp.path("hyp.txt"), hyp);

  struct Expected {
    const char* preset;
    std::uint64_t cells, wrong, words, wrong_words;
  };
  // hand counts per line: 15 cells total; 8 letters, 2 digits, 1
  // punctuation, 4 spaces; 5 planted errors
  const Expected table[] = {
      {"fadel-compat", 12, 3, 3, 2},    // digits and punctuation out
      {"abandah-compat", 14, 4, 4, 3},  // punctuation out
      {"madhfar-compat", 15, 5, 5, 4},  // everything in
  };
  for (const Expected& e : table) {
    MetricsReport r =
        evaluate_files(tmp.path("ref.txt"), tmp.path("hyp.txt"), *EvalConfig::preset(e.preset));
    expect(r.counts.evaluated_cells == e.cells * kLines, std::string(e.preset) + ": cells");
    expect(r.counts.wrong_cells == e.wrong * kLines, std::string(e.preset) + ": wrong");
    expect(r.counts.evaluated_words == e.words * kLines, std::string(e.preset) + ": words");
    expect(r.counts.wrong_words == e.wrong_words * kLines,
           std::string(e.preset) + ": wrong words");
    double der = 100.0 * static_cast<double>(e.wrong * kLines) /
                 static_cast<double>(e.cells * kLines);
    double wer = 100.0 * static_cast<double>(e.wrong_words * kLines) /
                 static_cast<double>(e.words * kLines);
    expect(r.der == der, std::string(e.preset) + ": der");
    expect(r.wer == wer, std::string(e.preset) + ": wer");
  }

  // flipping one flag moves exactly the planted strata counts
  struct Flip {
    const char* name;
    EvalConfig cfg;
    std::uint64_t cells, wrong;
  };
  EvalConfig all = EvalConfig::all_include();
  Flip flips[] = {
      {"no numbers", all, 13, 4},
      {"no punct", all, 14, 4},
      {"no space", all, 11, 5},
      {"no last", all, 10, 3},
      {"no unlabeled", all, 7, 2},
  };
  flips[0].cfg.include_numbers = false;
  flips[1].cfg.include_punct = false;
  flips[2].cfg.include_space = false;
  flips[3].cfg.include_last = false;
  flips[4].cfg.include_unlabeled = false;
  for (const Flip& f : flips) {
    MetricsReport r = evaluate_files(tmp.path("ref.txt"), tmp.path("hyp.txt"), f.cfg);
    expect(r.counts.evaluated_cells == f.cells * kLines, std::string(f.name) + ": cells");
    expect(r.counts.wrong_cells == f.wrong * kLines, std::string(f.name) + ": wrong");
  }
  return "3 presets and 5 single-flag flips match hand counts exactly";
}

// --- criterion 4 -----------------------------------------------------

std::string sentinel_contract() {
  testutil::Rng rng(10004);
  for (int iter = 0; iter < 1000; ++iter) {
    std::string diac = render_cells(testutil::random_text(rng, 6));
    std::string undiac = strip_diacritics(diac).text;
    std::string sentinel = to_sentinel_target(diac);
    auto restored = from_sentinel_prediction(sentinel, undiac);
    expect(restored.has_value(), "round trip reported LengthMismatch");
    expect(*restored == diac, "round trip changed the text");

    // drop one sentinel: must be a LengthMismatch, scored all-wrong
    std::size_t cut = sentinel.find('_');
    std::string damaged = sentinel.substr(0, cut) + sentinel.substr(cut + 1);
    expect(!from_sentinel_prediction(damaged, undiac).has_value(),
           "length mismatch not detected");
  }

  // an unscorable line counts every included gold cell as wrong
  DiacritizedText gold = parse_cells(normalize_text(render_cells(testutil::random_text(rng, 4)))).text;
  MetricsCounts counts;
  counts.add_unscorable(gold, EvalConfig::all_include());
  expect(counts.unscorable_examples == 1, "unscorable not counted");
  expect(counts.evaluated_cells == gold.cells.size(), "unscorable cells not all evaluated");
  expect(counts.wrong_cells == gold.cells.size(), "unscorable cells not all wrong");
  return "1000 sentinel round trips; mismatches detected and scored all-wrong";
}

// --- criterion 5 -----------------------------------------------------

std::string packing_contract() {
  for (std::size_t n : {std::size_t{16}, std::size_t{64}, std::size_t{512}}) {
    testutil::Rng rng(10005 + n);
    std::vector<ByteRecord> records;
    for (int i = 0; i < 200; ++i) {
      std::string diac = render_cells(testutil::random_text(rng, 1 + rng.below(10)));
      records.push_back(encode_record(strip_diacritics(diac).text, diac));
    }
    PackingConfig cfg;
    cfg.max_len_bytes = n;
    std::vector<ByteRecord> packed = pack_and_truncate(records, cfg);
    for (const ByteRecord& rec : packed) {
      expect(rec.input.size() <= n && rec.target.size() <= n, "byte budget exceeded");
      expect(decode_prediction(rec.target).replacements == 0, "target not valid UTF-8");
      expect(decode_prediction(rec.input).replacements == 0, "input not valid UTF-8");
      for (std::size_t s = 0; s < rec.segment_boundaries.size(); ++s) {
        auto [i0, t0] = rec.segment_boundaries[s];
        std::size_t i1 = s + 1 < rec.segment_boundaries.size()
                             ? rec.segment_boundaries[s + 1].first
                             : rec.input.size();
        std::size_t t1 = s + 1 < rec.segment_boundaries.size()
                             ? rec.segment_boundaries[s + 1].second
                             : rec.target.size();
        expect(strip_diacritics(rec.target.substr(t0, t1 - t0)).text ==
                   rec.input.substr(i0, i1 - i0),
               "segment strip property violated");
      }
    }

    // truncation alone: cell-boundary prefix of the original. Sixty-word
    // lines run to roughly 850 target bytes, over budget for every N.
    std::size_t truncated = 0;
    for (int i = 0; i < 50; ++i) {
      std::vector<Cell> cells;
      for (int w = 0; w < 60; ++w) {
        if (w > 0) cells.push_back({U' ', Label(), BaseClass::Whitespace});
        auto word = testutil::random_word_cells(rng, 1 + rng.below(6));
        cells.insert(cells.end(), word.begin(), word.end());
      }
      std::string diac = render_cells(DiacritizedText::from_cells(std::move(cells)));
      ByteRecord rec = encode_record(strip_diacritics(diac).text, diac);
      expect(rec.input.size() > n || rec.target.size() > n, "record unexpectedly fits");
      std::vector<ByteRecord> out = pack_and_truncate({rec}, cfg);
      expect(out.size() <= 1, "truncation produced extra records");
      if (out.empty()) continue;  // nothing fit
      ++truncated;
      expect(out[0].input.size() <= n && out[0].target.size() <= n,
             "truncated record over budget");
      expect(rec.input.substr(0, out[0].input.size()) == out[0].input,
             "truncated input is not a prefix");
      expect(rec.target.substr(0, out[0].target.size()) == out[0].target,
             "truncated target is not a prefix");
      expect(strip_diacritics(out[0].target).text == out[0].input,
             "truncated record lost strip consistency");
    }
    expect(truncated > 0, "truncation path never exercised");
  }
  return "byte budgets, segment strip property, and prefix truncation hold for N in {16, 64, 512}";
}

// --- criterion 6 -----------------------------------------------------

std::string power_law_recovery() {
  // noiseless: exact recovery
  std::vector<LabelFrequencyError> clean;
  for (int i = 0; i < 10; ++i) {
    std::uint64_t freq = 20ull << (2 * i);
    clean.push_back({i, freq, 0.35 * std::pow(static_cast<double>(freq), -0.85)});
  }
  FitOutcome noiseless = frequency_error_fit(clean);
  expect(noiseless.fit.has_value(), "noiseless fit unavailable");
  expect(std::abs(noiseless.fit->exponent - (-0.85)) < 1e-9, "noiseless exponent off");
  expect(std::abs(noiseless.fit->r_squared - 1.0) < 1e-9, "noiseless r^2 off");

  // sigma = 0.05 log-noise over 100 seeds
  for (int seed = 0; seed < 100; ++seed) {
    testutil::Rng rng(20000 + seed);
    std::vector<LabelFrequencyError> noisy;
    for (int i = 0; i < 14; ++i) {
      double freq = std::pow(10.0, 1.0 + 0.35 * i);
      double err = 0.6 * std::pow(freq, -0.7) * std::exp(0.05 * rng.gauss());
      noisy.push_back({i, static_cast<std::uint64_t>(freq), err});
    }
    FitOutcome out = frequency_error_fit(noisy);
    expect(out.fit.has_value(), "noisy fit unavailable");
    expect(std::abs(out.fit->exponent - (-0.7)) < 0.05, "noisy exponent outside 0.05");
  }
  return "exact noiseless recovery; 100/100 noisy fits within 0.05";
}

// --- criterion 7 -----------------------------------------------------

std::string constant_fatha(const std::string& undiac) {
  std::u32string out;
  for (char32_t cp : uni::decode_utf8_lossy(undiac)) {
    out.push_back(cp);
    if (!uni::is_whitespace(cp)) out.push_back(static_cast<char32_t>(Mark::Fatha));
  }
  return uni::encode_utf8(out);
}

std::string baseline_end_to_end() {
  testutil::Rng rng(10007);
  // 200 frequent words plus a long tail, so rare words exist whose only
  // training occurrences may be corrupted.
  testutil::SynthVocab vocab = testutil::SynthVocab::make(rng, 3200);
  auto sample_line = [&](testutil::Rng& r) {
    std::size_t words = 4 + r.below(6);
    std::string line;
    for (std::size_t w = 0; w < words; ++w) {
      if (w > 0) line += ' ';
      std::size_t id;
      if (r.chance(0.85)) {
        double u = r.uniform();
        id = static_cast<std::size_t>(u * u * 200.0);
      } else {
        id = 200 + r.below(3000);
      }
      line += vocab.diac[id];
    }
    return line;
  };

  std::vector<std::string> stage1_lines, stage2_lines, dev_lines;
  for (int i = 0; i < 5000; ++i) {
    std::string line = sample_line(rng);
    if (i % 5 < 2) {  // 40% of lines lost their diacritics entirely
      stage1_lines.push_back(strip_diacritics(normalize_text(line)).text);
    } else {
      stage1_lines.push_back(line);
      if (stage2_lines.size() < 1500) stage2_lines.push_back(line);
    }
  }
  for (int i = 0; i < 400; ++i) dev_lines.push_back(sample_line(rng));

  auto corpus_of = [](const std::vector<std::string>& lines) {
    std::vector<CorpusExample> out;
    for (std::size_t i = 0; i < lines.size(); ++i) out.push_back(make_example(i, lines[i]));
    return out;
  };
  std::vector<CorpusExample> stage1 = corpus_of(stage1_lines);
  std::vector<CorpusExample> stage2 = corpus_of(stage2_lines);

  BaselineModel stage1_only = BaselineModel::train(stage1);
  BaselineModel curriculum = BaselineModel::train(stage1, &stage2);

  EvalConfig cfg = EvalConfig::all_include();
  MetricsCounts m1, m2, fatha, none;
  for (const std::string& line : dev_lines) {
    DiacritizedText gold = parse_cells(normalize_text(line)).text;
    std::string undiac = strip_diacritics(normalize_text(line)).text;
    auto score = [&](MetricsCounts& counts, const std::string& hyp) {
      counts.add_pair(gold, parse_cells(normalize_text(hyp)).text, cfg);
    };
    score(m1, stage1_only.predict(undiac));
    score(m2, curriculum.predict(undiac));
    score(fatha, constant_fatha(undiac));
    score(none, undiac);
  }

  std::ostringstream msg;
  msg << "dev DER: baseline " << m1.der() << ", curriculum " << m2.der() << ", constant-Fatha "
      << fatha.der() << ", constant-none " << none.der();
  expect(m1.der() < fatha.der(), "baseline not better than constant-Fatha: " + msg.str());
  expect(m1.der() < none.der(), "baseline not better than constant-none: " + msg.str());
  expect(m2.der() < fatha.der(), "curriculum not better than constant-Fatha: " + msg.str());
  expect(m2.der() < none.der(), "curriculum not better than constant-none: " + msg.str());
  expect(m2.der() <= m1.der(), "curriculum regressed: " + msg.str());
  return msg.str();
}

// --- criterion 8 -----------------------------------------------------

std::string tashkeela_stats() {
  const char* path = std::getenv("TASHKEELA_TRAIN");
  if (path == nullptr || std::string(path).empty()) {
    return "SKIP (set TASHKEELA_TRAIN to the real train split to enable)";
  }
  CorpusReader reader(path);
  CorpusStats stats;
  while (auto ex = reader.next()) stats.add(*ex);

  double coverage = stats.diacritic_coverage_percent();
  double words = static_cast<double>(stats.words);
  std::ostringstream msg;
  msg << "coverage " << coverage << "% (expect 78.0 +/- 2% rel), words " << words
      << " (expect 75.7e6 +/- 1%)";
  expect(std::abs(coverage - 78.0) / 78.0 <= 0.02, msg.str());
  expect(std::abs(words - 75.7e6) / 75.7e6 <= 0.01, msg.str());
  return msg.str();
}

}  // namespace

int main() {
  run("criterion 1: metric-oracle equivalence", metric_oracle_equivalence);
  run("criterion 2: strip/re-insert round-trip suite", round_trip_suite);
  run("criterion 3: evaluation protocol fidelity", protocol_fidelity);
  run("criterion 4: sentinel contract", sentinel_contract);
  run("criterion 5: packing contract", packing_contract);
  run("criterion 6: power-law fit recovery", power_law_recovery);
  run("criterion 7: baseline end-to-end", baseline_end_to_end);
  run("criterion 8: Tashkeela corpus statistics", tashkeela_stats);

  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
