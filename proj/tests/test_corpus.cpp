#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tashkeel/corpus.hpp"
#include "tashkeel/errors.hpp"
#include "tashkeel/unicode.hpp"
#include "testutil.hpp"

using namespace tashkeel;

namespace {

std::string u32(std::u32string_view cps) { return uni::encode_utf8(cps); }

// Fully labeled two-word line used across the stats tests.
const std::string kTwoWords =
    u32(U"كَتَبَ وَلَدٌ");

}  // namespace

TEST_CASE("load: ids follow file order, blanks skipped") {
  testutil::TempDir tmp("corpus_load");
  testutil::write_lines(tmp.path("c.txt"), {kTwoWords, "", kTwoWords, "   ", kTwoWords});
  auto examples = load_corpus(tmp.path("c.txt"));
  REQUIRE(examples.size() == 3);
  CHECK(examples[0].id == 0);
  CHECK(examples[1].id == 1);
  CHECK(examples[2].id == 2);
}

TEST_CASE("load: empty file") {
  testutil::TempDir tmp("corpus_empty");
  testutil::write_lines(tmp.path("c.txt"), {});
  CHECK(load_corpus(tmp.path("c.txt")).empty());
}

TEST_CASE("load: missing file and invalid utf-8") {
  testutil::TempDir tmp("corpus_bad");
  CHECK_THROWS_AS(load_corpus(tmp.path("nope.txt")), IoError);

  std::ofstream out(tmp.path("bad.txt"), std::ios::binary);
  out << kTwoWords << "\n" << "ab\xFF" << "\n";
  out.close();
  try {
    load_corpus(tmp.path("bad.txt"));
    FAIL("expected Utf8Error");
  } catch (const Utf8Error& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("load: defect on line 2 is reported on example 1") {
  testutil::TempDir tmp("corpus_defect");
  testutil::write_lines(tmp.path("c.txt"),
                        {kTwoWords, u32(U"َبت"), kTwoWords});
  auto examples = load_corpus(tmp.path("c.txt"));
  REQUIRE(examples.size() == 3);
  CHECK(examples[0].report.clean());
  CHECK(examples[1].report.has(ParseIssue::LeadingMark));
  CHECK(examples[2].report.clean());
}

TEST_CASE("filter: permissive spec keeps everything") {
  testutil::Rng rng(11);
  std::vector<CorpusExample> examples;
  for (std::size_t i = 0; i < 50; ++i) {
    examples.push_back(make_example(i, render_cells(testutil::random_text(rng, 6))));
  }
  auto outcome = filter_corpus(examples, FilterSpec::permissive());
  CHECK(outcome.kept.size() == 50);
  CHECK(outcome.rejected.empty());
}

TEST_CASE("filter: coverage threshold") {
  // 100 letters, 59 labeled -> rejected at 0.80
  std::u32string line;
  for (int i = 0; i < 100; ++i) {
    line.push_back(0x0628);
    if (i < 59) line.push_back(0x064E);
  }
  auto ex = make_example(0, u32(line));
  FilterSpec spec = FilterSpec::permissive();
  spec.min_diacritic_coverage = 0.80;
  auto violation = first_violation(ex, spec);
  REQUIRE(violation.has_value());
  CHECK(*violation == FilterRule::MinDiacriticCoverage);
  CHECK(filter_rule_name(*violation) == "min_diacritic_coverage");

  // exactly at the threshold passes
  std::u32string ok;
  for (int i = 0; i < 10; ++i) {
    ok.push_back(0x0628);
    if (i < 8) ok.push_back(0x064E);
  }
  CHECK(!first_violation(make_example(0, u32(ok)), spec).has_value());
}

TEST_CASE("filter: clean-strict on a planted-defect corpus keeps exactly the clean lines") {
  testutil::Rng rng(42);
  testutil::SynthVocab vocab = testutil::SynthVocab::make(rng, 40);

  std::vector<std::string> lines;
  std::size_t planted = 0;
  for (int i = 0; i < 100; ++i) {
    std::string clean = vocab.sample_line(rng, 2, 5);
    if (i % 5 == 2 && planted < 20) {
      ++planted;
      switch (planted % 3) {
        case 0:  // overstacked marks
          lines.push_back(clean + u32(U"بَِ"));
          break;
        case 1:  // marked latin letter
          lines.push_back(clean + " x" + u32(U"َ"));
          break;
        default:  // low coverage: strip every mark
          lines.push_back(strip_diacritics(normalize_text(clean)).text);
          break;
      }
    } else {
      lines.push_back(clean);
    }
  }
  REQUIRE(planted == 20);

  testutil::TempDir tmp("filter_strict");
  testutil::write_lines(tmp.path("c.txt"), lines);
  auto outcome = filter_corpus(load_corpus(tmp.path("c.txt")), FilterSpec::clean_strict());
  CHECK(outcome.kept.size() == 80);
  CHECK(outcome.rejected.size() == 20);
}

TEST_CASE("filter: kept and rejected partition the input") {
  testutil::Rng rng(13);
  std::vector<CorpusExample> examples;
  for (std::size_t i = 0; i < 200; ++i) {
    std::string line = render_cells(testutil::random_text(rng, 5));
    if (rng.chance(0.3)) line = testutil::corrupt_labels(line, rng, 0.7);
    if (rng.chance(0.2)) line += u32(U"بَِ");
    examples.push_back(make_example(i, line));
  }
  FilterSpec spec = FilterSpec::clean_loose();
  spec.require_clean_parse = true;
  auto outcome = filter_corpus(examples, spec);
  CHECK(outcome.kept.size() + outcome.rejected.size() == 200);

  std::vector<std::size_t> ids;
  for (const auto& ex : outcome.kept) ids.push_back(ex.id);
  for (const auto& [ex, rule] : outcome.rejected) ids.push_back(ex.id);
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) CHECK(ids[i] == i);
}

TEST_CASE("filter config json") {
  FilterSpec spec = FilterSpec::from_json_text(R"({
    "min_diacritic_coverage": 0.5,
    "require_clean_parse": true,
    "max_cells": 100,
    "drop_if_foreign_marked": true,
    "allowed_base_classes": ["arabic-letter", "whitespace"],
    "min_words": 2
  })");
  CHECK(spec.min_diacritic_coverage == 0.5);
  CHECK(spec.require_clean_parse);
  CHECK(spec.max_cells == 100);
  CHECK(spec.allowed_base_classes[static_cast<std::size_t>(BaseClass::ArabicLetter)]);
  CHECK(!spec.allowed_base_classes[static_cast<std::size_t>(BaseClass::Digit)]);
  CHECK(spec.min_words == 2);

  CHECK_THROWS_AS(FilterSpec::from_json_text(R"({"bogus": 1})"), ConfigError);
  CHECK_THROWS_AS(FilterSpec::from_json_text(R"({"min_words": 1})"), ConfigError);
  CHECK_THROWS_AS(FilterSpec::from_json_text("not json"), ConfigError);

  // round trip through to_json
  FilterSpec again = FilterSpec::from_json_text(spec.to_json());
  CHECK(again.max_cells == spec.max_cells);
  CHECK(again.allowed_base_classes == spec.allowed_base_classes);
}

TEST_CASE("stats: hand-counted single line") {
  auto ex = make_example(0, kTwoWords);
  CorpusStats stats;
  stats.add(ex);
  CHECK(stats.examples == 1);
  CHECK(stats.words == 2);
  CHECK(stats.arabic_letter_cells == 6);
  CHECK(stats.labeled_arabic_letter_cells == 6);
  CHECK(stats.diacritic_coverage_percent() == 100.0);
  CHECK(stats.label_counts[Label::single(Mark::Fatha).class_id()] == 5);
  CHECK(stats.label_counts[Label::single(Mark::Dammatan).class_id()] == 1);
}

TEST_CASE("stats: empty corpus is all zeros") {
  CorpusStats stats = corpus_stats({});
  CHECK(stats.examples == 0);
  CHECK(stats.words == 0);
  CHECK(stats.diacritic_coverage_percent() == 0.0);
}

TEST_CASE("property: stats merge equals stats of concatenation") {
  testutil::Rng rng(31);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<CorpusExample> a, b, both;
    std::size_t na = rng.below(20), nb = rng.below(20);
    for (std::size_t i = 0; i < na; ++i) {
      a.push_back(make_example(i, render_cells(testutil::random_text(rng, 5))));
    }
    for (std::size_t i = 0; i < nb; ++i) {
      b.push_back(make_example(na + i, render_cells(testutil::random_text(rng, 5))));
    }
    both = a;
    both.insert(both.end(), b.begin(), b.end());

    CorpusStats merged = corpus_stats(a);
    merged.merge(corpus_stats(b));
    CorpusStats direct = corpus_stats(both);
    CHECK(merged.examples == direct.examples);
    CHECK(merged.words == direct.words);
    CHECK(merged.arabic_letter_cells == direct.arabic_letter_cells);
    CHECK(merged.labeled_arabic_letter_cells == direct.labeled_arabic_letter_cells);
    CHECK(merged.label_counts == direct.label_counts);
  }
}

TEST_CASE("split: sizes, determinism, seed sensitivity") {
  SplitResult r = split_corpus(100, {0.8, 0.1, 0.1}, 7);
  CHECK(r.train.size() == 80);
  CHECK(r.dev.size() == 10);
  CHECK(r.test.size() == 10);

  SplitResult again = split_corpus(100, {0.8, 0.1, 0.1}, 7);
  CHECK(r.train == again.train);
  CHECK(r.dev == again.dev);
  CHECK(r.test == again.test);

  SplitResult other = split_corpus(100, {0.8, 0.1, 0.1}, 8);
  CHECK(r.dev != other.dev);

  // disjoint union covers the input
  std::vector<std::size_t> all;
  for (auto* part : {&r.train, &r.dev, &r.test}) {
    all.insert(all.end(), part->begin(), part->end());
  }
  std::sort(all.begin(), all.end());
  REQUIRE(all.size() == 100);
  for (std::size_t i = 0; i < 100; ++i) CHECK(all[i] == i);
}

TEST_CASE("split: fraction validation and rounding remainder") {
  CHECK_THROWS_AS(split_corpus(10, {0.5, 0.2, 0.2}, 0), InvalidFractions);
  SplitResult r = split_corpus(7, {0.34, 0.33, 0.33}, 1);
  CHECK(r.dev.size() == 2);   // floor(7*0.33)
  CHECK(r.test.size() == 2);  // floor(7*0.33)
  CHECK(r.train.size() == 3);  // remainder
}
