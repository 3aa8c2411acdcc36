#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tashkeel/baseline.hpp"
#include "tashkeel/corpus.hpp"
#include "tashkeel/errors.hpp"
#include "tashkeel/metrics.hpp"
#include "tashkeel/seqformat.hpp"
#include "tashkeel/text.hpp"

namespace {

using namespace tashkeel;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;  // also IO failures
constexpr int kExitData = 2;   // data-contract violations

struct LineSource {
  std::ifstream file;
  std::istream* stream = nullptr;

  explicit LineSource(const std::string& path) {
    if (path == "-") {
      stream = &std::cin;
    } else {
      file.open(path, std::ios::binary);
      if (!file) throw IoError("cannot open input file: " + path);
      stream = &file;
    }
  }

  bool next(std::string& line) {
    if (!std::getline(*stream, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }
};

struct LineSink {
  std::ofstream file;
  std::ostream* stream = nullptr;

  explicit LineSink(const std::string& path) {
    if (path == "-") {
      stream = &std::cout;
    } else {
      file.open(path, std::ios::binary);
      if (!file) throw IoError("cannot open output file: " + path);
      stream = &file;
    }
  }

  void line(std::string_view s) { (*stream) << s << '\n'; }

  void done() {
    stream->flush();
    if (!*stream) throw IoError("write failure on output");
  }
};

// Shared eval-config flags for the eval and analyze commands.
struct EvalFlags {
  std::string preset;
  std::string config_path;
  EvalConfig flags;  // defaults: all included

  void attach(CLI::App* cmd) {
    cmd->add_option("--preset", preset,
                    "Named config: all-include, fadel-compat, abandah-compat, madhfar-compat");
    cmd->add_option("--config", config_path, "JSON eval config file");
    cmd->add_flag("--numbers,!--no-numbers", flags.include_numbers, "Score digit cells");
    cmd->add_flag("--punct,!--no-punct", flags.include_punct, "Score punctuation cells");
    cmd->add_flag("--space,!--no-space", flags.include_space, "Score whitespace cells");
    cmd->add_flag("--last,!--no-last", flags.include_last, "Score word-final cells");
    cmd->add_flag("--unlabeled,!--no-unlabeled", flags.include_unlabeled,
                  "Score cells whose gold label is NoDiacritic");
  }

  EvalConfig resolve() const {
    if (!preset.empty() && !config_path.empty()) {
      throw ConfigError("--preset and --config are mutually exclusive");
    }
    if (!preset.empty()) {
      auto cfg = EvalConfig::preset(preset);
      if (!cfg) throw ConfigError("unknown eval preset: " + preset);
      return *cfg;
    }
    if (!config_path.empty()) return EvalConfig::from_json_file(config_path);
    return flags;
  }
};

int cmd_normalize(const std::string& in, const std::string& out) {
  LineSource src(in);
  LineSink dst(out);
  std::string line;
  while (src.next(line)) dst.line(normalize_text(line));
  dst.done();
  return kExitOk;
}

int cmd_stats(const std::string& in, const std::string& out) {
  CorpusReader reader(in);
  CorpusStats stats;
  while (auto ex = reader.next()) stats.add(*ex);
  LineSink dst(out);
  dst.line(stats.to_json());
  dst.done();
  return kExitOk;
}

int cmd_strip(const std::string& in, const std::string& out) {
  LineSource src(in);
  LineSink dst(out);
  std::string line;
  while (src.next(line)) dst.line(strip_diacritics(normalize_text(line)).text);
  dst.done();
  return kExitOk;
}

int cmd_filter(const std::string& in, const std::string& preset, const std::string& config_path,
               const std::string& out, const std::string& rejected_path) {
  FilterSpec spec;
  if (!preset.empty() && !config_path.empty()) {
    throw ConfigError("--preset and --config are mutually exclusive");
  } else if (!preset.empty()) {
    auto p = FilterSpec::preset(preset);
    if (!p) throw ConfigError("unknown filter preset: " + preset);
    spec = *p;
  } else if (!config_path.empty()) {
    spec = FilterSpec::from_json_file(config_path);
  } else {
    throw ConfigError("filter requires --preset or --config");
  }
  spec.validate();

  CorpusReader reader(in);
  LineSink kept(out);
  std::unique_ptr<LineSink> rejected;
  if (!rejected_path.empty()) rejected = std::make_unique<LineSink>(rejected_path);

  std::size_t kept_n = 0, rejected_n = 0;
  while (auto ex = reader.next()) {
    if (auto rule = first_violation(*ex, spec)) {
      ++rejected_n;
      if (rejected) {
        std::ostringstream row;
        row << ex->id << '\t' << filter_rule_name(*rule) << '\t' << ex->text;
        rejected->line(row.str());
      }
    } else {
      ++kept_n;
      kept.line(ex->text);
    }
  }
  kept.done();
  if (rejected) rejected->done();
  std::cerr << "kept " << kept_n << ", rejected " << rejected_n << "\n";
  return kExitOk;
}

int cmd_split(const std::string& in, const std::string& fractions_arg, std::uint64_t seed,
              const std::string& out_train, const std::string& out_dev,
              const std::string& out_test) {
  SplitFractions fractions;
  {
    std::istringstream ss(fractions_arg);
    char c1, c2;
    if (!(ss >> fractions.train >> c1 >> fractions.dev >> c2 >> fractions.test) || c1 != ',' ||
        c2 != ',' || !ss.eof()) {
      throw ConfigError("--fractions expects train,dev,test (e.g. 0.8,0.1,0.1)");
    }
  }

  std::vector<CorpusExample> examples = load_corpus(in);
  SplitResult split = split_corpus(examples.size(), fractions, seed);

  auto dump = [&examples](const std::vector<std::size_t>& ids, const std::string& path) {
    LineSink sink(path);
    for (std::size_t id : ids) sink.line(examples[id].text);
    sink.done();
  };
  dump(split.train, out_train);
  dump(split.dev, out_dev);
  dump(split.test, out_test);
  std::cerr << "train " << split.train.size() << ", dev " << split.dev.size() << ", test "
            << split.test.size() << "\n";
  return kExitOk;
}

int cmd_encode(const std::string& in, const std::string& out, const std::string& format,
               bool sentinel) {
  LineSource src(in);
  std::vector<ByteRecord> records;
  std::string line;
  while (src.next(line)) {
    std::string diac = normalize_text(line);
    StripResult stripped = strip_diacritics(diac);
    ByteRecord rec = encode_record(stripped.text, diac);
    if (sentinel) rec.target = to_sentinel_target(diac);
    records.push_back(std::move(rec));
  }

  std::ofstream file;
  std::ostream* stream = &std::cout;
  if (out != "-") {
    file.open(out, std::ios::binary);
    if (!file) throw IoError("cannot open output file: " + out);
    stream = &file;
  }
  if (format == "binary") {
    write_records(*stream, records);
  } else if (format == "tsv") {
    write_records_tsv(*stream, records);
  } else {
    throw ConfigError("unknown record format: " + format);
  }
  stream->flush();
  if (!*stream) throw IoError("write failure on record output");
  return kExitOk;
}

int cmd_pack(const std::string& in, const std::string& out, std::size_t max_len,
             bool raw_truncate) {
  std::ifstream input(in, std::ios::binary);
  if (!input) throw IoError("cannot open record file: " + in);
  std::vector<ByteRecord> records = read_records(input);

  PackingConfig cfg;
  cfg.max_len_bytes = max_len;
  cfg.raw_truncate = raw_truncate;
  std::vector<ByteRecord> packed = pack_and_truncate(records, cfg);

  std::ofstream output(out, std::ios::binary);
  if (!output) throw IoError("cannot open output file: " + out);
  write_records(output, packed);
  output.flush();
  if (!output) throw IoError("write failure on record output");
  std::cerr << records.size() << " records -> " << packed.size() << " packed\n";
  return kExitOk;
}

int cmd_train(const std::string& stage1_path, const std::string& stage2_path,
              std::optional<double> lambda, const std::string& out) {
  std::vector<CorpusExample> stage1 = load_corpus(stage1_path);
  std::optional<std::vector<CorpusExample>> stage2;
  if (!stage2_path.empty()) stage2 = load_corpus(stage2_path);

  BaselineModel model =
      BaselineModel::train(stage1, stage2 ? &*stage2 : nullptr, lambda);
  model.save(out);
  std::cerr << "trained on " << model.stage1_cells() << " + " << model.stage2_cells()
            << " cells (lambda " << model.lambda() << "), " << model.word_table_size()
            << " dictionary entries\n";
  return kExitOk;
}

int cmd_predict(const std::string& model_path, const std::string& in, const std::string& out) {
  BaselineModel model = BaselineModel::load(model_path);
  LineSource src(in);
  LineSink dst(out);
  std::string line;
  while (src.next(line)) {
    std::string undiac = strip_diacritics(normalize_text(line)).text;
    dst.line(model.predict(undiac));
  }
  dst.done();
  return kExitOk;
}

int cmd_eval(const std::string& ref, const std::string& hyp, const EvalFlags& flags,
             bool sentinel, const std::string& out) {
  EvalConfig cfg = flags.resolve();
  MetricsReport report = evaluate_files(ref, hyp, cfg, sentinel);
  LineSink dst(out);
  dst.line(report.to_json());
  dst.done();
  std::cerr << "DER " << report.der << "  WER " << report.wer << "  ("
            << report.counts.evaluated_cells << " cells, " << report.counts.evaluated_words
            << " words)\n";
  return kExitOk;
}

int cmd_analyze(const std::string& ref_path, const std::string& hyp_path, const EvalFlags& flags,
                std::size_t worst, const std::string& out) {
  EvalConfig cfg = flags.resolve();

  std::ifstream ref(ref_path, std::ios::binary);
  if (!ref) throw IoError("cannot open reference file: " + ref_path);
  std::ifstream hyp(hyp_path, std::ios::binary);
  if (!hyp) throw IoError("cannot open hypothesis file: " + hyp_path);

  MetricsCounts total;
  struct LineScore {
    std::size_t line_no;
    double der;
    std::string text;
  };
  std::vector<LineScore> line_scores;

  std::string ref_line, hyp_line;
  std::size_t line_no = 0;
  while (true) {
    bool have_ref = static_cast<bool>(std::getline(ref, ref_line));
    bool have_hyp = static_cast<bool>(std::getline(hyp, hyp_line));
    if (have_ref != have_hyp) {
      throw LineCountMismatch("reference and hypothesis files have different line counts");
    }
    if (!have_ref) break;
    ++line_no;
    if (!ref_line.empty() && ref_line.back() == '\r') ref_line.pop_back();
    if (!hyp_line.empty() && hyp_line.back() == '\r') hyp_line.pop_back();

    DiacritizedText gold = parse_cells(normalize_text(ref_line)).text;
    DiacritizedText predicted =
        parse_cells(normalize_text(decode_prediction(hyp_line).text)).text;
    MetricsCounts counts;
    counts.add_pair(gold, predicted, cfg);
    total.merge(counts);
    line_scores.push_back({line_no, counts.der(), normalize_text(ref_line)});
  }

  MetricsReport report = MetricsReport::from_counts(total);
  LineSink dst(out);

  dst.line("== confusion ==");
  std::istringstream conf(report.confusion_tsv());
  std::string row;
  while (std::getline(conf, row)) dst.line(row);

  dst.line("== per-label ==");
  for (int i = 0; i < Label::kClassCount; ++i) {
    std::ostringstream line;
    double rate = total.gold_count[i] > 0 ? static_cast<double>(total.error_count[i]) /
                                                static_cast<double>(total.gold_count[i])
                                          : 0.0;
    line << Label::from_class_id(i)->name() << '\t' << total.gold_count[i] << '\t'
         << total.error_count[i] << '\t' << rate;
    dst.line(line.str());
  }

  dst.line("== power-law fit ==");
  FitOutcome fit = frequency_error_fit(label_frequency_errors(total));
  if (fit.fit) {
    std::ostringstream line;
    line << "exponent\t" << fit.fit->exponent << "\nintercept\t" << fit.fit->intercept
         << "\nr_squared\t" << fit.fit->r_squared << "\npoints_used\t" << fit.fit->points_used;
    dst.line(line.str());
  } else {
    dst.line("insufficient points");
  }
  {
    std::ostringstream line;
    line << "excluded";
    for (int id : fit.excluded_class_ids) line << '\t' << Label::from_class_id(id)->name();
    dst.line(line.str());
  }

  dst.line("== worst lines ==");
  std::stable_sort(line_scores.begin(), line_scores.end(), [](const auto& a, const auto& b) {
    if (a.der != b.der) return a.der > b.der;
    return a.line_no < b.line_no;
  });
  for (std::size_t i = 0; i < std::min(worst, line_scores.size()); ++i) {
    std::ostringstream line;
    line << line_scores[i].line_no << '\t' << line_scores[i].der << '\t' << line_scores[i].text;
    dst.line(line.str());
  }
  dst.done();
  return kExitOk;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Arabic diacritization toolkit: corpus preparation, byte-level "
               "seq2seq formatting, a statistical baseline, and DER/WER scoring"};
  app.require_subcommand(1);

  // normalize
  auto* normalize = app.add_subcommand("normalize", "Canonicalize text line by line");
  std::string norm_in = "-", norm_out = "-";
  normalize->add_option("--in", norm_in, "Input file (- for stdin)");
  normalize->add_option("--out", norm_out, "Output file (- for stdout)");

  // stats
  auto* stats = app.add_subcommand("stats", "Corpus statistics as JSON");
  std::string stats_in, stats_out = "-";
  stats->add_option("corpus", stats_in, "Corpus file")->required();
  stats->add_option("--out", stats_out, "Output file (- for stdout)");

  // strip
  auto* strip = app.add_subcommand("strip", "Remove diacritics line by line");
  std::string strip_in = "-", strip_out = "-";
  strip->add_option("--in", strip_in, "Input file (- for stdin)");
  strip->add_option("--out", strip_out, "Output file (- for stdout)");

  // filter
  auto* filter = app.add_subcommand("filter", "Apply corpus quality rules");
  std::string filter_in, filter_preset, filter_config, filter_out = "-", filter_rejected;
  filter->add_option("--in", filter_in, "Corpus file")->required();
  filter->add_option("--preset", filter_preset,
                     "Named rules: permissive, clean-strict, clean-loose");
  filter->add_option("--config", filter_config, "JSON filter config file");
  filter->add_option("--out", filter_out, "Kept lines (- for stdout)");
  filter->add_option("--rejected", filter_rejected, "Rejected lines with reasons (TSV)");

  // split
  auto* split = app.add_subcommand("split", "Deterministic train/dev/test partition");
  std::string split_in, split_fractions = "0.8,0.1,0.1";
  std::uint64_t split_seed = 0;
  std::string split_train, split_dev, split_test;
  split->add_option("--in", split_in, "Corpus file")->required();
  split->add_option("--fractions", split_fractions, "train,dev,test fractions");
  split->add_option("--seed", split_seed, "Shuffle seed");
  split->add_option("--out-train", split_train, "Train output")->required();
  split->add_option("--out-dev", split_dev, "Dev output")->required();
  split->add_option("--out-test", split_test, "Test output")->required();

  // encode
  auto* encode = app.add_subcommand("encode", "Build byte-level seq2seq records");
  std::string enc_in = "-", enc_out = "-", enc_format = "binary";
  bool enc_sentinel = false;
  encode->add_option("--in", enc_in, "Diacritized corpus (- for stdin)");
  encode->add_option("--out", enc_out, "Record file (- for stdout)");
  encode->add_option("--format", enc_format, "binary or tsv");
  encode->add_flag("--sentinel", enc_sentinel, "Replace target characters with sentinels");

  // pack
  auto* pack = app.add_subcommand("pack", "Pack and truncate records to a byte budget");
  std::string pack_in, pack_out;
  std::size_t pack_max = 512;
  bool pack_raw = false;
  pack->add_option("--in", pack_in, "Record file")->required();
  pack->add_option("--out", pack_out, "Packed record file")->required();
  pack->add_option("--max-len", pack_max, "Byte budget per side");
  pack->add_flag("--raw-truncate", pack_raw, "Cut at raw byte N instead of a cell boundary");

  // train
  auto* train = app.add_subcommand("train", "Train the statistical baseline");
  std::string train_stage1, train_stage2, train_out;
  double train_lambda = 0.0;
  train->add_option("--stage1", train_stage1, "Full training corpus")->required();
  train->add_option("--stage2", train_stage2, "Cleaner second-stage corpus");
  auto* lambda_opt = train->add_option("--lambda", train_lambda, "Second-stage count weight");
  train->add_option("--out", train_out, "Model file")->required();

  // predict
  auto* predict = app.add_subcommand("predict", "Diacritize undiacritized lines");
  std::string pred_model, pred_in = "-", pred_out = "-";
  predict->add_option("--model", pred_model, "Model file")->required();
  predict->add_option("--in", pred_in, "Input lines (- for stdin)");
  predict->add_option("--out", pred_out, "Output lines (- for stdout)");

  // eval
  auto* eval = app.add_subcommand("eval", "Score a hypothesis file against a reference");
  std::string eval_ref, eval_hyp, eval_out = "-";
  bool eval_sentinel = false;
  EvalFlags eval_flags;
  eval->add_option("ref", eval_ref, "Reference file")->required();
  eval->add_option("hyp", eval_hyp, "Hypothesis file")->required();
  eval_flags.attach(eval);
  eval->add_flag("--sentinel", eval_sentinel, "Hypothesis lines use the sentinel format");
  eval->add_option("--out", eval_out, "Report file (- for stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Confusion matrix, distribution, fit, worst lines");
  std::string an_ref, an_hyp, an_out = "-";
  std::size_t an_worst = 10;
  EvalFlags an_flags;
  analyze->add_option("ref", an_ref, "Reference file")->required();
  analyze->add_option("hyp", an_hyp, "Hypothesis file")->required();
  an_flags.attach(analyze);
  analyze->add_option("--worst", an_worst, "How many worst lines to list");
  analyze->add_option("--out", an_out, "Report file (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (normalize->parsed()) return cmd_normalize(norm_in, norm_out);
  if (stats->parsed()) return cmd_stats(stats_in, stats_out);
  if (strip->parsed()) return cmd_strip(strip_in, strip_out);
  if (filter->parsed()) {
    return cmd_filter(filter_in, filter_preset, filter_config, filter_out, filter_rejected);
  }
  if (split->parsed()) {
    return cmd_split(split_in, split_fractions, split_seed, split_train, split_dev, split_test);
  }
  if (encode->parsed()) return cmd_encode(enc_in, enc_out, enc_format, enc_sentinel);
  if (pack->parsed()) return cmd_pack(pack_in, pack_out, pack_max, pack_raw);
  if (train->parsed()) {
    std::optional<double> lambda;
    if (lambda_opt->count() > 0) lambda = train_lambda;
    return cmd_train(train_stage1, train_stage2, lambda, train_out);
  }
  if (predict->parsed()) return cmd_predict(pred_model, pred_in, pred_out);
  if (eval->parsed()) return cmd_eval(eval_ref, eval_hyp, eval_flags, eval_sentinel, eval_out);
  if (analyze->parsed()) return cmd_analyze(an_ref, an_hyp, an_flags, an_worst, an_out);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const LineCountMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const Utf8Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const MismatchedPair& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const VersionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const EmptyCorpus& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const SentinelCollision& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
