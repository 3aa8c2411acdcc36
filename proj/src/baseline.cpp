#include "tashkeel/baseline.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <map>

#include "tashkeel/errors.hpp"

namespace tashkeel {

namespace {

// Two-stage weighted counts per label class.
struct StageCounts {
  std::array<std::uint64_t, Label::kClassCount> stage1{};
  std::array<std::uint64_t, Label::kClassCount> stage2{};
};

std::uint64_t ctx3_key(char32_t base, char32_t prev, bool last) {
  return static_cast<std::uint64_t>(base) | (static_cast<std::uint64_t>(prev) << 21) |
         (static_cast<std::uint64_t>(last) << 42);
}

std::uint64_t ctx2_key(char32_t base, bool last) {
  return static_cast<std::uint64_t>(base) | (static_cast<std::uint64_t>(last) << 21);
}

std::uint8_t best_label(const StageCounts& counts, double lambda) {
  int best = 0;
  double best_score = -1.0;
  for (int id = 0; id < Label::kClassCount; ++id) {
    if (counts.stage1[id] == 0 && counts.stage2[id] == 0) continue;
    double score = static_cast<double>(counts.stage1[id]) +
                   lambda * static_cast<double>(counts.stage2[id]);
    if (score > best_score) {  // ties keep the smallest class id
      best_score = score;
      best = id;
    }
  }
  return static_cast<std::uint8_t>(best);
}

struct Accumulator {
  std::unordered_map<std::string, std::map<std::string, std::pair<std::uint64_t, std::uint64_t>>>
      word_forms;
  std::unordered_map<std::uint64_t, StageCounts> ctx3;
  std::unordered_map<std::uint64_t, StageCounts> ctx2;
  std::unordered_map<std::uint32_t, StageCounts> ctx1;
  StageCounts ctx0;
  bool any_cell = false;
  std::uint64_t labeled_cells = 0;
  std::uint64_t cells[2] = {0, 0};

  void add(const CorpusExample& ex, int stage) {
    const auto& dt = ex.parse;
    for (auto [start, end] : dt.word_spans) {
      std::string key;
      std::u32string form_scalars;
      for (std::size_t i = start; i < end; ++i) {
        const Cell& c = dt.cells[i];
        uni::append_utf8(key, c.base);
        form_scalars.push_back(c.base);
        c.label.append_marks(form_scalars);

        char32_t prev = i > start ? dt.cells[i - 1].base : 0;
        bool last = i + 1 == end;
        int id = c.label.class_id();
        auto bump = [stage, id](StageCounts& sc) {
          (stage == 0 ? sc.stage1 : sc.stage2)[id]++;
        };
        bump(ctx3[ctx3_key(c.base, prev, last)]);
        bump(ctx2[ctx2_key(c.base, last)]);
        bump(ctx1[static_cast<std::uint32_t>(c.base)]);
        bump(ctx0);
        any_cell = true;
        if (!c.label.none()) ++labeled_cells;
        ++cells[stage];
      }
      std::string form = uni::encode_utf8(form_scalars);
      auto& slot = word_forms[key][form];
      (stage == 0 ? slot.first : slot.second)++;
    }
  }
};

void put_u16(std::ostream& out, std::uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF)};
  out.write(b, 2);
}

void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b, 8);
}

void put_f64(std::ostream& out, double v) {
  std::uint64_t bits;
  static_assert(sizeof(bits) == sizeof(v));
  std::memcpy(&bits, &v, sizeof(bits));
  put_u64(out, bits);
}

void put_str(std::ostream& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint16_t get_u16(std::istream& in) {
  unsigned char b[2];
  if (!in.read(reinterpret_cast<char*>(b), 2)) throw IoError("truncated model file");
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) throw IoError("truncated model file");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) throw IoError("truncated model file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

double get_f64(std::istream& in) {
  std::uint64_t bits = get_u64(in);
  double v;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

std::string get_str(std::istream& in) {
  std::uint32_t len = get_u32(in);
  std::string s(len, '\0');
  if (len > 0 && !in.read(s.data(), len)) throw IoError("truncated model file");
  return s;
}

std::uint8_t get_u8(std::istream& in) {
  char c;
  if (!in.get(c)) throw IoError("truncated model file");
  return static_cast<std::uint8_t>(c);
}

}  // namespace

BaselineModel BaselineModel::train(const std::vector<CorpusExample>& stage1,
                                   const std::vector<CorpusExample>* stage2,
                                   std::optional<double> lambda) {
  if (lambda && *lambda <= 0.0) throw ConfigError("curriculum weight must be positive");

  Accumulator acc;
  for (const auto& ex : stage1) acc.add(ex, 0);
  if (stage2) {
    for (const auto& ex : *stage2) acc.add(ex, 1);
  }
  if (acc.labeled_cells == 0) {
    throw EmptyCorpus("training data contains no labeled cells");
  }

  BaselineModel model;
  model.stage1_cells_ = acc.cells[0];
  model.stage2_cells_ = acc.cells[1];
  if (lambda) {
    model.lambda_ = *lambda;
  } else if (acc.cells[1] > 0 && acc.cells[0] > 0) {
    model.lambda_ =
        static_cast<double>(acc.cells[0]) / static_cast<double>(acc.cells[1]);
  } else {
    model.lambda_ = 1.0;
  }

  for (const auto& [key, forms] : acc.word_forms) {
    const std::string* best_form = nullptr;
    double best_score = -1.0;
    for (const auto& [form, c] : forms) {  // std::map: forms visited in sorted order
      double score = static_cast<double>(c.first) + model.lambda_ * static_cast<double>(c.second);
      if (score > best_score) {  // ties keep the lexicographically smallest form
        best_score = score;
        best_form = &form;
      }
    }
    model.words_.emplace(key, WordEntry{*best_form, best_score});
  }

  for (const auto& [key, counts] : acc.ctx3) model.ctx3_[key] = best_label(counts, model.lambda_);
  for (const auto& [key, counts] : acc.ctx2) model.ctx2_[key] = best_label(counts, model.lambda_);
  for (const auto& [key, counts] : acc.ctx1) model.ctx1_[key] = best_label(counts, model.lambda_);
  model.ctx0_ = best_label(acc.ctx0, model.lambda_);
  return model;
}

Label BaselineModel::backoff_label(char32_t base, char32_t prev, bool last) const {
  if (auto it = ctx3_.find(ctx3_key(base, prev, last)); it != ctx3_.end()) {
    return *Label::from_class_id(it->second);
  }
  if (auto it = ctx2_.find(ctx2_key(base, last)); it != ctx2_.end()) {
    return *Label::from_class_id(it->second);
  }
  if (auto it = ctx1_.find(static_cast<std::uint32_t>(base)); it != ctx1_.end()) {
    return *Label::from_class_id(it->second);
  }
  if (ctx0_) return *Label::from_class_id(*ctx0_);
  return Label();
}

std::string BaselineModel::predict(std::string_view undiac) const {
  std::u32string scalars = uni::decode_utf8_lossy(undiac);
  std::u32string out;
  out.reserve(scalars.size() * 2);

  std::size_t i = 0;
  while (i < scalars.size()) {
    if (uni::is_whitespace(scalars[i])) {
      out.push_back(scalars[i]);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < scalars.size() && !uni::is_whitespace(scalars[j])) ++j;

    std::string key = uni::encode_utf8(std::u32string_view(scalars).substr(i, j - i));
    if (auto it = words_.find(key); it != words_.end()) {
      out += uni::decode_utf8_lossy(it->second.form);
    } else {
      for (std::size_t k = i; k < j; ++k) {
        char32_t prev = k > i ? scalars[k - 1] : 0;
        bool last = k + 1 == j;
        out.push_back(scalars[k]);
        backoff_label(scalars[k], prev, last).append_marks(out);
      }
    }
    i = j;
  }
  return uni::encode_utf8(out);
}

std::optional<std::string> BaselineModel::word_form(std::string_view key) const {
  auto it = words_.find(std::string(key));
  if (it == words_.end()) return std::nullopt;
  return it->second.form;
}

void BaselineModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open model file for writing: " + path);

  out.write("FTBL", 4);
  put_u16(out, kFormatVersion);
  put_u64(out, stage1_cells_);
  put_u64(out, stage2_cells_);
  put_f64(out, lambda_);

  // Sorted emission keeps the file byte-stable across runs.
  std::vector<const std::pair<const std::string, WordEntry>*> words;
  words.reserve(words_.size());
  for (const auto& kv : words_) words.push_back(&kv);
  std::sort(words.begin(), words.end(),
            [](const auto* a, const auto* b) { return a->first < b->first; });
  put_u32(out, static_cast<std::uint32_t>(words.size()));
  for (const auto* kv : words) {
    put_str(out, kv->first);
    put_str(out, kv->second.form);
    put_f64(out, kv->second.count);
  }

  auto write_ctx = [&out](const auto& table) {
    std::vector<std::pair<std::uint64_t, std::uint8_t>> entries;
    entries.reserve(table.size());
    for (const auto& [k, v] : table) entries.emplace_back(k, v);
    std::sort(entries.begin(), entries.end());
    put_u32(out, static_cast<std::uint32_t>(entries.size()));
    for (auto [k, v] : entries) {
      put_u64(out, k);
      out.put(static_cast<char>(v));
    }
  };
  write_ctx(ctx3_);
  write_ctx(ctx2_);
  write_ctx(ctx1_);
  out.put(static_cast<char>(ctx0_.has_value()));
  out.put(static_cast<char>(ctx0_.value_or(0)));

  if (!out) throw IoError("write failure on model file: " + path);
}

BaselineModel BaselineModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file: " + path);

  char magic[4];
  if (!in.read(magic, 4) || std::string_view(magic, 4) != "FTBL") {
    throw IoError("not a model file (bad magic): " + path);
  }
  std::uint16_t version = get_u16(in);
  if (version != kFormatVersion) {
    throw VersionMismatch("unsupported model version " + std::to_string(version));
  }

  BaselineModel model;
  model.stage1_cells_ = get_u64(in);
  model.stage2_cells_ = get_u64(in);
  model.lambda_ = get_f64(in);

  std::uint32_t word_count = get_u32(in);
  model.words_.reserve(word_count);
  for (std::uint32_t i = 0; i < word_count; ++i) {
    std::string key = get_str(in);
    WordEntry entry;
    entry.form = get_str(in);
    entry.count = get_f64(in);
    model.words_.emplace(std::move(key), std::move(entry));
  }

  auto read_ctx = [&in](auto& table) {
    std::uint32_t count = get_u32(in);
    table.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
      std::uint64_t key = get_u64(in);
      std::uint8_t label = get_u8(in);
      if (label >= Label::kClassCount) throw IoError("corrupt model file: bad label id");
      table.emplace(static_cast<typename std::decay_t<decltype(table)>::key_type>(key), label);
    }
  };
  read_ctx(model.ctx3_);
  read_ctx(model.ctx2_);
  read_ctx(model.ctx1_);
  bool has_ctx0 = get_u8(in) != 0;
  std::uint8_t ctx0 = get_u8(in);
  if (has_ctx0) {
    if (ctx0 >= Label::kClassCount) throw IoError("corrupt model file: bad label id");
    model.ctx0_ = ctx0;
  }
  return model;
}

}  // namespace tashkeel
