#include "tashkeel/seqformat.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>

#include "tashkeel/errors.hpp"

namespace tashkeel {

namespace {

constexpr char32_t kSentinel = U'_';

void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
               static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
  out.write(b, 4);
}

void put_u16(std::ostream& out, std::uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF)};
  out.write(b, 2);
}

// False only at a clean record boundary; a partial prefix is corruption.
bool get_u32_or_eof(std::istream& in, std::uint32_t& v) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  if (in.gcount() == 0) return false;
  if (in.gcount() < 4) throw IoError("truncated record: length prefix");
  v = b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
  return true;
}

bool get_u32(std::istream& in, std::uint32_t& v) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
  v = b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
  return true;
}

bool get_u16(std::istream& in, std::uint16_t& v) {
  unsigned char b[2];
  if (!in.read(reinterpret_cast<char*>(b), 2)) return false;
  v = static_cast<std::uint16_t>(b[0] | (b[1] << 8));
  return true;
}

enum class Op : std::uint8_t { None, Match, Sub, Del, Ins };

// Truncate one record to the largest cell prefix fitting cfg.max_len_bytes
// on both sides. Returns false when not even one cell fits.
bool truncate_record(ByteRecord& rec, std::size_t max_len) {
  DecodeResult decoded = decode_prediction(rec.target);
  ParseResult parsed = parse_cells(decoded.text);
  const auto& cells = parsed.text.cells;

  std::size_t in_bytes = 0, tgt_bytes = 0, kept = 0;
  std::size_t in_cut = 0, tgt_cut = 0;
  for (const Cell& c : cells) {
    std::size_t base_len = uni::utf8_length(c.base);
    std::u32string marks;
    c.label.append_marks(marks);
    std::size_t mark_len = 0;
    for (char32_t m : marks) mark_len += uni::utf8_length(m);
    if (in_bytes + base_len > max_len || tgt_bytes + base_len + mark_len > max_len) break;
    in_bytes += base_len;
    tgt_bytes += base_len + mark_len;
    ++kept;
    in_cut = in_bytes;
    tgt_cut = tgt_bytes;
  }
  if (kept == 0) return false;
  if (kept == cells.size() && in_cut == rec.input.size() && tgt_cut == rec.target.size()) {
    return true;  // already fits
  }

  std::vector<Cell> prefix(cells.begin(), cells.begin() + kept);
  DiacritizedText head = DiacritizedText::from_cells(std::move(prefix));
  rec.target = render_cells(head);
  std::string input;
  for (const Cell& c : head.cells) uni::append_utf8(input, c.base);
  rec.input = std::move(input);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> kept_bounds;
  for (auto [io, to] : rec.segment_boundaries) {
    if (io < rec.input.size() && to < rec.target.size()) kept_bounds.emplace_back(io, to);
  }
  if (kept_bounds.empty()) kept_bounds.emplace_back(0, 0);
  rec.segment_boundaries = std::move(kept_bounds);
  return true;
}

}  // namespace

ByteRecord encode_record(std::string_view undiac, std::string_view diac) {
  StripResult stripped = strip_diacritics(diac);
  if (stripped.text != undiac) {
    throw MismatchedPair("target does not strip to the given input");
  }
  ByteRecord rec;
  rec.input = std::string(undiac);
  rec.target = std::string(diac);
  return rec;
}

DecodeResult decode_prediction(std::string_view bytes) {
  DecodeResult r;
  std::u32string scalars = uni::decode_utf8_lossy(bytes, &r.replacements);
  r.text = uni::encode_utf8(scalars);
  return r;
}

CellAlignment align_cells(const DiacritizedText& gold, const DiacritizedText& predicted) {
  const std::size_t m = gold.cells.size();
  const std::size_t n = predicted.cells.size();

  CellAlignment al;

  // Fast path: identical base sequences align one-to-one at cost zero.
  bool same = m == n;
  for (std::size_t i = 0; same && i < m; ++i) same = gold.cells[i].base == predicted.cells[i].base;
  if (same) {
    al.pairs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) al.pairs.emplace_back(i, i);
    al.cost = 0;
    return al;
  }

  std::vector<std::uint32_t> prev(n + 1), cur(n + 1);
  std::vector<Op> ops((m + 1) * (n + 1), Op::None);
  auto op_at = [&](std::size_t i, std::size_t j) -> Op& { return ops[i * (n + 1) + j]; };

  for (std::size_t j = 0; j <= n; ++j) {
    prev[j] = static_cast<std::uint32_t>(j);
    if (j > 0) op_at(0, j) = Op::Ins;
  }
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = static_cast<std::uint32_t>(i);
    op_at(i, 0) = Op::Del;
    for (std::size_t j = 1; j <= n; ++j) {
      bool eq = gold.cells[i - 1].base == predicted.cells[j - 1].base;
      std::uint32_t diag = prev[j - 1] + (eq ? 0 : 1);
      std::uint32_t del = prev[j] + 1;
      std::uint32_t ins = cur[j - 1] + 1;
      std::uint32_t best = std::min(diag, std::min(del, ins));
      cur[j] = best;
      if (diag == best) {
        op_at(i, j) = eq ? Op::Match : Op::Sub;
      } else if (del == best) {
        op_at(i, j) = Op::Del;
      } else {
        op_at(i, j) = Op::Ins;
      }
    }
    std::swap(prev, cur);
  }
  al.cost = prev[n];

  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    switch (op_at(i, j)) {
      case Op::Match:
      case Op::Sub:
        al.pairs.emplace_back(i - 1, j - 1);
        --i;
        --j;
        break;
      case Op::Del:
        al.pairs.emplace_back(i - 1, kGap);
        --i;
        break;
      case Op::Ins:
        al.pairs.emplace_back(kGap, j - 1);
        --j;
        break;
      case Op::None:
        throw Error("align_cells: corrupt traceback");
    }
  }
  std::reverse(al.pairs.begin(), al.pairs.end());
  return al;
}

std::string to_sentinel_target(std::string_view diac) {
  std::u32string scalars = uni::decode_utf8_lossy(diac);
  std::u32string out;
  out.reserve(scalars.size());
  for (char32_t cp : scalars) {
    if (is_diacritic_mark(cp)) {
      out.push_back(cp);
    } else if (cp == kSentinel) {
      throw SentinelCollision("source text contains the sentinel character '_'");
    } else {
      out.push_back(kSentinel);
    }
  }
  return uni::encode_utf8(out);
}

std::optional<std::string> from_sentinel_prediction(std::string_view pred,
                                                    std::string_view original_input) {
  std::u32string pred_scalars = uni::decode_utf8_lossy(pred);
  std::u32string input_scalars = uni::decode_utf8_lossy(original_input);

  std::size_t sentinels = static_cast<std::size_t>(
      std::count(pred_scalars.begin(), pred_scalars.end(), kSentinel));
  if (sentinels != input_scalars.size()) return std::nullopt;

  std::u32string out;
  out.reserve(pred_scalars.size());
  std::size_t next = 0;
  for (char32_t cp : pred_scalars) {
    out.push_back(cp == kSentinel ? input_scalars[next++] : cp);
  }
  return uni::encode_utf8(out);
}

std::vector<ByteRecord> pack_and_truncate(const std::vector<ByteRecord>& records,
                                          const PackingConfig& cfg) {
  if (cfg.max_len_bytes < 4) {
    throw ConfigError("max_len_bytes must be at least 4");
  }
  const std::size_t n = cfg.max_len_bytes;

  std::vector<ByteRecord> bins;
  for (const ByteRecord& original : records) {
    ByteRecord rec = original;
    if (rec.input.size() > n || rec.target.size() > n) {
      if (cfg.raw_truncate) {
        if (rec.input.size() > n) rec.input.resize(n);
        if (rec.target.size() > n) rec.target.resize(n);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> kept;
        for (auto [io, to] : rec.segment_boundaries) {
          if (io < rec.input.size() && to < rec.target.size()) kept.emplace_back(io, to);
        }
        if (kept.empty()) kept.emplace_back(0, 0);
        rec.segment_boundaries = std::move(kept);
      } else if (!truncate_record(rec, n)) {
        continue;  // nothing fits
      }
    }

    bool placed = false;
    for (ByteRecord& bin : bins) {
      if (bin.input.size() + rec.input.size() <= n &&
          bin.target.size() + rec.target.size() <= n) {
        auto in_off = static_cast<std::uint32_t>(bin.input.size());
        auto tgt_off = static_cast<std::uint32_t>(bin.target.size());
        bin.input += rec.input;
        bin.target += rec.target;
        for (auto [io, to] : rec.segment_boundaries) {
          bin.segment_boundaries.emplace_back(in_off + io, tgt_off + to);
        }
        placed = true;
        break;
      }
    }
    if (!placed) bins.push_back(std::move(rec));
  }
  return bins;
}

void write_record(std::ostream& out, const ByteRecord& rec) {
  if (rec.input.size() > std::numeric_limits<std::uint32_t>::max() ||
      rec.target.size() > std::numeric_limits<std::uint32_t>::max() ||
      rec.segment_boundaries.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw Error("record too large for the framing format");
  }
  put_u32(out, static_cast<std::uint32_t>(rec.input.size()));
  out.write(rec.input.data(), static_cast<std::streamsize>(rec.input.size()));
  put_u32(out, static_cast<std::uint32_t>(rec.target.size()));
  out.write(rec.target.data(), static_cast<std::streamsize>(rec.target.size()));
  put_u16(out, static_cast<std::uint16_t>(rec.segment_boundaries.size()));
  for (auto [io, to] : rec.segment_boundaries) {
    put_u32(out, io);
    put_u32(out, to);
  }
  if (!out) throw IoError("write failure on record stream");
}

void write_records(std::ostream& out, const std::vector<ByteRecord>& recs) {
  for (const auto& r : recs) write_record(out, r);
}

std::vector<ByteRecord> read_records(std::istream& in) {
  std::vector<ByteRecord> out;
  std::uint32_t in_len;
  while (get_u32_or_eof(in, in_len)) {
    ByteRecord rec;
    rec.input.resize(in_len);
    if (!in.read(rec.input.data(), in_len)) throw IoError("truncated record: input bytes");
    std::uint32_t tgt_len;
    if (!get_u32(in, tgt_len)) throw IoError("truncated record: target length");
    rec.target.resize(tgt_len);
    if (!in.read(rec.target.data(), tgt_len)) throw IoError("truncated record: target bytes");
    std::uint16_t segs;
    if (!get_u16(in, segs)) throw IoError("truncated record: segment count");
    rec.segment_boundaries.clear();
    for (std::uint16_t s = 0; s < segs; ++s) {
      std::uint32_t io, to;
      if (!get_u32(in, io) || !get_u32(in, to)) throw IoError("truncated record: boundary");
      rec.segment_boundaries.emplace_back(io, to);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

void write_records_tsv(std::ostream& out, const std::vector<ByteRecord>& recs) {
  for (const auto& r : recs) {
    if (r.input.find_first_of("\t\n") != std::string::npos ||
        r.target.find_first_of("\t\n") != std::string::npos) {
      throw Error("record contains tab or newline; not representable in TSV");
    }
    out << r.input << '\t' << r.target << '\n';
  }
  if (!out) throw IoError("write failure on TSV stream");
}

}  // namespace tashkeel
