#include "tashkeel/unicode.hpp"

#include <algorithm>

#include "tashkeel/unicode_tables.hpp"

namespace tashkeel::uni {

namespace {

bool in_ranges(char32_t cp, const tables::Range32* ranges, std::size_t count) {
  const tables::Range32* end = ranges + count;
  auto it = std::upper_bound(ranges, end, cp,
                             [](char32_t v, const tables::Range32& r) { return v < r.first; });
  return it != ranges && cp <= (it - 1)->last;
}

// Unicode White_Space property.
constexpr tables::Range32 kWhitespaceRanges[] = {
    {0x0009, 0x000D}, {0x0020, 0x0020}, {0x0085, 0x0085}, {0x00A0, 0x00A0},
    {0x1680, 0x1680}, {0x2000, 0x200A}, {0x2028, 0x2029}, {0x202F, 0x202F},
    {0x205F, 0x205F}, {0x3000, 0x3000},
};

struct ComposePair {
  char32_t starter;
  char32_t mark;
  char32_t composed;
};

// Canonical compositions whose result lies in the Arabic block.
constexpr ComposePair kArabicCompositions[] = {
    {0x0627, 0x0653, 0x0622}, {0x0627, 0x0654, 0x0623}, {0x0648, 0x0654, 0x0624},
    {0x0627, 0x0655, 0x0625}, {0x064A, 0x0654, 0x0626}, {0x06D5, 0x0654, 0x06C0},
    {0x06C1, 0x0654, 0x06C2}, {0x06D2, 0x0654, 0x06D3},
};

}  // namespace

std::u32string decode_utf8_lossy(std::string_view bytes, std::size_t* replacements) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t bad = 0;
  std::size_t i = 0;
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t n = bytes.size();
  while (i < n) {
    unsigned char b = p[i];
    if (b < 0x80) {
      out.push_back(b);
      ++i;
      continue;
    }
    int len;
    char32_t cp;
    char32_t min;
    if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp = b & 0x1F;
      min = 0x80;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp = b & 0x0F;
      min = 0x800;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp = b & 0x07;
      min = 0x10000;
    } else {
      out.push_back(kReplacementChar);
      ++bad;
      ++i;
      continue;
    }
    // Consume the maximal valid subpart; one U+FFFD per ill-formed run.
    std::size_t j = i + 1;
    int taken = 1;
    bool ok = true;
    for (; taken < len; ++taken, ++j) {
      if (j >= n || (p[j] & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (p[j] & 0x3F);
    }
    if (ok && (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))) ok = false;
    if (ok) {
      out.push_back(cp);
      i += len;
    } else {
      out.push_back(kReplacementChar);
      ++bad;
      i = j > i ? j : i + 1;
    }
  }
  if (replacements) *replacements = bad;
  return out;
}

bool decode_utf8_strict(std::string_view bytes, std::u32string& out, std::size_t* error_offset) {
  out.clear();
  std::size_t bad = 0;
  std::u32string decoded = decode_utf8_lossy(bytes, &bad);
  if (bad != 0) {
    if (error_offset) {
      // Re-scan to locate the first offending byte.
      std::size_t i = 0;
      const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
      while (i < bytes.size()) {
        unsigned char b = p[i];
        int len = b < 0x80 ? 1 : (b & 0xE0) == 0xC0 ? 2 : (b & 0xF0) == 0xE0 ? 3 : (b & 0xF8) == 0xF0 ? 4 : 0;
        if (len == 0) break;
        std::size_t chunk = std::min<std::size_t>(len, bytes.size() - i);
        std::size_t r = 0;
        decode_utf8_lossy(bytes.substr(i, chunk), &r);
        if (r != 0 || chunk < static_cast<std::size_t>(len)) break;
        i += len;
      }
      *error_offset = i;
    }
    return false;
  }
  out = std::move(decoded);
  return true;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

std::size_t utf8_length(char32_t cp) {
  if (cp < 0x80) return 1;
  if (cp < 0x800) return 2;
  if (cp < 0x10000) return 3;
  return 4;
}

bool is_whitespace(char32_t cp) {
  return in_ranges(cp, kWhitespaceRanges, std::size(kWhitespaceRanges));
}

bool is_punctuation(char32_t cp) {
  return in_ranges(cp, tables::kPunctuationRanges, tables::kPunctuationRangeCount);
}

bool is_arabic_letter(char32_t cp) {
  return in_ranges(cp, tables::kArabicLetterRanges, tables::kArabicLetterRangeCount);
}

bool is_digit(char32_t cp) {
  return (cp >= U'0' && cp <= U'9') || (cp >= 0x0660 && cp <= 0x0669) ||
         (cp >= 0x06F0 && cp <= 0x06F9);
}

int combining_class(char32_t cp) {
  const auto* begin = tables::kCombiningClassRanges;
  const auto* end = begin + tables::kCombiningClassRangeCount;
  auto it = std::upper_bound(begin, end, cp,
                             [](char32_t v, const tables::CccRange& r) { return v < r.first; });
  if (it != begin && cp <= (it - 1)->last) return (it - 1)->ccc;
  return 0;
}

std::u32string_view presentation_decomposition(char32_t cp) {
  if (cp < 0xFB50 || cp > 0xFEFF) return {};
  const auto* begin = tables::kPresentationDecomps;
  const auto* end = begin + tables::kPresentationDecompCount;
  auto it = std::lower_bound(begin, end, cp,
                             [](const tables::Decomp& d, char32_t v) { return d.cp < v; });
  if (it == end || it->cp != cp) return {};
  return {tables::kDecompPool + it->offset, it->length};
}

bool arabic_canonical_decompose(char32_t cp, char32_t& starter, char32_t& mark) {
  for (const auto& pair : kArabicCompositions) {
    if (pair.composed == cp) {
      starter = pair.starter;
      mark = pair.mark;
      return true;
    }
  }
  return false;
}

char32_t arabic_compose(char32_t starter, char32_t mark) {
  for (const auto& pair : kArabicCompositions) {
    if (pair.starter == starter && pair.mark == mark) return pair.composed;
  }
  return 0;
}

}  // namespace tashkeel::uni
