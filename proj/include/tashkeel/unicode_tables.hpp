#pragma once

#include <cstddef>
#include <cstdint>

namespace tashkeel::uni::tables {

struct Range32 {
  char32_t first;
  char32_t last;
};

struct CccRange {
  char32_t first;
  char32_t last;
  std::uint8_t ccc;
};

struct Decomp {
  char32_t cp;
  std::uint16_t offset;
  std::uint16_t length;
};

extern const Range32 kPunctuationRanges[];
extern const std::size_t kPunctuationRangeCount;

extern const Range32 kArabicLetterRanges[];
extern const std::size_t kArabicLetterRangeCount;

extern const CccRange kCombiningClassRanges[];
extern const std::size_t kCombiningClassRangeCount;

extern const char32_t kDecompPool[];
extern const std::size_t kDecompPoolSize;

extern const Decomp kPresentationDecomps[];
extern const std::size_t kPresentationDecompCount;

}  // namespace tashkeel::uni::tables
