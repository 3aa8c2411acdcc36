#!/usr/bin/env python3
"""Regenerates src/unicode_tables.cpp from the Python unicodedata module.

Emits range tables for base-character classification (punctuation,
Arabic letters), canonical combining classes, and the compatibility
decompositions of the Arabic presentation-form blocks (U+FB50-U+FDFF,
U+FE70-U+FEFF). Run from the repository root:

    python3 scripts/gen_unicode_tables.py > src/unicode_tables.cpp
"""

import sys
import unicodedata as ud

MAX_CP = 0x110000

PUNCT_CATEGORIES = {"Pc", "Pd", "Ps", "Pe", "Pi", "Pf", "Po"}
LETTER_CATEGORIES = {"Lu", "Ll", "Lt", "Lm", "Lo"}
ARABIC_BLOCKS = [
    (0x0600, 0x06FF),
    (0x0750, 0x077F),
    (0x08A0, 0x08FF),
    (0xFB50, 0xFDFF),
    (0xFE70, 0xFEFF),
    (0x1EE00, 0x1EEFF),
]
PRESENTATION_BLOCKS = [(0xFB50, 0xFDFF), (0xFE70, 0xFEFF)]


def ranges(predicate):
    out = []
    start = None
    for cp in range(MAX_CP):
        if predicate(cp):
            if start is None:
                start = cp
        elif start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def is_punct(cp):
    return ud.category(chr(cp)) in PUNCT_CATEGORIES


def is_arabic_letter(cp):
    if not any(lo <= cp <= hi for lo, hi in ARABIC_BLOCKS):
        return False
    return ud.category(chr(cp)) in LETTER_CATEGORIES


def ccc_ranges():
    out = []
    start = None
    cur = 0
    for cp in range(MAX_CP):
        c = ud.combining(chr(cp))
        if c != cur:
            if cur != 0:
                out.append((start, cp - 1, cur))
            start = cp if c != 0 else None
            cur = c
    if cur != 0:
        out.append((start, MAX_CP - 1, cur))
    return out


def presentation_decomps():
    entries = []
    pool = []
    for lo, hi in PRESENTATION_BLOCKS:
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            if ud.category(ch) == "Cn":
                continue
            expanded = ud.normalize("NFKD", ch)
            if expanded == ch:
                continue
            offset = len(pool)
            pool.extend(ord(c) for c in expanded)
            entries.append((cp, offset, len(expanded)))
    return entries, pool


def emit():
    punct = ranges(is_punct)
    arabic = ranges(is_arabic_letter)
    ccc = ccc_ranges()
    decomps, pool = presentation_decomps()

    w = sys.stdout.write
    w("// Generated by scripts/gen_unicode_tables.py from unicodedata "
      f"(UCD {ud.unidata_version}). Do not edit by hand.\n\n")
    w('#include "tashkeel/unicode_tables.hpp"\n\n')
    w("namespace tashkeel::uni::tables {\n\n")

    w("const Range32 kPunctuationRanges[] = {\n")
    for a, b in punct:
        w(f"    {{0x{a:04X}, 0x{b:04X}}},\n")
    w("};\n")
    w(f"const std::size_t kPunctuationRangeCount = {len(punct)};\n\n")

    w("const Range32 kArabicLetterRanges[] = {\n")
    for a, b in arabic:
        w(f"    {{0x{a:04X}, 0x{b:04X}}},\n")
    w("};\n")
    w(f"const std::size_t kArabicLetterRangeCount = {len(arabic)};\n\n")

    w("const CccRange kCombiningClassRanges[] = {\n")
    for a, b, c in ccc:
        w(f"    {{0x{a:04X}, 0x{b:04X}, {c}}},\n")
    w("};\n")
    w(f"const std::size_t kCombiningClassRangeCount = {len(ccc)};\n\n")

    w("const char32_t kDecompPool[] = {\n")
    for i in range(0, len(pool), 8):
        w("    " + ", ".join(f"0x{c:04X}" for c in pool[i:i + 8]) + ",\n")
    w("};\n")
    w(f"const std::size_t kDecompPoolSize = {len(pool)};\n\n")

    w("const Decomp kPresentationDecomps[] = {\n")
    for cp, off, ln in decomps:
        w(f"    {{0x{cp:04X}, {off}, {ln}}},\n")
    w("};\n")
    w(f"const std::size_t kPresentationDecompCount = {len(decomps)};\n\n")

    w("}  // namespace tashkeel::uni::tables\n")


if __name__ == "__main__":
    emit()
