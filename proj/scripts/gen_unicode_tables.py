#!/usr/bin/env python3
"""Regenerates include/deskbert/unicode_tables.hpp from Python's unicodedata.

The library needs five code-point classes (unprintable, combining mark,
punctuation/symbol, space, uppercase/digit) and an accent-fold map
(code point -> NFC of its NFD with combining marks removed). Tables are
emitted as sorted ranges / sorted entries for binary search.

Usage: python3 scripts/gen_unicode_tables.py > include/deskbert/unicode_tables.hpp
"""

import sys
import unicodedata

MAX_CP = 0x110000


def ranges(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
        if pred(cp):
            if start is None:
                start = cp
        elif start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def cat(cp):
    return unicodedata.category(chr(cp))


def fold(cp):
    decomposed = unicodedata.normalize("NFD", chr(cp))
    stripped = "".join(c for c in decomposed if unicodedata.category(c) != "Mn")
    return unicodedata.normalize("NFC", stripped)


def emit_ranges(name, rs, out):
    out.write(f"inline constexpr CpRange {name}[] = {{\n")
    for i in range(0, len(rs), 4):
        row = ", ".join(f"{{0x{lo:X}, 0x{hi:X}}}" for lo, hi in rs[i : i + 4])
        out.write(f"    {row},\n")
    out.write("};\n\n")


def main():
    out = sys.stdout

    unprintable = ranges(
        lambda cp: cat(cp) in ("Cc", "Cf", "Cs", "Co", "Cn") and cp not in (0x09, 0x0A)
    )
    mark = ranges(lambda cp: cat(cp) == "Mn")
    punct_sym = ranges(lambda cp: cat(cp)[0] in "PS")
    space = ranges(lambda cp: cat(cp) == "Zs")
    upper = ranges(lambda cp: cat(cp) == "Lu")
    digit = ranges(lambda cp: cat(cp) == "Nd")

    folds = []
    for cp in range(MAX_CP):
        if cat(cp) in ("Cs", "Co", "Cn"):
            continue
        f = fold(cp)
        if f != chr(cp):
            folds.append((cp, f))

    # Idempotence: a folded result must fold to itself and contain no marks.
    fold_sources = {cp for cp, _ in folds}
    for cp, f in folds:
        for c in f:
            assert ord(c) not in fold_sources, f"non-idempotent fold U+{cp:04X}"
            assert unicodedata.category(c) != "Mn", f"mark in fold of U+{cp:04X}"

    pool = bytearray()
    entries = []
    for cp, f in folds:
        enc = f.encode("utf-8")
        entries.append((cp, len(pool), len(enc)))
        pool.extend(enc)

    out.write("// Generated by scripts/gen_unicode_tables.py -- do not edit.\n")
    out.write(f"// Unicode data version {unicodedata.unidata_version}\n")
    out.write("#pragma once\n\n#include <cstdint>\n\n")
    out.write("namespace deskbert::unicode_tables {\n\n")
    out.write("struct CpRange { uint32_t lo; uint32_t hi; };\n")
    out.write("struct FoldEntry { uint32_t cp; uint32_t offset; uint32_t length; };\n\n")

    emit_ranges("kUnprintable", unprintable, out)
    emit_ranges("kCombiningMark", mark, out)
    emit_ranges("kPunctOrSymbol", punct_sym, out)
    emit_ranges("kSpaceSeparator", space, out)
    emit_ranges("kUppercase", upper, out)
    emit_ranges("kDecimalDigit", digit, out)

    out.write("inline constexpr FoldEntry kFoldEntries[] = {\n")
    for i in range(0, len(entries), 4):
        row = ", ".join(f"{{0x{cp:X}, {off}, {ln}}}" for cp, off, ln in entries[i : i + 4])
        out.write(f"    {row},\n")
    out.write("};\n\n")

    out.write("inline constexpr unsigned char kFoldPool[] = {\n")
    for i in range(0, len(pool), 16):
        row = ", ".join(str(b) for b in pool[i : i + 16])
        out.write(f"    {row},\n")
    out.write("};\n\n")
    out.write("}  // namespace deskbert::unicode_tables\n")


if __name__ == "__main__":
    main()
