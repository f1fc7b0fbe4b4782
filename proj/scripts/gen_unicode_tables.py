#!/usr/bin/env python3
"""Regenerates src/unicode_tables.cpp from the Python unicodedata database.

Emits four tables:
  - full canonical decompositions (Hangul excluded, handled algorithmically)
  - canonical combining classes (nonzero entries only)
  - primary composition pairs (derived empirically from NFC behaviour, so
    composition exclusions need no separate list)
  - single-code-point uppercase mappings (multi-code-point full mappings
    are excluded on purpose; folding must stay 1:1)

Run from the repository root:  python3 scripts/gen_unicode_tables.py
"""

import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_S_BASE, HANGUL_S_COUNT = 0xAC00, 11172


def is_hangul_syllable(cp):
    return HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def full_canonical_decomposition(cp):
    """Fully expanded canonical decomposition of cp, or None."""
    if is_hangul_syllable(cp):
        return None
    nfd = unicodedata.normalize("NFD", chr(cp))
    if nfd == chr(cp):
        return None
    return [ord(c) for c in nfd]


def main():
    decomp = {}
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        d = full_canonical_decomposition(cp)
        if d:
            decomp[cp] = d

    ccc = {}
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        c = unicodedata.combining(chr(cp))
        if c:
            ccc[cp] = c

    # A pair (a, b) composes to c exactly when NFC says so; this bakes the
    # composition exclusions in without reading the exclusion list.
    comp = {}
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF or is_hangul_syllable(cp):
            continue
        raw = unicodedata.decomposition(chr(cp))
        if not raw or raw.startswith("<"):
            continue
        parts = [int(p, 16) for p in raw.split()]
        if len(parts) != 2:
            continue
        a, b = parts
        if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
            comp[(a, b)] = cp

    upper = {}
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        u = chr(cp).upper()
        if u != chr(cp) and len(u) == 1:
            upper[cp] = ord(u)

    seq_data = []
    decomp_rows = []
    for cp in sorted(decomp):
        seq = decomp[cp]
        decomp_rows.append((cp, len(seq_data), len(seq)))
        seq_data.extend(seq)

    out = sys.stdout
    out.write("// Generated by scripts/gen_unicode_tables.py -- do not edit.\n")
    out.write("// Unicode character database version %s.\n\n"
              % unicodedata.unidata_version)
    out.write('#include "unicode_tables.hpp"\n\n')
    out.write("namespace rnck::unicode {\n\n")

    out.write("const char32_t decomposition_data[%d] = {\n" % len(seq_data))
    for i in range(0, len(seq_data), 12):
        out.write("  " + ", ".join("0x%04X" % v for v in seq_data[i:i + 12]) + ",\n")
    out.write("};\n\n")

    out.write("const DecompositionEntry decomposition_entries[%d] = {\n"
              % len(decomp_rows))
    for cp, off, n in decomp_rows:
        out.write("  {0x%05X, %d, %d},\n" % (cp, off, n))
    out.write("};\n")
    out.write("const std::size_t decomposition_count = %d;\n\n" % len(decomp_rows))

    ccc_rows = sorted(ccc.items())
    out.write("const CombiningClassEntry combining_class_entries[%d] = {\n"
              % len(ccc_rows))
    for cp, c in ccc_rows:
        out.write("  {0x%05X, %d},\n" % (cp, c))
    out.write("};\n")
    out.write("const std::size_t combining_class_count = %d;\n\n" % len(ccc_rows))

    comp_rows = sorted(comp.items())
    out.write("const CompositionEntry composition_entries[%d] = {\n" % len(comp_rows))
    for (a, b), c in comp_rows:
        out.write("  {0x%05X, 0x%05X, 0x%05X},\n" % (a, b, c))
    out.write("};\n")
    out.write("const std::size_t composition_count = %d;\n\n" % len(comp_rows))

    upper_rows = sorted(upper.items())
    out.write("const CaseMapEntry simple_uppercase_entries[%d] = {\n" % len(upper_rows))
    for cp, u in upper_rows:
        out.write("  {0x%05X, 0x%05X},\n" % (cp, u))
    out.write("};\n")
    out.write("const std::size_t simple_uppercase_count = %d;\n\n" % len(upper_rows))

    out.write("}  // namespace rnck::unicode\n")


if __name__ == "__main__":
    main()
