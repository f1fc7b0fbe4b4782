#pragma once

#include <cstddef>

// Unicode character database extracts backing text normalization.
// The .cpp side is generated; see scripts/gen_unicode_tables.py.

namespace rnck::unicode {

struct DecompositionEntry {
  char32_t cp;
  unsigned offset;  // into decomposition_data
  unsigned length;
};

struct CombiningClassEntry {
  char32_t cp;
  unsigned char ccc;
};

struct CompositionEntry {
  char32_t first;
  char32_t second;
  char32_t composed;
};

struct CaseMapEntry {
  char32_t from;
  char32_t to;
};

extern const char32_t decomposition_data[];
extern const DecompositionEntry decomposition_entries[];
extern const std::size_t decomposition_count;

extern const CombiningClassEntry combining_class_entries[];
extern const std::size_t combining_class_count;

extern const CompositionEntry composition_entries[];
extern const std::size_t composition_count;

extern const CaseMapEntry simple_uppercase_entries[];
extern const std::size_t simple_uppercase_count;

}  // namespace rnck::unicode
