#include "rnck/normalize.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>

#include "rnck/errors.hpp"
#include "unicode_tables.hpp"

namespace rnck {
namespace {

// ---------------------------------------------------------------------------
// UTF-8
// ---------------------------------------------------------------------------

std::u32string decode_utf8(std::string_view in) {
  std::u32string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    const auto b0 = static_cast<unsigned char>(in[i]);
    char32_t cp;
    std::size_t len;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      throw Error(Errc::bad_encoding,
                  "invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > in.size()) {
      throw Error(Errc::bad_encoding,
                  "truncated UTF-8 sequence at offset " + std::to_string(i));
    }
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(in[i + k]);
      if ((b & 0xC0) != 0x80) {
        throw Error(Errc::bad_encoding, "invalid UTF-8 continuation at offset " +
                                            std::to_string(i + k));
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t min_for_len[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < min_for_len[len] || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw Error(Errc::bad_encoding,
                  "invalid UTF-8 code point at offset " + std::to_string(i));
    }
    out.push_back(cp);
    i += len;
  }
  return out;
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

// ---------------------------------------------------------------------------
// Canonical composition (NFC) over the generated tables. Hangul syllables
// decompose and compose algorithmically.
// ---------------------------------------------------------------------------

constexpr char32_t hangul_s_base = 0xAC00;
constexpr char32_t hangul_l_base = 0x1100;
constexpr char32_t hangul_v_base = 0x1161;
constexpr char32_t hangul_t_base = 0x11A7;
constexpr int hangul_l_count = 19;
constexpr int hangul_v_count = 21;
constexpr int hangul_t_count = 28;
constexpr int hangul_n_count = hangul_v_count * hangul_t_count;
constexpr int hangul_s_count = hangul_l_count * hangul_n_count;

unsigned combining_class(char32_t cp) {
  using namespace unicode;
  const auto* begin = combining_class_entries;
  const auto* end = begin + combining_class_count;
  const auto* it = std::lower_bound(
      begin, end, cp,
      [](const CombiningClassEntry& e, char32_t v) { return e.cp < v; });
  return (it != end && it->cp == cp) ? it->ccc : 0u;
}

void decompose_into(char32_t cp, std::u32string& out) {
  using namespace unicode;
  if (cp >= hangul_s_base &&
      cp < hangul_s_base + static_cast<char32_t>(hangul_s_count)) {
    const int s = static_cast<int>(cp - hangul_s_base);
    out.push_back(hangul_l_base + s / hangul_n_count);
    out.push_back(hangul_v_base + (s % hangul_n_count) / hangul_t_count);
    if (const int t = s % hangul_t_count; t != 0) {
      out.push_back(hangul_t_base + t);
    }
    return;
  }
  const auto* begin = decomposition_entries;
  const auto* end = begin + decomposition_count;
  const auto* it = std::lower_bound(
      begin, end, cp,
      [](const DecompositionEntry& e, char32_t v) { return e.cp < v; });
  if (it != end && it->cp == cp) {
    // Entries are pre-expanded to fully decomposed form.
    for (unsigned k = 0; k < it->length; ++k) {
      out.push_back(decomposition_data[it->offset + k]);
    }
    return;
  }
  out.push_back(cp);
}

void canonical_order(std::u32string& s) {
  // Stable sort of each maximal run of nonzero-CCC marks.
  std::size_t i = 0;
  while (i < s.size()) {
    if (combining_class(s[i]) == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && combining_class(s[j]) != 0) ++j;
    std::stable_sort(s.begin() + static_cast<std::ptrdiff_t>(i),
                     s.begin() + static_cast<std::ptrdiff_t>(j),
                     [](char32_t a, char32_t b) {
                       return combining_class(a) < combining_class(b);
                     });
    i = j;
  }
}

char32_t compose_pair(char32_t a, char32_t b) {
  // Returns 0 when the pair has no primary composite.
  if (a >= hangul_l_base && a < hangul_l_base + hangul_l_count &&
      b >= hangul_v_base && b < hangul_v_base + hangul_v_count) {
    return hangul_s_base +
           (static_cast<int>(a - hangul_l_base) * hangul_n_count) +
           (static_cast<int>(b - hangul_v_base) * hangul_t_count);
  }
  if (a >= hangul_s_base &&
      a < hangul_s_base + static_cast<char32_t>(hangul_s_count) &&
      (a - hangul_s_base) % hangul_t_count == 0 && b > hangul_t_base &&
      b < hangul_t_base + hangul_t_count) {
    return a + (b - hangul_t_base);
  }
  using namespace unicode;
  const auto* begin = composition_entries;
  const auto* end = begin + composition_count;
  const auto* it = std::lower_bound(begin, end, std::pair{a, b},
                                    [](const CompositionEntry& e,
                                       const std::pair<char32_t, char32_t>& v) {
                                      if (e.first != v.first)
                                        return e.first < v.first;
                                      return e.second < v.second;
                                    });
  return (it != end && it->first == a && it->second == b) ? it->composed : 0;
}

void compose(std::u32string& s) {
  if (s.empty()) return;
  std::size_t last_starter = std::u32string::npos;
  unsigned last_ccc = 0;
  std::u32string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
    const unsigned ccc = combining_class(cp);
    // Input is canonically ordered, so the last appended class is the
    // maximum since the starter; cp is unblocked iff it exceeds that, or
    // nothing but the starter itself has been appended.
    if (last_starter != std::u32string::npos &&
        (last_ccc == 0 || last_ccc < ccc)) {
      if (const char32_t c = compose_pair(out[last_starter], cp); c != 0) {
        out[last_starter] = c;
        continue;
      }
    }
    out.push_back(cp);
    if (ccc == 0) {
      last_starter = out.size() - 1;
      last_ccc = 0;
    } else {
      last_ccc = ccc;
    }
  }
  s = std::move(out);
}

char32_t simple_upper(char32_t cp) {
  using namespace unicode;
  const auto* begin = simple_uppercase_entries;
  const auto* end = begin + simple_uppercase_count;
  const auto* it = std::lower_bound(
      begin, end, cp,
      [](const CaseMapEntry& e, char32_t v) { return e.from < v; });
  return (it != end && it->from == cp) ? it->to : cp;
}

bool is_ascii(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return static_cast<unsigned char>(c) < 0x80;
  });
}

}  // namespace

std::string normalize_text(std::string_view input, NormalizePolicy policy) {
  if (is_ascii(input)) {
    // ASCII is closed under both composition and folding.
    std::string out(input);
    if (policy.case_fold) {
      for (char& c : out) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
      }
    }
    return out;
  }

  const std::u32string cps = decode_utf8(input);
  std::u32string work;
  work.reserve(cps.size());
  for (char32_t cp : cps) decompose_into(cp, work);
  if (policy.case_fold) {
    // Folding can turn a mark into a starter, so reorder afterwards.
    for (char32_t& cp : work) cp = simple_upper(cp);
  }
  canonical_order(work);
  compose(work);

  std::string out;
  out.reserve(work.size());
  for (char32_t cp : work) append_utf8(out, cp);
  return out;
}

EnumTable EnumTable::build(std::span<const std::string> values,
                           NormalizePolicy policy) {
  // canonical form -> distinct raw spellings that mapped to it
  std::map<std::string, std::vector<std::string>> seen;
  for (const auto& raw : values) {
    auto& raws = seen[normalize_text(raw, policy)];
    if (std::find(raws.begin(), raws.end(), raw) == raws.end()) {
      raws.push_back(raw);
    }
  }
  for (const auto& [canonical, raws] : seen) {
    if (raws.size() > 1) {
      std::string msg = "values collide after normalization to \"" +
                        canonical + "\":";
      for (const auto& r : raws) msg += " \"" + r + "\"";
      throw Error(Errc::ambiguous_value, msg);
    }
  }
  EnumTable table;
  table.policy_ = policy;
  table.entries_.reserve(seen.size());
  for (auto& [canonical, raws] : seen) table.entries_.push_back(canonical);
  return table;
}

EnumTable EnumTable::from_entries(std::vector<std::string> entries,
                                  NormalizePolicy policy) {
  EnumTable table;
  table.entries_ = std::move(entries);
  table.policy_ = policy;
  return table;
}

std::uint64_t EnumTable::encode(std::string_view value) const {
  const std::string canonical = normalize_text(value, policy_);
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), canonical);
  if (it == entries_.end() || *it != canonical) {
    throw Error(Errc::unknown_value,
                "value \"" + canonical + "\" not in enumeration table");
  }
  return static_cast<std::uint64_t>(it - entries_.begin());
}

const std::string& EnumTable::decode(std::uint64_t ordinal) const {
  if (ordinal >= entries_.size()) {
    throw Error(Errc::invalid_ordinal,
                "ordinal " + std::to_string(ordinal) + " out of range for " +
                    std::to_string(entries_.size()) + "-entry table");
  }
  return entries_[ordinal];
}

bool EnumTable::contains(std::string_view value) const {
  return std::binary_search(entries_.begin(), entries_.end(),
                            normalize_text(value, policy_));
}

void EnumTable::write(std::ostream& out) const {
  for (const auto& e : entries_) out << e << '\n';
}

EnumTable EnumTable::read(std::istream& in, NormalizePolicy policy) {
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    entries.push_back(line);
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] != normalize_text(entries[i], policy)) {
      throw Error(Errc::parse_error, "entry on line " + std::to_string(i + 1) +
                                         " is not in canonical form");
    }
    if (i > 0 && !(entries[i - 1] < entries[i])) {
      throw Error(Errc::parse_error,
                  "entries out of order at line " + std::to_string(i + 1));
    }
  }
  return from_entries(std::move(entries), policy);
}

}  // namespace rnck
