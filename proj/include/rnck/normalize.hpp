#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rnck {

struct NormalizePolicy {
  bool case_fold = false;  // upper-case fold after composing
};

// Canonical composed form, optionally upper-case folded. Idempotent.
// Throws Errc::bad_encoding on invalid UTF-8.
std::string normalize_text(std::string_view input, NormalizePolicy policy = {});

// Ordered table mapping canonical strings to small ordinals and back.
// Entries are kept in canonical byte order, so the ordinal order is the
// sort order of the attribute. Immutable once built.
class EnumTable {
 public:
  EnumTable() = default;

  // Normalizes, deduplicates, and sorts the inputs. Distinct inputs that
  // collide after normalization raise Errc::ambiguous_value listing the
  // colliders.
  static EnumTable build(std::span<const std::string> values,
                         NormalizePolicy policy = {});

  // Adopts entries as given, without normalizing or sorting. Used by the
  // schema parser; schema validation reports any ordering violations.
  static EnumTable from_entries(std::vector<std::string> entries,
                                NormalizePolicy policy = {});

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::span<const std::string> entries() const noexcept { return entries_; }
  NormalizePolicy policy() const noexcept { return policy_; }

  // Normalizes `value` and returns its ordinal. Throws Errc::unknown_value
  // when absent.
  std::uint64_t encode(std::string_view value) const;

  // Throws Errc::invalid_ordinal when ordinal >= size().
  const std::string& decode(std::uint64_t ordinal) const;

  bool contains(std::string_view value) const;

  // One canonical entry per line, in ordinal order.
  void write(std::ostream& out) const;
  static EnumTable read(std::istream& in, NormalizePolicy policy = {});

 private:
  std::vector<std::string> entries_;
  NormalizePolicy policy_;
};

}  // namespace rnck
