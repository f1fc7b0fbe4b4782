#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rnck/hex.hpp"
#include "rnck/normalize.hpp"

namespace rnck {

// Minimal section width for an attribute with the given number of distinct
// values: ceil(log2(cardinality)). Throws Errc::degenerate_field below 2;
// a one-valued field carries no information.
unsigned compute_width(std::uint64_t cardinality);

enum class FieldKind {
  enumeration,       // ordinals resolved through an EnumTable
  unsigned_integer,  // raw value is the ordinal (identity enumeration)
  reserved_zero,     // section always encodes 0
};

std::string_view to_string(FieldKind kind) noexcept;
std::optional<FieldKind> field_kind_from(std::string_view token) noexcept;

// One attribute's slot in the key. `width` is derived from cardinality;
// build through make_field / make_enum_field to keep them consistent.
struct FieldSpec {
  std::string name;
  FieldKind kind = FieldKind::unsigned_integer;
  std::uint64_t cardinality = 0;  // distinct values incl. the null/sentinel
  unsigned width = 0;
  std::optional<EnumTable> enum_table;
};

FieldSpec make_field(std::string name, FieldKind kind,
                     std::uint64_t cardinality);
FieldSpec make_enum_field(std::string name, EnumTable table);

struct Violation {
  std::string field;  // empty for schema-level rules
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// A value supplied to encode (any alternative) or produced by decode
// (always an ordinal).
class FieldValue {
 public:
  enum class Kind { ordinal, uint, text };

  static FieldValue ordinal(std::uint64_t value) {
    return FieldValue(Kind::ordinal, value, {});
  }
  static FieldValue uint(std::uint64_t value) {
    return FieldValue(Kind::uint, value, {});
  }
  static FieldValue text(std::string value) {
    return FieldValue(Kind::text, 0, std::move(value));
  }

  Kind kind() const noexcept { return kind_; }
  std::uint64_t number() const noexcept { return number_; }
  const std::string& str() const noexcept { return text_; }

  friend bool operator==(const FieldValue&, const FieldValue&) = default;

 private:
  FieldValue(Kind kind, std::uint64_t number, std::string text)
      : kind_(kind), number_(number), text_(std::move(text)) {}

  Kind kind_;
  std::uint64_t number_;
  std::string text_;
};

// Ordered field list with the derived bit layout. Field 0 occupies the most
// significant bits; when total_bits < 64 the low bits are zero padding.
// Immutable after construction and safe to share across threads.
class KeySchema {
 public:
  KeySchema() = default;
  KeySchema(std::string name, std::vector<FieldSpec> fields);

  const std::string& name() const noexcept { return name_; }
  std::span<const FieldSpec> fields() const noexcept { return fields_; }
  std::size_t field_count() const noexcept { return fields_.size(); }
  unsigned total_bits() const noexcept { return total_bits_; }
  unsigned padding_bits() const noexcept { return 64 - total_bits_; }

  // LSB offset of field i. Negative while the schema overflows 64 bits;
  // codec operations refuse to run on such schemas.
  int shift(std::size_t i) const { return shifts_.at(i); }

  const ValidationReport& validation() const noexcept { return report_; }
  bool valid() const noexcept { return report_.ok(); }

 private:
  std::string name_;
  std::vector<FieldSpec> fields_;
  std::vector<int> shifts_;
  unsigned total_bits_ = 0;
  ValidationReport report_;
};

ValidationReport validate_schema(const KeySchema& schema);

// Bijective pack of one value per field. Throws Errc::invalid_schema,
// arity_mismatch, field_overflow, or unknown_value.
EncodedKey encode(const KeySchema& schema, std::span<const FieldValue> values);

// Inverse of encode; yields one ordinal per field. Rejects keys with
// nonzero padding (malformed_key) or out-of-cardinality sections
// (invalid_key) instead of masking silently.
std::vector<FieldValue> decode(const KeySchema& schema, EncodedKey key);

// Extreme keys sharing the first `leading.size()` sections: every key with
// that prefix lies in [lo, hi], and none without it does.
std::pair<EncodedKey, EncodedKey> prefix_range(
    const KeySchema& schema, std::span<const FieldValue> leading);

// Line-oriented schema definition text:
//
//   # comment
//   schema <name>
//   field <name> <kind> <cardinality>
//     value <canonical-string>        (enumeration entries, one per line)
//
// Enumeration lookups fold case; entries must already be canonical, which
// validate_schema checks. Parse errors carry line numbers.
KeySchema parse_schema(std::string_view text);
KeySchema load_schema(const std::filesystem::path& path);
std::string format_schema(const KeySchema& schema);

}  // namespace rnck
