#pragma once

#include <stdexcept>
#include <string>

namespace rnck {

enum class Errc {
  degenerate_field,   // cardinality < 2, a field that carries no information
  invalid_schema,     // operation on a schema that failed validation
  arity_mismatch,     // wrong number of values for the schema
  field_overflow,     // numeric value >= field cardinality
  unknown_value,      // text not present in the enumeration table
  invalid_key,        // decoded section out of cardinality range
  malformed_key,      // nonzero padding or inconsistent section contents
  parse_error,        // unparseable text input (hex strings, schema files)
  bad_encoding,       // invalid UTF-8
  ambiguous_value,    // distinct inputs normalize to the same canonical form
  invalid_ordinal,    // enum ordinal out of table range
  invalid_variant,    // empty allele or similar
  position_overflow,  // variant position exceeds the 28-bit section
  invalid_country,    // letter outside A..Z
  invalid_number,     // digit string empty, too long, or non-decimal
  inconsistent_key,   // decoded sections contradict each other
  invalid_range,      // lo > hi
  format_error,       // index file malformed
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rnck
