#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rnck {

// Keys are plain uint64 values; every section layout lives in the schema,
// not the type.
using EncodedKey = std::uint64_t;

// Fixed-width uppercase hex rendering. Lexicographic order of the output
// equals numeric order of the input.
std::string to_hex(EncodedKey key);

// Parses exactly 16 hex characters, either case. Throws Errc::parse_error
// with the offending position otherwise.
EncodedKey from_hex(std::string_view text);

}  // namespace rnck
