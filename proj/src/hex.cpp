#include "rnck/hex.hpp"

#include "rnck/errors.hpp"

namespace rnck {

std::string to_hex(EncodedKey key) {
  static constexpr char digits[] = "0123456789ABCDEF";
  std::string out(16, '0');
  for (int i = 0; i < 16; ++i) {
    out[i] = digits[(key >> (60 - 4 * i)) & 0xF];
  }
  return out;
}

EncodedKey from_hex(std::string_view text) {
  if (text.size() != 16) {
    throw Error(Errc::parse_error,
                "hex key must be exactly 16 characters, got " +
                    std::to_string(text.size()));
  }
  EncodedKey key = 0;
  for (std::size_t i = 0; i < 16; ++i) {
    const char c = text[i];
    unsigned digit;
    if (c >= '0' && c <= '9') {
      digit = static_cast<unsigned>(c - '0');
    } else if (c >= 'A' && c <= 'F') {
      digit = static_cast<unsigned>(c - 'A') + 10;
    } else if (c >= 'a' && c <= 'f') {
      digit = static_cast<unsigned>(c - 'a') + 10;
    } else {
      throw Error(Errc::parse_error,
                  "invalid hex character at position " + std::to_string(i));
    }
    key = (key << 4) | digit;
  }
  return key;
}

}  // namespace rnck
