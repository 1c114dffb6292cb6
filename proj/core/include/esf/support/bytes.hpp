#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace esf {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);  // throws ParseError on odd length / bad digit

std::string base64_encode(ByteView data);
/// Strict RFC 4648 decoder. Whitespace is rejected; padding required.
Bytes base64_decode(std::string_view text);  // throws ParseError
bool looks_like_base64(std::string_view text);

inline Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}
inline std::string to_string(ByteView b) {
  return std::string(b.begin(), b.end());
}

}  // namespace esf
