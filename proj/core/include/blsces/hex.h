#ifndef BLSCES_HEX_H_
#define BLSCES_HEX_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blsces {

// Lowercase, no prefix.
std::string hex_encode(std::span<const uint8_t> bytes);
// Accepts either case; throws kParse on odd length or a non-hex digit.
std::vector<uint8_t> hex_decode(std::string_view hex);

}  // namespace blsces

#endif  // BLSCES_HEX_H_
