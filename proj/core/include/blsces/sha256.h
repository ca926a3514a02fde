#ifndef BLSCES_SHA256_H_
#define BLSCES_SHA256_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace blsces {

using Digest = std::array<uint8_t, 32>;

Digest sha256(std::span<const uint8_t> data);
Digest sha256(std::string_view data);

}  // namespace blsces

#endif  // BLSCES_SHA256_H_
