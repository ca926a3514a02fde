#include "blsces/sha256.h"

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <stdexcept>
#include <vector>

#include "blsces/random.h"

namespace blsces {

Digest sha256(std::span<const uint8_t> data) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1 ||
      len != out.size()) {
    throw std::runtime_error("EVP_Digest(sha256) failed");
  }
  return out;
}

Digest sha256(std::string_view data) {
  return sha256(std::span<const uint8_t>(
      reinterpret_cast<const uint8_t*>(data.data()), data.size()));
}

void SystemRandom::fill(std::span<uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw std::runtime_error("RAND_bytes failed");
  }
}

void SeededRandom::fill(std::span<uint8_t> out) {
  static constexpr std::string_view kLabel = "blsces-seeded-rng";
  size_t pos = 0;
  while (pos < out.size()) {
    std::vector<uint8_t> input(kLabel.begin(), kLabel.end());
    for (int i = 7; i >= 0; --i) input.push_back(static_cast<uint8_t>(seed_ >> (8 * i)));
    for (int i = 7; i >= 0; --i) input.push_back(static_cast<uint8_t>(block_ >> (8 * i)));
    ++block_;
    Digest d = sha256(input);
    for (size_t i = 0; i < d.size() && pos < out.size(); ++i) out[pos++] = d[i];
  }
}

}  // namespace blsces
