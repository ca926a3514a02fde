#ifndef BLSCES_RANDOM_H_
#define BLSCES_RANDOM_H_

#include <cstdint>
#include <span>

namespace blsces {

class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<uint8_t> out) = 0;
};

// Operating-system CSPRNG.
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<uint8_t> out) override;
};

// Deterministic stream: block k = SHA-256("blsces-seeded-rng" || seed || k).
// Used for golden vectors and reproducible tests only.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(uint64_t seed) : seed_(seed) {}
  void fill(std::span<uint8_t> out) override;

 private:
  uint64_t seed_;
  uint64_t block_ = 0;
};

}  // namespace blsces

#endif  // BLSCES_RANDOM_H_
