#ifndef BLSCES_U256_H_
#define BLSCES_U256_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace blsces {

using u128 = unsigned __int128;

// Fixed-width 256-bit unsigned integer, four 64-bit limbs, least significant
// limb first.
struct U256 {
  std::array<uint64_t, 4> limb{0, 0, 0, 0};

  constexpr U256() = default;
  constexpr explicit U256(uint64_t v) : limb{v, 0, 0, 0} {}
  constexpr U256(uint64_t l0, uint64_t l1, uint64_t l2, uint64_t l3)
      : limb{l0, l1, l2, l3} {}

  constexpr bool is_zero() const {
    return (limb[0] | limb[1] | limb[2] | limb[3]) == 0;
  }
  constexpr bool bit(size_t i) const {
    return i < 256 && ((limb[i / 64] >> (i % 64)) & 1) != 0;
  }
  constexpr void set_bit(size_t i) { limb[i / 64] |= uint64_t{1} << (i % 64); }

  constexpr size_t bit_length() const {
    for (int i = 3; i >= 0; --i) {
      if (limb[i] != 0) {
        return static_cast<size_t>(i) * 64 + 64 -
               static_cast<size_t>(__builtin_clzll(limb[i]));
      }
    }
    return 0;
  }

  friend constexpr bool operator==(const U256&, const U256&) = default;

  friend constexpr bool operator<(const U256& a, const U256& b) {
    for (int i = 3; i >= 0; --i) {
      if (a.limb[i] != b.limb[i]) return a.limb[i] < b.limb[i];
    }
    return false;
  }
  friend constexpr bool operator>=(const U256& a, const U256& b) {
    return !(a < b);
  }
  friend constexpr bool operator>(const U256& a, const U256& b) {
    return b < a;
  }
  friend constexpr bool operator<=(const U256& a, const U256& b) {
    return !(b < a);
  }

  // Parses big-endian hex, with or without a 0x prefix. Throws on bad input.
  static U256 from_hex(std::string_view hex);
  // Parses a decimal string. Throws on bad input or overflow.
  static U256 from_decimal(std::string_view dec);
  static U256 from_bytes_be(std::span<const uint8_t> bytes);

  std::string to_hex() const;  // 64 lowercase hex digits, no prefix
  std::string to_decimal() const;
  std::array<uint8_t, 32> to_bytes_be() const;
};

// a + b, returning the carry out.
constexpr uint64_t add_with_carry(U256& out, const U256& a, const U256& b) {
  uint64_t carry = 0;
  for (size_t i = 0; i < 4; ++i) {
    u128 s = static_cast<u128>(a.limb[i]) + b.limb[i] + carry;
    out.limb[i] = static_cast<uint64_t>(s);
    carry = static_cast<uint64_t>(s >> 64);
  }
  return carry;
}

// a - b, returning the borrow out.
constexpr uint64_t sub_with_borrow(U256& out, const U256& a, const U256& b) {
  uint64_t borrow = 0;
  for (size_t i = 0; i < 4; ++i) {
    u128 d = static_cast<u128>(a.limb[i]) - b.limb[i] - borrow;
    out.limb[i] = static_cast<uint64_t>(d);
    borrow = static_cast<uint64_t>(d >> 64) & 1;
  }
  return borrow;
}

constexpr U256 shr(const U256& a, unsigned n) {
  U256 r;
  if (n >= 256) return r;
  const unsigned words = n / 64, bits = n % 64;
  for (unsigned i = 0; i + words < 4; ++i) {
    uint64_t lo = a.limb[i + words] >> bits;
    uint64_t hi = 0;
    if (bits != 0 && i + words + 1 < 4) {
      hi = a.limb[i + words + 1] << (64 - bits);
    }
    r.limb[i] = lo | hi;
  }
  return r;
}

constexpr U256 shl(const U256& a, unsigned n) {
  U256 r;
  if (n >= 256) return r;
  const unsigned words = n / 64, bits = n % 64;
  for (int i = 3; i >= static_cast<int>(words); --i) {
    uint64_t hi = a.limb[i - words] << bits;
    uint64_t lo = 0;
    if (bits != 0 && i - static_cast<int>(words) - 1 >= 0) {
      lo = a.limb[i - words - 1] >> (64 - bits);
    }
    r.limb[i] = hi | lo;
  }
  return r;
}

// Divides by a small divisor, returning the quotient and writing the
// remainder.
constexpr U256 div_small(const U256& a, uint64_t divisor, uint64_t* rem) {
  U256 q;
  u128 r = 0;
  for (int i = 3; i >= 0; --i) {
    u128 cur = (r << 64) | a.limb[i];
    q.limb[i] = static_cast<uint64_t>(cur / divisor);
    r = cur % divisor;
  }
  if (rem != nullptr) *rem = static_cast<uint64_t>(r);
  return q;
}

}  // namespace blsces

#endif  // BLSCES_U256_H_
