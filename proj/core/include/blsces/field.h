#ifndef BLSCES_FIELD_H_
#define BLSCES_FIELD_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "blsces/error.h"
#include "blsces/u256.h"

namespace blsces {

namespace field_detail {

constexpr uint64_t neg_inverse_mod_2_64(uint64_t p0) {
  uint64_t inv = 1;
  for (int i = 0; i < 7; ++i) inv *= 2 - p0 * inv;
  return ~inv + 1;
}

// 2^k mod p by repeated doubling.
constexpr U256 pow2_mod(const U256& p, unsigned k) {
  U256 x(1);
  for (unsigned i = 0; i < k; ++i) {
    U256 d;
    uint64_t carry = add_with_carry(d, x, x);
    U256 s;
    uint64_t borrow = sub_with_borrow(s, d, p);
    x = (carry != 0 || borrow == 0) ? s : d;
  }
  return x;
}

}  // namespace field_detail

// Prime field with elements held in Montgomery form. Params supplies
// `static constexpr U256 kModulus`, an odd prime below 2^255.
template <class Params>
class PrimeField {
 public:
  static constexpr U256 kModulus = Params::kModulus;
  static constexpr uint64_t kInv =
      field_detail::neg_inverse_mod_2_64(kModulus.limb[0]);
  static constexpr U256 kR = field_detail::pow2_mod(kModulus, 256);
  static constexpr U256 kR2 = field_detail::pow2_mod(kModulus, 512);
  static constexpr size_t kBits = kModulus.bit_length();

  static_assert((kModulus.limb[0] & 1) == 1, "modulus must be odd");
  static_assert(kModulus.limb[3] < 0x7fffffffffffffffULL,
                "modulus must leave the top bit free");

  constexpr PrimeField() = default;

  static constexpr PrimeField zero() { return PrimeField(); }
  static constexpr PrimeField one() { return from_mont(kR); }

  static PrimeField from_u64(uint64_t v) { return reduce(U256(v)); }

  // Any 256-bit integer, reduced modulo p.
  static PrimeField reduce(const U256& v) {
    if (v < kModulus) return from_mont(mont_mul(v, kR2));
    // Shift-subtract long division for out-of-range inputs.
    U256 rem;
    for (size_t i = v.bit_length(); i-- > 0;) {
      rem = shl(rem, 1);
      if (v.bit(i)) rem.limb[0] |= 1;
      if (rem >= kModulus) sub_with_borrow(rem, rem, kModulus);
    }
    return from_mont(mont_mul(rem, kR2));
  }

  // Canonical integer in [0, p); returns nullopt otherwise.
  static std::optional<PrimeField> from_canonical(const U256& v) {
    if (v >= kModulus) return std::nullopt;
    return reduce(v);
  }

  static PrimeField from_bytes_be(std::span<const uint8_t> bytes) {
    auto v = from_canonical(U256::from_bytes_be(bytes));
    if (!v) throw Error(ErrorCode::kMalformedEncoding, "field element >= p");
    return *v;
  }

  U256 to_u256() const { return mont_mul(value_, U256(1)); }
  std::array<uint8_t, 32> to_bytes_be() const { return to_u256().to_bytes_be(); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_ == kR; }
  // Parity of the canonical integer representative.
  bool is_odd() const { return (to_u256().limb[0] & 1) != 0; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  PrimeField operator+(const PrimeField& o) const {
    PrimeField r;
    add_with_carry(r.value_, value_, o.value_);
    U256 s;
    if (sub_with_borrow(s, r.value_, kModulus) == 0) r.value_ = s;
    return r;
  }
  PrimeField operator-(const PrimeField& o) const {
    PrimeField r;
    if (sub_with_borrow(r.value_, value_, o.value_) != 0) {
      add_with_carry(r.value_, r.value_, kModulus);
    }
    return r;
  }
  PrimeField operator-() const { return zero() - *this; }
  PrimeField operator*(const PrimeField& o) const {
    return from_mont(mont_mul(value_, o.value_));
  }
  PrimeField& operator+=(const PrimeField& o) { return *this = *this + o; }
  PrimeField& operator-=(const PrimeField& o) { return *this = *this - o; }
  PrimeField& operator*=(const PrimeField& o) { return *this = *this * o; }

  PrimeField square() const { return *this * *this; }
  PrimeField dbl() const { return *this + *this; }

  PrimeField pow(const U256& e) const {
    PrimeField acc = one();
    for (size_t i = e.bit_length(); i-- > 0;) {
      acc = acc.square();
      if (e.bit(i)) acc *= *this;
    }
    return acc;
  }

  // Variable-time binary extended Euclid; the inverse of zero is zero.
  PrimeField inverse() const {
    if (is_zero()) return zero();
    U256 u = to_u256(), v = kModulus;
    U256 x1(1), x2;
    auto halve = [](U256& x) {
      if ((x.limb[0] & 1) != 0) add_with_carry(x, x, kModulus);
      x = shr(x, 1);
    };
    auto sub_mod = [](U256& x, const U256& y) {
      if (sub_with_borrow(x, x, y) != 0) add_with_carry(x, x, kModulus);
    };
    const U256 one_int(1);
    while (!(u == one_int) && !(v == one_int)) {
      while ((u.limb[0] & 1) == 0) {
        u = shr(u, 1);
        halve(x1);
      }
      while ((v.limb[0] & 1) == 0) {
        v = shr(v, 1);
        halve(x2);
      }
      if (u >= v) {
        sub_with_borrow(u, u, v);
        sub_mod(x1, x2);
      } else {
        sub_with_borrow(v, v, u);
        sub_mod(x2, x1);
      }
    }
    return reduce(u == one_int ? x1 : x2);
  }

  // Euler's criterion: 0 for zero, 1 for a nonzero square, -1 otherwise.
  int legendre() const {
    if (is_zero()) return 0;
    U256 e;
    sub_with_borrow(e, kModulus, U256(1));
    e = shr(e, 1);
    return pow(e).is_one() ? 1 : -1;
  }

  // Square root via the (p+1)/4 exponent, valid because p = 3 mod 4. Returns
  // the root with an even canonical representative.
  std::optional<PrimeField> sqrt() const {
    static_assert((kModulus.limb[0] & 3) == 3, "sqrt requires p = 3 mod 4");
    U256 e;
    add_with_carry(e, kModulus, U256(1));
    e = shr(e, 2);
    PrimeField y = pow(e);
    if (!(y.square() == *this)) return std::nullopt;
    if (y.is_odd()) y = -y;
    return y;
  }

 private:
  static constexpr PrimeField from_mont(const U256& v) {
    PrimeField r;
    r.value_ = v;
    return r;
  }

  // CIOS Montgomery multiplication: a * b * 2^-256 mod p. The modulus
  // leaves the top bit of the high limb clear, so the running total fits in
  // four limbs plus one carry word.
  static constexpr U256 mont_mul(const U256& a, const U256& b) {
    uint64_t t0 = 0, t1 = 0, t2 = 0, t3 = 0;
    for (size_t i = 0; i < 4; ++i) {
      const uint64_t bi = b.limb[i];
      u128 s = static_cast<u128>(a.limb[0]) * bi + t0;
      t0 = static_cast<uint64_t>(s);
      uint64_t ca = static_cast<uint64_t>(s >> 64);
      const uint64_t m = t0 * kInv;
      s = static_cast<u128>(m) * kModulus.limb[0] + t0;
      uint64_t cm = static_cast<uint64_t>(s >> 64);

      s = static_cast<u128>(a.limb[1]) * bi + t1 + ca;
      ca = static_cast<uint64_t>(s >> 64);
      s = static_cast<u128>(m) * kModulus.limb[1] + static_cast<uint64_t>(s) + cm;
      t0 = static_cast<uint64_t>(s);
      cm = static_cast<uint64_t>(s >> 64);

      s = static_cast<u128>(a.limb[2]) * bi + t2 + ca;
      ca = static_cast<uint64_t>(s >> 64);
      s = static_cast<u128>(m) * kModulus.limb[2] + static_cast<uint64_t>(s) + cm;
      t1 = static_cast<uint64_t>(s);
      cm = static_cast<uint64_t>(s >> 64);

      s = static_cast<u128>(a.limb[3]) * bi + t3 + ca;
      ca = static_cast<uint64_t>(s >> 64);
      s = static_cast<u128>(m) * kModulus.limb[3] + static_cast<uint64_t>(s) + cm;
      t2 = static_cast<uint64_t>(s);
      cm = static_cast<uint64_t>(s >> 64);

      t3 = ca + cm;
    }
    U256 r(t0, t1, t2, t3);
    U256 d;
    if (sub_with_borrow(d, r, kModulus) == 0) return d;
    return r;
  }

  U256 value_;
};

struct Bn254FpParams {
  static constexpr U256 kModulus{0x3c208c16d87cfd47ULL, 0x97816a916871ca8dULL,
                                 0xb85045b68181585dULL, 0x30644e72e131a029ULL};
};
struct Bn254FrParams {
  static constexpr U256 kModulus{0x43e1f593f0000001ULL, 0x2833e84879b97091ULL,
                                 0xb85045b68181585dULL, 0x30644e72e131a029ULL};
};
// Test-only toy base field.
struct ToyFpParams {
  static constexpr U256 kModulus{11};
};

using Fp = PrimeField<Bn254FpParams>;
using Fr = PrimeField<Bn254FrParams>;
using ToyFp = PrimeField<ToyFpParams>;

}  // namespace blsces

#endif  // BLSCES_FIELD_H_
