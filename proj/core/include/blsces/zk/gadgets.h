#ifndef BLSCES_ZK_GADGETS_H_
#define BLSCES_ZK_GADGETS_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "blsces/u256.h"
#include "blsces/zk/r1cs.h"

namespace blsces::zk {

// A boolean wire: a constant, or a variable constrained to {0,1}, possibly
// negated. Negation and constants are free.
class Bit {
 public:
  Bit() = default;
  static Bit constant(bool b) {
    Bit x;
    x.const_ = true;
    x.neg_ = b;
    return x;
  }
  static Bit of(Var v) {
    Bit x;
    x.var_ = v;
    return x;
  }

  bool is_constant() const { return const_; }
  bool constant_value() const { return neg_; }
  Var var() const { return var_; }
  bool negated() const { return !const_ && neg_; }
  Bit operator!() const {
    Bit x = *this;
    x.neg_ = !x.neg_;
    return x;
  }
  LC lc() const;

 private:
  bool const_ = false;
  bool neg_ = false;  // doubles as the value of a constant
  Var var_ = kOne;
};

Bit alloc_bit(Builder& b, bool value);
bool bit_value(const Builder& b, Bit x);

Bit bit_xor(Builder& b, Bit x, Bit y);
Bit bit_and(Builder& b, Bit x, Bit y);
Bit bit_or(Builder& b, Bit x, Bit y);
Bit bit_ch(Builder& b, Bit e, Bit f, Bit g);  // e ? f : g
Bit bit_maj(Builder& b, Bit x, Bit y, Bit z);

// Witness bits for bytes, most significant bit of each byte first.
std::vector<Bit> alloc_byte_bits(Builder& b, std::span<const uint8_t> bytes);
std::vector<Bit> constant_byte_bits(std::span<const uint8_t> bytes);
// Bits of a public byte variable, constrained to recompose to it.
std::vector<Bit> decompose_byte(Builder& b, Var byte);

using Word = std::array<Bit, 32>;  // least significant bit first

// SHA-256 of a bit string (whole bytes, MSB first). Padding is constant.
// Returns the digest bits, most significant first.
std::array<Bit, 256> sha256_gadget(Builder& b, std::span<const Bit> message);

// Witness bits of the low `bits` bits of value, least significant first.
std::vector<Bit> alloc_bits_of(Builder& b, const U256& value, size_t bits);
LC pack_bits(std::span<const Bit> lsb_first);
const Fr& pow2(size_t k);  // k < 256

// A 64-bit limb as a packed variable with a range check.
Var alloc_u64(Builder& b, uint64_t value);

// a * b + addend = q * p + r in 4x64-bit limbs.
struct MulStep {
  U256 q, r;
  friend bool operator==(const MulStep&, const MulStep&) = default;
};

// Arithmetic modulo p < 2^255 emulated over the constraint field.
class EmulatedField {
 public:
  struct Element {
    std::array<Var, 4> limbs;
    U256 value;  // meaningful in prover mode only
  };

  EmulatedField(Builder& b, const U256& p);

  const U256& modulus() const { return p_; }

  // Limbs must already be constrained to 64 bits.
  Element from_limbs(const std::array<Var, 4>& limbs, const U256& value) const {
    return {limbs, value};
  }
  // value <= p - 1.
  void enforce_canonical(const Element& a);
  // Returns r with a * b + addend = q * p + r, r < p, using the supplied
  // quotient and remainder.
  Element mul(const Element& a, const Element& b, uint64_t addend, const MulStep& step);
  void enforce_equals(const Element& a, const U256& c);

  // Honest quotient and remainder for a * b + addend.
  static MulStep reduce(const U256& a, const U256& b, uint64_t addend, const U256& p);

 private:
  Builder& b_;
  U256 p_;
};

}  // namespace blsces::zk

#endif  // BLSCES_ZK_GADGETS_H_
