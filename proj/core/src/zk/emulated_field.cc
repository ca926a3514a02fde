#include <boost/multiprecision/cpp_int.hpp>

#include "blsces/error.h"
#include "blsces/zk/gadgets.h"

namespace blsces::zk {
namespace {

using boost::multiprecision::cpp_int;

constexpr size_t kCarryBits = 69;  // signed column carries, offset by 2^68

cpp_int to_int(const U256& v) {
  cpp_int out = 0;
  for (int i = 3; i >= 0; --i) out = (out << 64) | v.limb[i];
  return out;
}

U256 to_u256(const cpp_int& v) {
  U256 out;
  for (int i = 0; i < 4; ++i) out.limb[i] = static_cast<uint64_t>((v >> (64 * i)) & ~uint64_t{0});
  return out;
}

Fr fr_from_u128(u128 v) {
  return Fr::from_u64(static_cast<uint64_t>(v >> 64)) * pow2(64) +
         Fr::from_u64(static_cast<uint64_t>(v));
}

}  // namespace

EmulatedField::EmulatedField(Builder& b, const U256& p) : b_(b), p_(p) {
  if (p.bit_length() > 255 || p.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "emulated modulus out of range");
  }
}

MulStep EmulatedField::reduce(const U256& a, const U256& b, uint64_t addend, const U256& p) {
  cpp_int t = to_int(a) * to_int(b) + addend;
  cpp_int pi = to_int(p);
  return {to_u256(t / pi), to_u256(t % pi)};
}

void EmulatedField::enforce_canonical(const Element& a) {
  Builder::Scope scope(b_, "lt_p");
  U256 pm1 = p_;
  pm1.limb[0] -= 1;  // p is odd
  // d = p - 1 - a, which wraps when a >= p and then fails the last column.
  U256 d;
  {
    u128 borrow = 0;
    for (int k = 0; k < 4; ++k) {
      u128 lhs = static_cast<u128>(pm1.limb[k]);
      u128 rhs = static_cast<u128>(a.value.limb[k]) + borrow;
      d.limb[k] = static_cast<uint64_t>(lhs - rhs);
      borrow = lhs < rhs ? 1 : 0;
    }
  }
  uint64_t carry = 0;
  LC prev_carry;
  for (int k = 0; k < 4; ++k) {
    auto bits = alloc_bits_of(b_, U256(d.limb[k]), 64);
    u128 s = static_cast<u128>(a.value.limb[k]) + d.limb[k] + carry;
    LC lhs = LC(a.limbs[k]) + pack_bits(bits) + prev_carry;
    if (k < 3) {
      carry = static_cast<uint64_t>(s >> 64);
      Bit c = alloc_bit(b_, carry != 0);
      lhs -= c.lc() * pow2(64);
      prev_carry = c.lc();
    }
    b_.enforce_equal(lhs, LC::constant(pm1.limb[k]));
  }
}

EmulatedField::Element EmulatedField::mul(const Element& a, const Element& b, uint64_t addend,
                                          const MulStep& step) {
  Builder::Scope scope(b_, "mul");
  Element q, r;
  q.value = step.q;
  r.value = step.r;
  for (int k = 0; k < 4; ++k) {
    q.limbs[k] = alloc_u64(b_, step.q.limb[k]);
    r.limbs[k] = alloc_u64(b_, step.r.limb[k]);
  }

  Var prod[4][4];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      u128 v = static_cast<u128>(a.value.limb[i]) * b.value.limb[j];
      prod[i][j] = b_.alloc_witness(fr_from_u128(v));
      b_.enforce(LC(a.limbs[i]), LC(b.limbs[j]), LC(prod[i][j]));
    }
  }

  // Column k: sum a_i b_j - sum q_i p_j - r_k + carry_{k-1} = 2^64 carry_k.
  const cpp_int offset = cpp_int(1) << (kCarryBits - 1);
  const Fr offset_fr = pow2(kCarryBits - 1);
  cpp_int carry = 0;
  LC prev_carry;
  for (int k = 0; k < 7; ++k) {
    LC col = prev_carry;
    cpp_int running = carry;
    if (k == 0) {
      col += LC::constant(addend);
      running += addend;
    }
    for (int i = 0; i < 4; ++i) {
      int j = k - i;
      if (j < 0 || j > 3) continue;
      col += LC(prod[i][j]);
      running += cpp_int(a.value.limb[i]) * b.value.limb[j];
      if (p_.limb[j] != 0) {
        col -= LC(q.limbs[i]) * Fr::from_u64(p_.limb[j]);
        running -= cpp_int(step.q.limb[i]) * p_.limb[j];
      }
    }
    if (k < 4) {
      col -= LC(r.limbs[k]);
      running -= step.r.limb[k];
    }
    if (k < 6) {
      // Floor division keeps the remainder in [0, 2^64).
      cpp_int c;
      if (running >= 0) {
        c = running >> 64;
      } else {
        cpp_int m = -running;
        c = -(m >> 64);
        if ((m & ((cpp_int(1) << 64) - 1)) != 0) c -= 1;
      }
      cpp_int shifted = c + offset;
      U256 bits_value = shifted < 0 ? U256() : to_u256(shifted);
      auto bits = alloc_bits_of(b_, bits_value, kCarryBits);
      LC carry_lc = pack_bits(bits) - LC::constant(offset_fr);
      col -= carry_lc * pow2(64);
      prev_carry = carry_lc;
      carry = c;
    }
    b_.enforce_equal(col, LC());
  }
  enforce_canonical(r);
  return r;
}

void EmulatedField::enforce_equals(const Element& a, const U256& c) {
  for (int k = 0; k < 4; ++k) b_.enforce_equal(LC(a.limbs[k]), LC::constant(c.limb[k]));
}

}  // namespace blsces::zk
