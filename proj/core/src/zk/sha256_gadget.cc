#include <string>
#include <vector>

#include "blsces/zk/gadgets.h"

namespace blsces::zk {

LC Bit::lc() const {
  if (const_) return LC::constant(neg_ ? 1 : 0);
  if (neg_) return LC(kOne) - LC(var_);
  return LC(var_);
}

Bit alloc_bit(Builder& b, bool value) {
  Var v = b.alloc_witness(value ? Fr::one() : Fr::zero());
  b.enforce_boolean(v);
  return Bit::of(v);
}

bool bit_value(const Builder& b, Bit x) {
  if (x.is_constant()) return x.constant_value();
  return b.value(x.var()).is_one() != x.negated();
}

namespace {

Bit raw(Bit x) { return x.negated() ? !x : x; }

}  // namespace

Bit bit_xor(Builder& b, Bit x, Bit y) {
  if (x.is_constant()) return x.constant_value() ? !y : y;
  if (y.is_constant()) return y.constant_value() ? !x : x;
  bool flip = x.negated() != y.negated();
  if (x.var() == y.var()) return Bit::constant(flip);
  // Negations factor out of xor, so only the raw variables are constrained.
  Bit rx = raw(x), ry = raw(y);
  bool v = bit_value(b, rx) != bit_value(b, ry);
  Var t = b.alloc_witness(v ? Fr::one() : Fr::zero());
  b.enforce(rx.lc() * Fr::from_u64(2), ry.lc(), rx.lc() + ry.lc() - LC(t));
  Bit out = Bit::of(t);
  return flip ? !out : out;
}

Bit bit_and(Builder& b, Bit x, Bit y) {
  if (x.is_constant()) return x.constant_value() ? y : Bit::constant(false);
  if (y.is_constant()) return y.constant_value() ? x : Bit::constant(false);
  if (x.var() == y.var()) return x.negated() == y.negated() ? x : Bit::constant(false);
  bool v = bit_value(b, x) && bit_value(b, y);
  Var t = b.alloc_witness(v ? Fr::one() : Fr::zero());
  b.enforce(x.lc(), y.lc(), LC(t));
  return Bit::of(t);
}

Bit bit_or(Builder& b, Bit x, Bit y) { return !bit_and(b, !x, !y); }

Bit bit_ch(Builder& b, Bit e, Bit f, Bit g) {
  if (e.is_constant()) return e.constant_value() ? f : g;
  if (f.is_constant() && g.is_constant()) {
    if (f.constant_value() == g.constant_value()) return f;
    return f.constant_value() ? e : !e;
  }
  if (!f.is_constant() && !g.is_constant() && f.var() == g.var() &&
      f.negated() == g.negated()) {
    return f;
  }
  bool v = bit_value(b, e) ? bit_value(b, f) : bit_value(b, g);
  Var c = b.alloc_witness(v ? Fr::one() : Fr::zero());
  // c = g + e * (f - g)
  b.enforce(e.lc(), f.lc() - g.lc(), LC(c) - g.lc());
  return Bit::of(c);
}

Bit bit_maj(Builder& b, Bit x, Bit y, Bit z) {
  if (x.is_constant()) return x.constant_value() ? bit_or(b, y, z) : bit_and(b, y, z);
  if (y.is_constant()) return bit_maj(b, y, x, z);
  if (z.is_constant()) return bit_maj(b, z, x, y);
  Bit t = bit_and(b, y, z);
  int sum = bit_value(b, x) + bit_value(b, y) + bit_value(b, z);
  Var m = b.alloc_witness(sum >= 2 ? Fr::one() : Fr::zero());
  // maj = t + x * (y + z - 2t)
  b.enforce(x.lc(), y.lc() + z.lc() - t.lc() * Fr::from_u64(2), LC(m) - t.lc());
  return Bit::of(m);
}

std::vector<Bit> alloc_byte_bits(Builder& b, std::span<const uint8_t> bytes) {
  std::vector<Bit> out;
  out.reserve(bytes.size() * 8);
  for (uint8_t byte : bytes) {
    for (int k = 7; k >= 0; --k) out.push_back(alloc_bit(b, (byte >> k) & 1));
  }
  return out;
}

std::vector<Bit> constant_byte_bits(std::span<const uint8_t> bytes) {
  std::vector<Bit> out;
  out.reserve(bytes.size() * 8);
  for (uint8_t byte : bytes) {
    for (int k = 7; k >= 0; --k) out.push_back(Bit::constant((byte >> k) & 1));
  }
  return out;
}

std::vector<Bit> decompose_byte(Builder& b, Var byte) {
  uint64_t v = b.computing() ? b.value(byte).to_u256().limb[0] : 0;
  std::vector<Bit> msb_first(8);
  LC packed;
  for (int k = 7; k >= 0; --k) {
    Bit bit = alloc_bit(b, (v >> k) & 1);
    msb_first[7 - k] = bit;
    packed.add(bit.var(), pow2(k));
  }
  b.enforce_equal(packed, LC(byte));
  return msb_first;
}

std::vector<Bit> alloc_bits_of(Builder& b, const U256& value, size_t bits) {
  std::vector<Bit> out;
  out.reserve(bits);
  for (size_t i = 0; i < bits; ++i) out.push_back(alloc_bit(b, value.bit(i)));
  return out;
}

const Fr& pow2(size_t k) {
  static const std::vector<Fr> table = [] {
    std::vector<Fr> t{Fr::one()};
    for (int i = 0; i < 255; ++i) t.push_back(t.back() + t.back());
    return t;
  }();
  return table.at(k);
}

LC pack_bits(std::span<const Bit> lsb_first) {
  LC out;
  Fr constant = Fr::zero();
  for (size_t i = 0; i < lsb_first.size(); ++i) {
    const Bit& bit = lsb_first[i];
    if (bit.is_constant()) {
      if (bit.constant_value()) constant += pow2(i);
    } else if (bit.negated()) {
      constant += pow2(i);
      out.add(bit.var(), -pow2(i));
    } else {
      out.add(bit.var(), pow2(i));
    }
  }
  out.add(kOne, constant);
  return out;
}

Var alloc_u64(Builder& b, uint64_t value) {
  Var limb = b.alloc_witness(Fr::from_u64(value));
  auto bits = alloc_bits_of(b, U256(value), 64);
  b.enforce_equal(pack_bits(bits), LC(limb));
  return limb;
}

namespace {

constexpr uint32_t kK[64] = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4,
    0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe,
    0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f,
    0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7,
    0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc,
    0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116,
    0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
    0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7,
    0xc67178f2};

constexpr uint32_t kIv[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                             0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};

Word constant_word(uint32_t v) {
  Word w;
  for (int i = 0; i < 32; ++i) w[i] = Bit::constant((v >> i) & 1);
  return w;
}

Word rotr(const Word& x, int n) {
  Word out;
  for (int i = 0; i < 32; ++i) out[i] = x[(i + n) % 32];
  return out;
}

Word shr(const Word& x, int n) {
  Word out;
  for (int i = 0; i < 32; ++i) out[i] = i + n < 32 ? x[i + n] : Bit::constant(false);
  return out;
}

Word xor3(Builder& b, const Word& x, const Word& y, const Word& z) {
  Word out;
  for (int i = 0; i < 32; ++i) out[i] = bit_xor(b, bit_xor(b, x[i], y[i]), z[i]);
  return out;
}

// Sum of words plus a constant, modulo 2^32. Result and carry bits are
// fresh witness bits tied to the integer sum by one linear constraint.
Word add_words(Builder& b, std::initializer_list<const Word*> words, uint32_t k) {
  uint64_t const_part = k;
  uint64_t value = k;
  uint64_t max = k;
  LC sum;
  bool all_constant = true;
  for (const Word* w : words) {
    max += 0xffffffffULL;
    for (int i = 0; i < 32; ++i) {
      const Bit& bit = (*w)[i];
      if (bit.is_constant()) {
        const_part += uint64_t{bit.constant_value()} << i;
      } else {
        all_constant = false;
      }
      if (bit_value(b, bit)) value += uint64_t{1} << i;
    }
    sum += pack_bits(*w);
  }
  if (all_constant) return constant_word(static_cast<uint32_t>(const_part));
  sum += LC::constant(uint64_t{k});
  size_t carry_bits = U256(max >> 32).bit_length();
  Word out;
  LC packed;
  for (int i = 0; i < 32; ++i) {
    out[i] = alloc_bit(b, (value >> i) & 1);
    packed.add(out[i].var(), pow2(i));
  }
  for (size_t j = 0; j < carry_bits; ++j) {
    Bit c = alloc_bit(b, (value >> (32 + j)) & 1);
    packed.add(c.var(), pow2(32 + j));
  }
  b.enforce_equal(sum, packed);
  return out;
}

std::array<Word, 8> compress(Builder& b, const std::array<Word, 8>& h,
                             std::span<const Bit> block) {
  std::array<Word, 64> w;
  {
    Builder::Scope scope(b, "schedule");
    for (int t = 0; t < 16; ++t) {
      for (int k = 0; k < 32; ++k) w[t][31 - k] = block[32 * t + k];
    }
    for (int t = 16; t < 64; ++t) {
      Word s0 = xor3(b, rotr(w[t - 15], 7), rotr(w[t - 15], 18), shr(w[t - 15], 3));
      Word s1 = xor3(b, rotr(w[t - 2], 17), rotr(w[t - 2], 19), shr(w[t - 2], 10));
      w[t] = add_words(b, {&s1, &w[t - 7], &s0, &w[t - 16]}, 0);
    }
  }
  Word a = h[0], bb = h[1], c = h[2], d = h[3], e = h[4], f = h[5], g = h[6], hh = h[7];
  for (int t = 0; t < 64; ++t) {
    Builder::Scope scope(b, "round" + std::to_string(t));
    Word s1 = xor3(b, rotr(e, 6), rotr(e, 11), rotr(e, 25));
    Word ch;
    for (int i = 0; i < 32; ++i) ch[i] = bit_ch(b, e[i], f[i], g[i]);
    Word s0 = xor3(b, rotr(a, 2), rotr(a, 13), rotr(a, 22));
    Word maj;
    for (int i = 0; i < 32; ++i) maj[i] = bit_maj(b, a[i], bb[i], c[i]);
    Word new_e = add_words(b, {&d, &hh, &s1, &ch, &w[t]}, kK[t]);
    Word new_a = add_words(b, {&hh, &s1, &ch, &w[t], &s0, &maj}, kK[t]);
    hh = g;
    g = f;
    f = e;
    e = new_e;
    d = c;
    c = bb;
    bb = a;
    a = new_a;
  }
  Builder::Scope scope(b, "finalize");
  std::array<Word, 8> state = {a, bb, c, d, e, f, g, hh};
  std::array<Word, 8> out;
  for (int i = 0; i < 8; ++i) out[i] = add_words(b, {&h[i], &state[i]}, 0);
  return out;
}

}  // namespace

std::array<Bit, 256> sha256_gadget(Builder& b, std::span<const Bit> message) {
  Builder::Scope scope(b, "sha256");
  const uint64_t len_bits = message.size();
  std::vector<Bit> padded(message.begin(), message.end());
  padded.push_back(Bit::constant(true));
  while (padded.size() % 512 != 448) padded.push_back(Bit::constant(false));
  for (int k = 63; k >= 0; --k) padded.push_back(Bit::constant((len_bits >> k) & 1));

  std::array<Word, 8> h;
  for (int i = 0; i < 8; ++i) h[i] = constant_word(kIv[i]);
  for (size_t blk = 0; blk * 512 < padded.size(); ++blk) {
    Builder::Scope block_scope(b, "block" + std::to_string(blk));
    h = compress(b, h, std::span<const Bit>(padded).subspan(blk * 512, 512));
  }
  std::array<Bit, 256> digest;
  for (int wi = 0; wi < 8; ++wi) {
    for (int k = 0; k < 32; ++k) digest[32 * wi + k] = h[wi][31 - k];
  }
  return digest;
}

}  // namespace blsces::zk
