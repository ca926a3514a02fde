#include "blsces/bn254.h"

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <vector>

namespace blsces::bn254 {
namespace {

using boost::multiprecision::cpp_int;

cpp_int to_cpp_int(const U256& v) {
  cpp_int r = 0;
  for (int i = 3; i >= 0; --i) {
    r <<= 64;
    r += v.limb[i];
  }
  return r;
}

U256 to_u256(const cpp_int& v) {
  U256 r;
  cpp_int cur = v;
  for (size_t i = 0; i < 4; ++i) {
    r.limb[i] = static_cast<uint64_t>(cur & cpp_int(~uint64_t{0}));
    cur >>= 64;
  }
  return r;
}

Fp2 xi() { return Fp2{Fp::from_u64(9), Fp::one()}; }

}  // namespace

struct FrobeniusConstants {
  // gamma[k] = xi^(k (p - 1) / 6)
  std::array<Fp2, 6> gamma;
  FrobeniusConstants() {
    U256 e;
    sub_with_borrow(e, Fp::kModulus, U256(1));
    e = div_small(e, 6, nullptr);
    Fp2 g1 = xi().pow(e);
    gamma[0] = Fp2::one();
    for (size_t k = 1; k < 6; ++k) gamma[k] = gamma[k - 1] * g1;
  }
};

const FrobeniusConstants& frobenius_constants() {
  static const FrobeniusConstants kConstants;
  return kConstants;
}

namespace {

// Base-p digits of the hard part (p^4 - p^2 + 1) / r.
struct HardPartExponent {
  std::array<U256, 4> digits;
  size_t max_bits = 0;
  HardPartExponent() {
    cpp_int p = to_cpp_int(Fp::kModulus);
    cpp_int r = to_cpp_int(Fr::kModulus);
    cpp_int num = p * p * p * p - p * p + 1;
    cpp_int lambda = num / r;
    for (auto& d : digits) {
      d = to_u256(lambda % p);
      lambda /= p;
      max_bits = std::max(max_bits, d.bit_length());
    }
  }
};

const HardPartExponent& hard_part_exponent() {
  static const HardPartExponent kExponent;
  return kExponent;
}

// Sparse line value y_P - lambda x_P w + (lambda x_T - y_T) w^3 for a line of
// slope lambda through the twist point (x_T, y_T), untwisted and evaluated at
// P. Vertical-line denominators lie in Fp6 and vanish under the final
// exponentiation.
Fp12 line_value(const Fp2& lambda, const Fp2& xt, const Fp2& yt, const Fp& xp,
                const Fp& yp) {
  Fp12 l;
  l.c0.c0 = Fp2{yp, Fp::zero()};
  l.c1.c0 = -(lambda * xp);
  l.c1.c1 = lambda * xt - yt;
  return l;
}

struct AffineTwist {
  Fp2 x, y;
  bool infinity = false;
};

// Adds `q` into `t` and multiplies the line through them into `f`.
void add_step(Fp12& f, AffineTwist& t, const AffineTwist& q, const Fp& xp,
              const Fp& yp) {
  if (t.infinity) {
    t = q;
    return;
  }
  if (q.infinity) return;
  Fp2 lambda;
  if (t.x == q.x) {
    if (!(t.y == q.y)) {
      // Vertical line: contributes an Fp6 factor only.
      t.infinity = true;
      return;
    }
    lambda = (t.x.square() * Fp::from_u64(3)) * t.y.dbl().inverse();
  } else {
    lambda = (q.y - t.y) * (q.x - t.x).inverse();
  }
  f *= line_value(lambda, t.x, t.y, xp, yp);
  Fp2 x3 = lambda.square() - t.x - q.x;
  Fp2 y3 = lambda * (t.x - x3) - t.y;
  t.x = x3;
  t.y = y3;
}

void double_step(Fp12& f, AffineTwist& t, const Fp& xp, const Fp& yp) {
  add_step(f, t, t, xp, yp);
}

AffineTwist to_affine_twist(const G2& q) {
  auto a = q.to_affine();
  return AffineTwist{a.x, a.y, a.infinity};
}

}  // namespace

Fp2 G2Curve::b() {
  static const Fp2 kB = Fp2{Fp::from_u64(3), Fp::zero()} * xi().inverse();
  return kB;
}

G1 g1_generator() {
  return G1::from_affine(Fp::from_u64(1), Fp::from_u64(2));
}

G2 g2_generator() {
  static const G2 kGen = G2::from_affine(
      Fp2{*Fp::from_canonical(U256::from_decimal(
              "10857046999023057135944570762232829481370756359578518086990519993285655852781")),
          *Fp::from_canonical(U256::from_decimal(
              "11559732032986387107991004021392285783925812861821192530917403151452391805634"))},
      Fp2{*Fp::from_canonical(U256::from_decimal(
              "8495653923123431417604973247489272438418190587263600148770280649306958101930")),
          *Fp::from_canonical(U256::from_decimal(
              "4082367875863433681332203403145435568316851327593401208105741076214120093531"))});
  return kGen;
}

bool g2_in_subgroup(const G2& q) {
  return q.on_curve() && q.mul(Fr::kModulus).is_identity();
}

G2 g2_frobenius(const G2& q) {
  if (q.is_identity()) return q;
  const auto& c = frobenius_constants();
  auto a = q.to_affine();
  return G2::from_affine_unchecked(a.x.conjugate() * c.gamma[2],
                                   a.y.conjugate() * c.gamma[3]);
}

Fp12 miller_loop(const G1& p, const G2& q) {
  if (p.is_identity() || q.is_identity()) return Fp12::one();
  auto pa = p.to_affine();
  AffineTwist qa = to_affine_twist(q);
  const u128 loop = static_cast<u128>(kBnU) * 6 + 2;
  int top = 127;
  while (((loop >> top) & 1) == 0) --top;

  Fp12 f = Fp12::one();
  AffineTwist t = qa;
  for (int i = top - 1; i >= 0; --i) {
    f = f.square();
    double_step(f, t, pa.x, pa.y);
    if (((loop >> i) & 1) != 0) add_step(f, t, qa, pa.x, pa.y);
  }
  G2 q1 = g2_frobenius(q);
  G2 q2 = -g2_frobenius(q1);
  add_step(f, t, to_affine_twist(q1), pa.x, pa.y);
  add_step(f, t, to_affine_twist(q2), pa.x, pa.y);
  return f;
}

Fp12 final_exponentiation(const Fp12& f) {
  // Easy part: f^((p^6 - 1)(p^2 + 1)).
  Fp12 t = f.conjugate() * f.inverse();
  t = t.frobenius().frobenius() * t;

  // Hard part: simultaneous exponentiation over the Frobenius images.
  const auto& e = hard_part_exponent();
  std::array<Fp12, 4> base;
  base[0] = t;
  for (size_t i = 1; i < 4; ++i) base[i] = base[i - 1].frobenius();
  std::array<Fp12, 16> table;
  table[0] = Fp12::one();
  for (size_t mask = 1; mask < 16; ++mask) {
    size_t low = static_cast<size_t>(__builtin_ctzll(mask));
    table[mask] = table[mask & (mask - 1)] * base[low];
  }
  Fp12 acc = Fp12::one();
  for (size_t i = e.max_bits; i-- > 0;) {
    acc = acc.square();
    size_t idx = 0;
    for (size_t j = 0; j < 4; ++j) {
      if (e.digits[j].bit(i)) idx |= size_t{1} << j;
    }
    if (idx != 0) acc *= table[idx];
  }
  return acc;
}

Fp12 ate_pairing(const G1& p, const G2& q) {
  return final_exponentiation(miller_loop(p, q));
}

Fp12 ate_multi_pairing(std::span<const std::pair<G1, G2>> pairs) {
  Fp12 f = Fp12::one();
  for (const auto& [p, q] : pairs) f *= miller_loop(p, q);
  return final_exponentiation(f);
}

}  // namespace blsces::bn254

namespace blsces {

Fp12 Fp12::frobenius() const {
  const auto& c = bn254::frobenius_constants();
  auto a = coefficients();
  for (size_t k = 0; k < 6; ++k) a[k] = a[k].conjugate() * c.gamma[k];
  return from_coefficients(a);
}

}  // namespace blsces
