#ifndef BLSCES_BN254_H_
#define BLSCES_BN254_H_

#include <span>
#include <utility>

#include "blsces/curve.h"
#include "blsces/field.h"
#include "blsces/tower.h"

// The BN-254 (alt_bn128) pairing group: E: y^2 = x^3 + 3 over Fp, its sextic
// twist E': y^2 = x^3 + 3/xi over Fp2, and the optimal ate pairing into the
// order-r subgroup of Fp12*.
namespace blsces::bn254 {

struct G1Curve {
  using Field = Fp;
  static Fp b() { return Fp::from_u64(3); }
};

struct G2Curve {
  using Field = Fp2;
  static Fp2 b();
};

using G1 = JacobianPoint<G1Curve>;
using G2 = JacobianPoint<G2Curve>;

// BN parameter u; the Miller loop runs over 6u + 2.
inline constexpr uint64_t kBnU = 4965661367192848881ULL;

G1 g1_generator();
G2 g2_generator();

// Membership in the order-r subgroup of the twist (r * Q == O).
bool g2_in_subgroup(const G2& q);

// Untwist-Frobenius endomorphism on E'(Fp2).
G2 g2_frobenius(const G2& q);

Fp12 miller_loop(const G1& p, const G2& q);
Fp12 final_exponentiation(const Fp12& f);

// Optimal ate pairing. Inputs are assumed validated.
Fp12 ate_pairing(const G1& p, const G2& q);

// Product of pairings sharing one final exponentiation.
Fp12 ate_multi_pairing(std::span<const std::pair<G1, G2>> pairs);

}  // namespace blsces::bn254

#endif  // BLSCES_BN254_H_
