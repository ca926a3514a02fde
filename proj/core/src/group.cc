#include "blsces/group.h"

#include <vector>

namespace blsces {
namespace {

void require_valid(const G1Point& p) {
  if (!p.on_curve()) throw Error(ErrorCode::kOffCurve, "G1 point not on curve");
}

void require_valid(const G2Point& q) {
  if (!q.on_curve()) throw Error(ErrorCode::kOffCurve, "G2 point not on curve");
  if (!Backend::g2_in_subgroup(q)) {
    throw Error(ErrorCode::kNotInSubgroup, "G2 point outside the r-torsion");
  }
}

}  // namespace

std::optional<Scalar> Scalar::from_canonical(const U256& v) {
  auto f = Fr::from_canonical(v);
  if (!f) return std::nullopt;
  return Scalar(*f);
}

Scalar Scalar::random_nonzero(RandomSource& rng) {
  const size_t top_bits = Fr::kBits % 64;
  for (;;) {
    std::array<uint8_t, 32> buf{};
    rng.fill(buf);
    U256 v = U256::from_bytes_be(buf);
    if (top_bits != 0) v.limb[3] &= (uint64_t{1} << top_bits) - 1;
    if (v.is_zero() || v >= Fr::kModulus) continue;
    return Scalar(*Fr::from_canonical(v));
  }
}

const GroupParams& GroupParams::bn254() {
  static const GroupParams kParams{Fp::kModulus,
                                   Fr::kModulus,
                                   3,
                                   Backend::g1_generator(),
                                   Backend::g2_generator(),
                                   Backend::kEmbeddingDegree};
  return kParams;
}

G1Point g1_add(const G1Point& a, const G1Point& b) {
  require_valid(a);
  require_valid(b);
  return a + b;
}

G1Point g1_scalar_mul(const Scalar& k, const G1Point& p) {
  require_valid(p);
  return p.mul(k.to_u256());
}

G2Point g2_scalar_mul(const Scalar& k, const G2Point& q) {
  if (!q.on_curve()) throw Error(ErrorCode::kOffCurve, "G2 point not on curve");
  return q.mul(k.to_u256());
}

GtElement pairing(const G1Point& p, const G2Point& q) {
  require_valid(p);
  require_valid(q);
  return GtElement(Backend::pairing(p, q));
}

GtElement pairing_product(std::span<const std::pair<G1Point, G2Point>> pairs) {
  for (const auto& [p, q] : pairs) {
    require_valid(p);
    require_valid(q);
  }
  return GtElement(Backend::multi_pairing(pairs));
}

CompressedPoint g1_compress(const G1Point& p) { return compress_point(p); }

G1Point g1_decompress(std::span<const uint8_t> bytes) {
  return decompress_point<bn254::G1Curve>(bytes);
}

G1Point g1_decompress(const Fp& x, bool sign_bit) {
  return decompress_point<bn254::G1Curve>(x, sign_bit);
}

std::array<uint8_t, kG2Bytes> g2_serialize(const G2Point& q) {
  std::array<uint8_t, kG2Bytes> out{};
  auto a = q.to_affine();
  if (a.infinity) return out;
  const Fp* parts[4] = {&a.x.c1, &a.x.c0, &a.y.c1, &a.y.c0};
  for (size_t i = 0; i < 4; ++i) {
    auto b = parts[i]->to_bytes_be();
    std::copy(b.begin(), b.end(), out.begin() + i * kFieldBytes);
  }
  return out;
}

G2Point g2_deserialize(std::span<const uint8_t> bytes) {
  if (bytes.size() != kG2Bytes) {
    throw Error(ErrorCode::kMalformedEncoding, "G2 encoding must be 128 bytes");
  }
  bool all_zero = true;
  for (uint8_t b : bytes) all_zero &= b == 0;
  if (all_zero) return G2Point::identity();
  Fp parts[4];
  for (size_t i = 0; i < 4; ++i) {
    parts[i] = Fp::from_bytes_be(bytes.subspan(i * kFieldBytes, kFieldBytes));
  }
  G2Point q = G2Point::from_affine(Fp2{parts[1], parts[0]}, Fp2{parts[3], parts[2]});
  if (!Backend::g2_in_subgroup(q)) {
    throw Error(ErrorCode::kNotInSubgroup, "G2 point outside the r-torsion");
  }
  return q;
}

}  // namespace blsces
