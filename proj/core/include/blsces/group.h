#ifndef BLSCES_GROUP_H_
#define BLSCES_GROUP_H_

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "blsces/bn254.h"
#include "blsces/curve.h"
#include "blsces/error.h"
#include "blsces/field.h"
#include "blsces/random.h"

namespace blsces {

// What the rest of the library needs from a pairing group. A vetted external
// implementation can be dropped in by providing a type satisfying this and
// pointing `Backend` at it.
template <class B>
concept PairingBackend =
    requires(const typename B::G1& p, const typename B::G2& q,
             std::span<const std::pair<typename B::G1, typename B::G2>> pairs) {
      typename B::BaseField;
      typename B::TargetField;
      { B::kEmbeddingDegree } -> std::convertible_to<unsigned>;
      { B::g1_generator() } -> std::same_as<typename B::G1>;
      { B::g2_generator() } -> std::same_as<typename B::G2>;
      { B::g2_in_subgroup(q) } -> std::same_as<bool>;
      { B::pairing(p, q) } -> std::same_as<typename B::TargetField>;
      { B::multi_pairing(pairs) } -> std::same_as<typename B::TargetField>;
    };

struct Bn254Backend {
  using BaseField = Fp;
  using TargetField = Fp12;
  using G1 = bn254::G1;
  using G2 = bn254::G2;
  static constexpr unsigned kEmbeddingDegree = 12;

  static G1 g1_generator() { return bn254::g1_generator(); }
  static G2 g2_generator() { return bn254::g2_generator(); }
  static bool g2_in_subgroup(const G2& q) { return bn254::g2_in_subgroup(q); }
  static Fp12 pairing(const G1& p, const G2& q) { return bn254::ate_pairing(p, q); }
  static Fp12 multi_pairing(std::span<const std::pair<G1, G2>> pairs) {
    return bn254::ate_multi_pairing(pairs);
  }
};

using Backend = Bn254Backend;
static_assert(PairingBackend<Backend>);

using G1Point = Backend::G1;
using G2Point = Backend::G2;

// Integer modulo the group order r.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(const Fr& v) : value_(v) {}

  static Scalar from_u64(uint64_t v) { return Scalar(Fr::from_u64(v)); }
  static std::optional<Scalar> from_canonical(const U256& v);
  // Uniform in [1, r) by rejection sampling.
  static Scalar random_nonzero(RandomSource& rng);

  const Fr& value() const { return value_; }
  U256 to_u256() const { return value_.to_u256(); }
  bool is_zero() const { return value_.is_zero(); }

  Scalar operator+(const Scalar& o) const { return Scalar(value_ + o.value_); }
  Scalar operator*(const Scalar& o) const { return Scalar(value_ * o.value_); }
  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  Fr value_;
};

class GtElement {
 public:
  GtElement() : value_(Fp12::one()) {}
  explicit GtElement(const Fp12& v) : value_(v) {}

  static GtElement identity() { return GtElement(); }

  const Fp12& value() const { return value_; }
  bool is_identity() const { return value_.is_one(); }
  GtElement operator*(const GtElement& o) const {
    return GtElement(value_ * o.value_);
  }
  GtElement pow(const Scalar& k) const {
    return GtElement(value_.pow(k.to_u256()));
  }
  friend bool operator==(const GtElement&, const GtElement&) = default;

 private:
  Fp12 value_;
};

struct GroupParams {
  U256 p;
  U256 r;
  uint64_t b = 3;
  G1Point g1;
  G2Point g2;
  unsigned embedding_degree = 0;

  static const GroupParams& bn254();
};

G1Point g1_add(const G1Point& a, const G1Point& b);
G1Point g1_scalar_mul(const Scalar& k, const G1Point& p);
G2Point g2_scalar_mul(const Scalar& k, const G2Point& q);

// Throws kOffCurve / kNotInSubgroup for invalid inputs.
GtElement pairing(const G1Point& p, const G2Point& q);
// Product of pairings with a single final exponentiation; same validation.
GtElement pairing_product(std::span<const std::pair<G1Point, G2Point>> pairs);

template <class F>
std::optional<F> sqrt_fp(const F& a) {
  return a.sqrt();
}

// ---------------------------------------------------------------------------
// Byte encodings. Field elements are 32-byte big-endian. A compressed point
// is its 32-byte x with kSignFlag set when y is odd; the identity is
// kIdentityFlag followed by zeros. G2 points are x.c1 || x.c0 || y.c1 || y.c0
// with all-zero bytes for the identity.
// ---------------------------------------------------------------------------

inline constexpr size_t kFieldBytes = 32;
inline constexpr size_t kCompressedBytes = 32;
inline constexpr size_t kG2Bytes = 128;
inline constexpr uint8_t kSignFlag = 0x80;
inline constexpr uint8_t kIdentityFlag = 0x40;

using CompressedPoint = std::array<uint8_t, kCompressedBytes>;

template <class Curve>
CompressedPoint compress_point(const JacobianPoint<Curve>& p) {
  CompressedPoint out{};
  auto a = p.to_affine();
  if (a.infinity) {
    out[0] = kIdentityFlag;
    return out;
  }
  out = a.x.to_bytes_be();
  if (a.y.is_odd()) out[0] |= kSignFlag;
  return out;
}

// y = (-1)^sign * sqrt(x^3 + b) with the even root taken as sqrt.
template <class Curve>
JacobianPoint<Curve> decompress_point(const typename Curve::Field& x,
                                      bool sign) {
  auto rhs = x.square() * x + Curve::b();
  auto y = rhs.sqrt();
  if (!y) {
    throw Error(ErrorCode::kNotQuadraticResidue, "x^3 + b is not a square");
  }
  return JacobianPoint<Curve>::from_affine_unchecked(x, sign ? -*y : *y);
}

template <class Curve>
JacobianPoint<Curve> decompress_point(std::span<const uint8_t> bytes) {
  if (bytes.size() != kCompressedBytes) {
    throw Error(ErrorCode::kMalformedEncoding, "compressed point must be 32 bytes");
  }
  CompressedPoint buf{};
  std::copy(bytes.begin(), bytes.end(), buf.begin());
  if ((buf[0] & kIdentityFlag) != 0) {
    bool rest_zero = true;
    for (size_t i = 1; i < buf.size(); ++i) rest_zero &= buf[i] == 0;
    if (buf[0] != kIdentityFlag || !rest_zero) {
      throw Error(ErrorCode::kMalformedEncoding, "bad identity encoding");
    }
    return JacobianPoint<Curve>::identity();
  }
  bool sign = (buf[0] & kSignFlag) != 0;
  buf[0] &= static_cast<uint8_t>(~kSignFlag);
  auto x = Curve::Field::from_canonical(U256::from_bytes_be(buf));
  if (!x) throw Error(ErrorCode::kMalformedEncoding, "x coordinate >= p");
  return decompress_point<Curve>(*x, sign);
}

CompressedPoint g1_compress(const G1Point& p);
G1Point g1_decompress(std::span<const uint8_t> bytes);
G1Point g1_decompress(const Fp& x, bool sign_bit);

std::array<uint8_t, kG2Bytes> g2_serialize(const G2Point& q);
// Validates the curve equation and subgroup membership.
G2Point g2_deserialize(std::span<const uint8_t> bytes);

// Test-only toy curve y^2 = x^3 + 3 over F_11.
struct ToyCurve {
  using Field = ToyFp;
  static ToyFp b() { return ToyFp::from_u64(3); }
};
using ToyPoint = JacobianPoint<ToyCurve>;

}  // namespace blsces

#endif  // BLSCES_GROUP_H_
