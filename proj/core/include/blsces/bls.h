#ifndef BLSCES_BLS_H_
#define BLSCES_BLS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blsces/group.h"
#include "blsces/random.h"
#include "blsces/sha256.h"

// BLS signatures with signatures in G1 and public keys in G2, plus
// aggregation. Hashing to G1 is try-and-increment over sha256(msg || c) with
// a one-byte counter c.
namespace blsces::bls {

inline constexpr unsigned kCounterBound = 256;

struct KeyPair {
  Scalar sk;
  G2Point pk;
};

KeyPair keygen(RandomSource& rng);
G2Point derive_public_key(const Scalar& sk);

struct Signature {
  CompressedPoint bytes{};

  static Signature from_hex(std::string_view hex);
  std::string to_hex() const;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// A digest read as a candidate x-coordinate: the leading `field_bits` bits
// (MSB first) form x, the next bit is the sign bit and everything after the
// x bits is reported as spare.
struct DigestSplit {
  U256 x;
  bool sign_bit = false;
  U256 spare_bits;
};
DigestSplit split_digest(const Digest& digest, size_t field_bits);

template <class Curve>
struct HashToCurveResult {
  JacobianPoint<Curve> point;
  typename Curve::Field x;
  bool sign_bit = false;
  uint8_t counter = 0;
  U256 spare_bits;
};

// Attempt for one digest: nullopt when x >= p or x^3 + b is zero or a
// non-residue.
template <class Curve>
std::optional<HashToCurveResult<Curve>> point_from_digest(const Digest& digest) {
  using F = typename Curve::Field;
  DigestSplit split = split_digest(digest, F::kBits);
  auto x = F::from_canonical(split.x);
  if (!x) return std::nullopt;
  F rhs = x->square() * *x + Curve::b();
  if (rhs.legendre() != 1) return std::nullopt;
  HashToCurveResult<Curve> r;
  r.point = decompress_point<Curve>(*x, split.sign_bit);
  r.x = *x;
  r.sign_bit = split.sign_bit;
  r.spare_bits = split.spare_bits;
  return r;
}

std::vector<uint8_t> with_counter(std::span<const uint8_t> msg, uint8_t counter);

// Evaluates only the iteration with the given counter.
template <class Curve>
std::optional<HashToCurveResult<Curve>> hash_to_curve_at(
    std::span<const uint8_t> msg, uint8_t counter) {
  auto r = point_from_digest<Curve>(sha256(with_counter(msg, counter)));
  if (r) r->counter = counter;
  return r;
}

// Full try-and-increment. Throws kCounterExhausted after kCounterBound misses.
template <class Curve>
HashToCurveResult<Curve> hash_to_curve(std::span<const uint8_t> msg) {
  for (unsigned c = 0; c < kCounterBound; ++c) {
    if (auto r = hash_to_curve_at<Curve>(msg, static_cast<uint8_t>(c))) {
      return *r;
    }
  }
  throw Error(ErrorCode::kCounterExhausted, "hash_to_curve: counter exhausted");
}

using HashToG1Result = HashToCurveResult<bn254::G1Curve>;

HashToG1Result hash_to_g1(std::span<const uint8_t> msg);
std::optional<HashToG1Result> hash_to_g1_at(std::span<const uint8_t> msg,
                                            uint8_t counter);

Signature sign(const Scalar& sk, std::span<const uint8_t> msg);
// Also reports the try-and-increment counter of the signed point.
std::pair<Signature, uint8_t> sign_with_counter(const Scalar& sk,
                                                std::span<const uint8_t> msg);
Signature sign_point(const Scalar& sk, const G1Point& h);

enum class Status {
  kAccept,
  kReject,
  kMalformedSignature,
  kInvalidPublicKey,
  kLengthMismatch,
  kDuplicateMessage,
  kHashFailure,
};
std::string_view status_name(Status s);

struct Verdict {
  Status status = Status::kReject;
  std::string detail;

  bool accepted() const { return status == Status::kAccept; }
};

Verdict verify(const G2Point& pk, std::span<const uint8_t> msg,
               const Signature& sig);

// Sum of the decoded points; the empty sum is the identity encoding.
// Throws kMalformedEncoding naming the offending index.
Signature aggregate(std::span<const Signature> sigs);

Verdict verify_aggregate(std::span<const G2Point> pks,
                         std::span<const std::vector<uint8_t>> msgs,
                         const Signature& agg);

// prod e(h_i, pk_i) == e(sigma, g2), with terms sharing a key summed first.
bool aggregate_pairing_check(std::span<const std::pair<G1Point, G2Point>> terms,
                             const G1Point& sigma);

}  // namespace blsces::bls

#endif  // BLSCES_BLS_H_
