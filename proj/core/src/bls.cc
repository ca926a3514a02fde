#include "blsces/bls.h"

#include <algorithm>
#include <set>

#include "blsces/hex.h"

namespace blsces::bls {

KeyPair keygen(RandomSource& rng) {
  Scalar sk = Scalar::random_nonzero(rng);
  return KeyPair{sk, derive_public_key(sk)};
}

G2Point derive_public_key(const Scalar& sk) {
  if (sk.is_zero()) throw Error(ErrorCode::kInvalidArgument, "secret key is zero");
  return Backend::g2_generator().mul(sk.to_u256());
}

Signature Signature::from_hex(std::string_view hex) {
  auto bytes = hex_decode(hex);
  if (bytes.size() != kCompressedBytes) {
    throw Error(ErrorCode::kMalformedEncoding, "signature must be 32 bytes");
  }
  Signature s;
  std::copy(bytes.begin(), bytes.end(), s.bytes.begin());
  return s;
}

std::string Signature::to_hex() const { return hex_encode(bytes); }

DigestSplit split_digest(const Digest& digest, size_t field_bits) {
  if (field_bits == 0 || field_bits >= 256) {
    throw Error(ErrorCode::kInvalidArgument, "field width must be in [1, 255]");
  }
  const U256 d = U256::from_bytes_be(digest);
  const size_t spare = 256 - field_bits;
  DigestSplit s;
  s.x = shr(d, static_cast<unsigned>(spare));
  s.sign_bit = d.bit(spare - 1);
  s.spare_bits = shr(shl(d, static_cast<unsigned>(field_bits)),
                     static_cast<unsigned>(field_bits));
  return s;
}

std::vector<uint8_t> with_counter(std::span<const uint8_t> msg, uint8_t counter) {
  std::vector<uint8_t> out(msg.begin(), msg.end());
  out.push_back(counter);
  return out;
}

HashToG1Result hash_to_g1(std::span<const uint8_t> msg) {
  return hash_to_curve<bn254::G1Curve>(msg);
}

std::optional<HashToG1Result> hash_to_g1_at(std::span<const uint8_t> msg,
                                            uint8_t counter) {
  return hash_to_curve_at<bn254::G1Curve>(msg, counter);
}

Signature sign_point(const Scalar& sk, const G1Point& h) {
  return Signature{g1_compress(h.mul(sk.to_u256()))};
}

std::pair<Signature, uint8_t> sign_with_counter(const Scalar& sk,
                                                std::span<const uint8_t> msg) {
  HashToG1Result h = hash_to_g1(msg);
  return {sign_point(sk, h.point), h.counter};
}

Signature sign(const Scalar& sk, std::span<const uint8_t> msg) {
  return sign_with_counter(sk, msg).first;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kAccept: return "accept";
    case Status::kReject: return "reject";
    case Status::kMalformedSignature: return "malformed_signature";
    case Status::kInvalidPublicKey: return "invalid_public_key";
    case Status::kLengthMismatch: return "length_mismatch";
    case Status::kDuplicateMessage: return "duplicate_message";
    case Status::kHashFailure: return "hash_failure";
  }
  return "unknown";
}

namespace {

std::optional<G1Point> decode_signature(const Signature& sig, std::string* why) {
  try {
    return g1_decompress(sig.bytes);
  } catch (const Error& e) {
    *why = e.what();
    return std::nullopt;
  }
}

bool public_key_valid(const G2Point& pk) {
  return !pk.is_identity() && Backend::g2_in_subgroup(pk);
}

}  // namespace

bool aggregate_pairing_check(std::span<const std::pair<G1Point, G2Point>> terms,
                             const G1Point& sigma) {
  // Sum hash points that share a key so each key costs one Miller loop.
  std::vector<std::pair<G1Point, G2Point>> grouped;
  for (const auto& [h, pk] : terms) {
    auto it = std::find_if(grouped.begin(), grouped.end(),
                           [&](const auto& g) { return g.second == pk; });
    if (it == grouped.end()) {
      grouped.emplace_back(h, pk);
    } else {
      it->first = it->first + h;
    }
  }
  grouped.emplace_back(-sigma, Backend::g2_generator());
  return Backend::multi_pairing(grouped).is_one();
}

Verdict verify(const G2Point& pk, std::span<const uint8_t> msg,
               const Signature& sig) {
  std::vector<uint8_t> m(msg.begin(), msg.end());
  return verify_aggregate(std::span<const G2Point>(&pk, 1),
                          std::span<const std::vector<uint8_t>>(&m, 1), sig);
}

Signature aggregate(std::span<const Signature> sigs) {
  G1Point acc = G1Point::identity();
  for (size_t i = 0; i < sigs.size(); ++i) {
    std::string why;
    auto p = decode_signature(sigs[i], &why);
    if (!p) {
      throw Error(ErrorCode::kMalformedEncoding,
                  "signature " + std::to_string(i) + ": " + why);
    }
    acc = acc + *p;
  }
  return Signature{g1_compress(acc)};
}

Verdict verify_aggregate(std::span<const G2Point> pks,
                         std::span<const std::vector<uint8_t>> msgs,
                         const Signature& agg) {
  if (pks.empty() || pks.size() != msgs.size()) {
    return {Status::kLengthMismatch, "need |pks| = |msgs| >= 1"};
  }
  std::set<std::vector<uint8_t>> seen;
  for (const auto& m : msgs) {
    if (!seen.insert(m).second) {
      return {Status::kDuplicateMessage, "messages must be pairwise distinct"};
    }
  }
  for (size_t i = 0; i < pks.size(); ++i) {
    if (!public_key_valid(pks[i])) {
      return {Status::kInvalidPublicKey,
              "public key " + std::to_string(i) + " is not a valid G2 element"};
    }
  }
  std::string why;
  auto sigma = decode_signature(agg, &why);
  if (!sigma) return {Status::kMalformedSignature, why};

  std::vector<std::pair<G1Point, G2Point>> terms;
  terms.reserve(msgs.size());
  for (size_t i = 0; i < msgs.size(); ++i) {
    try {
      terms.emplace_back(hash_to_g1(msgs[i]).point, pks[i]);
    } catch (const Error& e) {
      return {Status::kHashFailure, e.what()};
    }
  }
  if (!aggregate_pairing_check(terms, *sigma)) {
    return {Status::kReject, "pairing equation does not hold"};
  }
  return {Status::kAccept, ""};
}

}  // namespace blsces::bls
