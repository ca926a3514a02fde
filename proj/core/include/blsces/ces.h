#ifndef BLSCES_CES_H_
#define BLSCES_CES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blsces/bls.h"
#include "blsces/credential.h"

// Content extraction signatures from BLS: one signature per claim over its
// canonical message, extraction by aggregation, verification by a single
// aggregate pairing check plus CEAS membership.
namespace blsces {

struct SignedCredential {
  Credential cred;
  Ceas ceas;
  std::vector<bls::Signature> sigs;  // one per claim
  std::vector<uint8_t> counters;     // try-and-increment counter per claim

  friend bool operator==(const SignedCredential&, const SignedCredential&) = default;
};

struct ExtractedSignature {
  Ceas ceas;
  bls::Signature sigma;
  std::vector<uint8_t> counters;  // for the visible indices, ascending

  friend bool operator==(const ExtractedSignature&, const ExtractedSignature&) = default;
};

struct ExtractedPresentation {
  Credential sub_cred;
  ExtractedSignature ext_sig;
  // Per-claim signatures of the visible claims, kept only in re-extractable
  // mode so that a holder can extract again.
  std::optional<std::vector<bls::Signature>> kept_sigs;

  friend bool operator==(const ExtractedPresentation&,
                         const ExtractedPresentation&) = default;
};

SignedCredential ces_sign(const Scalar& sk, const Credential& cred, const Ceas& ceas);

struct ExtractOptions {
  bool reextractable = false;
  bool blind_property = false;
};

// Throws kIndexOutOfRange / kWidthMismatch / kInvalidArgument (empty x).
// Membership of x in the CEAS is left to the verifier.
ExtractedPresentation ces_extract(const SignedCredential& sc, const IndexSet& x,
                                  ExtractOptions opts = {});
// Further extraction from a re-extractable presentation; x must only cover
// visible claims.
ExtractedPresentation ces_extract(const ExtractedPresentation& pres, const IndexSet& x,
                                  ExtractOptions opts = {});

enum class CesStatus {
  kAccept,
  kEmptyExtraction,
  kWidthMismatch,
  kNotInCeas,
  kCounterMismatch,
  kBadCounter,
  kMalformedSignature,
  kInvalidPublicKey,
  kPairingFailure,
};
std::string_view ces_status_name(CesStatus s);

// Everything the verifier derived from the presentation on its way to the
// verdict. Depends only on the CEAS, N and the visible claims and counters.
struct VerifyTranscript {
  IndexSet x_prime;
  size_t n = 0;
  bool in_ceas = false;
  std::vector<std::vector<uint8_t>> messages;  // with counters appended
  std::vector<CompressedPoint> hash_points;
  bool pairing_ok = false;

  friend bool operator==(const VerifyTranscript&, const VerifyTranscript&) = default;
};

struct CesVerdict {
  CesStatus status = CesStatus::kPairingFailure;
  std::string detail;
  VerifyTranscript transcript;

  bool accepted() const { return status == CesStatus::kAccept; }
};

CesVerdict ces_verify(const G2Point& pk, const ExtractedPresentation& pres);

}  // namespace blsces

#endif  // BLSCES_CES_H_
