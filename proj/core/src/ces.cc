#include "blsces/ces.h"

#include "blsces/error.h"

namespace blsces {
namespace {

void require_all_visible(const Credential& cred) {
  for (size_t i = 0; i < cred.size(); ++i) {
    if (cred[i].hidden() || !cred[i].property) {
      throw Error(ErrorCode::kHiddenClaim,
                  "claim " + std::to_string(i) + " is hidden at issuance");
    }
  }
}

void require_extractable(const IndexSet& x, size_t n) {
  if (x.width() != n) {
    throw Error(ErrorCode::kWidthMismatch, "extraction set width differs from N");
  }
  if (x.empty()) throw Error(ErrorCode::kInvalidArgument, "extraction set is empty");
}

ExtractedPresentation assemble(const Credential& source, const Ceas& ceas,
                               const IndexSet& x,
                               const std::vector<bls::Signature>& sig_at,
                               const std::vector<uint8_t>& counter_at,
                               ExtractOptions opts) {
  ExtractedPresentation p;
  p.sub_cred = blind_outside(source, x, opts.blind_property);
  p.ext_sig.ceas = ceas;
  std::vector<bls::Signature> chosen;
  for (size_t i : x.indices()) {
    chosen.push_back(sig_at[i]);
    p.ext_sig.counters.push_back(counter_at[i]);
  }
  p.ext_sig.sigma = bls::aggregate(chosen);
  if (opts.reextractable) p.kept_sigs = std::move(chosen);
  return p;
}

}  // namespace

SignedCredential ces_sign(const Scalar& sk, const Credential& cred, const Ceas& ceas) {
  if (cred.size() != ceas.width()) {
    throw Error(ErrorCode::kWidthMismatch, "CEAS width differs from N");
  }
  require_all_visible(cred);
  SignedCredential sc{cred, ceas, {}, {}};
  const auto ceas_bytes = ceas.canonical_bytes();
  for (size_t i = 0; i < cred.size(); ++i) {
    auto msg = encode_claim_message(ceas_bytes, cred.size(), i, cred[i]);
    auto [sig, counter] = bls::sign_with_counter(sk, msg);
    sc.sigs.push_back(sig);
    sc.counters.push_back(counter);
  }
  return sc;
}

ExtractedPresentation ces_extract(const SignedCredential& sc, const IndexSet& x,
                                  ExtractOptions opts) {
  require_extractable(x, sc.cred.size());
  if (sc.sigs.size() != sc.cred.size() || sc.counters.size() != sc.cred.size()) {
    throw Error(ErrorCode::kLengthMismatch, "signed credential is incomplete");
  }
  return assemble(sc.cred, sc.ceas, x, sc.sigs, sc.counters, opts);
}

ExtractedPresentation ces_extract(const ExtractedPresentation& pres, const IndexSet& x,
                                  ExtractOptions opts) {
  const size_t n = pres.sub_cred.size();
  require_extractable(x, n);
  if (!pres.kept_sigs) {
    throw Error(ErrorCode::kMissingWitness,
                "presentation was not extracted in re-extractable mode");
  }
  const IndexSet visible = clear_indices(pres.sub_cred);
  if (!x.is_subset_of(visible)) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "extraction set " + x.to_string() + " includes hidden claims");
  }
  const auto vis = visible.indices();
  if (pres.kept_sigs->size() != vis.size() || pres.ext_sig.counters.size() != vis.size()) {
    throw Error(ErrorCode::kLengthMismatch, "kept signatures do not match visible claims");
  }
  std::vector<bls::Signature> sig_at(n);
  std::vector<uint8_t> counter_at(n);
  for (size_t k = 0; k < vis.size(); ++k) {
    sig_at[vis[k]] = (*pres.kept_sigs)[k];
    counter_at[vis[k]] = pres.ext_sig.counters[k];
  }
  return assemble(pres.sub_cred, pres.ext_sig.ceas, x, sig_at, counter_at, opts);
}

std::string_view ces_status_name(CesStatus s) {
  switch (s) {
    case CesStatus::kAccept: return "accept";
    case CesStatus::kEmptyExtraction: return "empty_extraction";
    case CesStatus::kWidthMismatch: return "width_mismatch";
    case CesStatus::kNotInCeas: return "not_in_ceas";
    case CesStatus::kCounterMismatch: return "counter_mismatch";
    case CesStatus::kBadCounter: return "bad_counter";
    case CesStatus::kMalformedSignature: return "malformed_signature";
    case CesStatus::kInvalidPublicKey: return "invalid_public_key";
    case CesStatus::kPairingFailure: return "pairing_failure";
  }
  return "unknown";
}

CesVerdict ces_verify(const G2Point& pk, const ExtractedPresentation& pres) {
  CesVerdict v;
  auto fail = [&](CesStatus s, std::string detail) {
    v.status = s;
    v.detail = std::move(detail);
    return v;
  };
  const Credential& sub = pres.sub_cred;
  const ExtractedSignature& es = pres.ext_sig;
  const size_t n = sub.size();
  if (n == 0 || n > kMaxClaims) return fail(CesStatus::kWidthMismatch, "bad claim count");
  VerifyTranscript& t = v.transcript;
  t.n = n;
  t.x_prime = clear_indices(sub);
  if (t.x_prime.empty()) return fail(CesStatus::kEmptyExtraction, "no visible claims");
  // Sub-credentials keep the signed length, so N' must equal the CEAS width.
  if (es.ceas.width() != n) {
    return fail(CesStatus::kWidthMismatch, "CEAS width differs from N'");
  }
  t.in_ceas = es.ceas.contains(t.x_prime);
  const auto vis = t.x_prime.indices();
  if (es.counters.size() != vis.size()) {
    return fail(CesStatus::kCounterMismatch, "one counter per visible claim required");
  }

  const auto ceas_bytes = es.ceas.canonical_bytes();
  std::vector<std::pair<G1Point, G2Point>> terms;
  for (size_t k = 0; k < vis.size(); ++k) {
    const Claim& claim = sub[vis[k]];
    if (!claim.property) {
      return fail(CesStatus::kBadCounter, "visible claim without a property");
    }
    auto msg = encode_claim_message(ceas_bytes, n, vis[k], claim);
    auto h = bls::hash_to_g1_at(msg, es.counters[k]);
    msg.push_back(es.counters[k]);
    t.messages.push_back(std::move(msg));
    if (!h) {
      return fail(CesStatus::kBadCounter,
                  "counter of claim " + std::to_string(vis[k]) + " does not hash to G1");
    }
    t.hash_points.push_back(g1_compress(h->point));
    terms.emplace_back(h->point, pk);
  }

  G1Point sigma;
  try {
    sigma = g1_decompress(es.sigma.bytes);
  } catch (const Error& e) {
    return fail(CesStatus::kMalformedSignature, e.what());
  }
  if (pk.is_identity() || !Backend::g2_in_subgroup(pk)) {
    return fail(CesStatus::kInvalidPublicKey, "public key is not a valid G2 element");
  }
  t.pairing_ok = bls::aggregate_pairing_check(terms, sigma);

  if (!t.in_ceas) {
    return fail(CesStatus::kNotInCeas,
                "extraction set " + t.x_prime.to_string() + " is not allowed by the CEAS");
  }
  if (!t.pairing_ok) return fail(CesStatus::kPairingFailure, "aggregate pairing check failed");
  v.status = CesStatus::kAccept;
  return v;
}

}  // namespace blsces
