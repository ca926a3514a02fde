#include "blsces/formats.h"

#include <json.hpp>

#include "blsces/error.h"
#include "blsces/hex.h"

namespace blsces::io {
namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

// Runs a field accessor, mapping nlohmann type/key errors to kParse.
template <class F>
auto field(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string(what) + ": " + e.what());
  }
}

void check_version(const json& j) {
  int v = field("version", [&] { return j.at("version").get<int>(); });
  if (v != kFormatVersion) {
    throw Error(ErrorCode::kParse, "unsupported format version " + std::to_string(v));
  }
}

json claims_to_json(const Credential& cred, json& out) {
  const std::string subject = cred.size() > 0 ? cred[0].subject : "";
  out["subject"] = subject;
  json arr = json::array();
  for (const Claim& c : cred.claims) {
    json jc = json::object();
    if (c.subject != subject) jc["subject"] = c.subject;
    if (c.property) jc["property"] = *c.property;
    if (c.value) {
      jc["value"] = *c.value;
    } else {
      jc["hidden"] = true;
    }
    arr.push_back(std::move(jc));
  }
  out["claims"] = arr;
  return out;
}

Credential claims_from_json(const json& j) {
  return field("claims", [&] {
    const std::string subject = j.at("subject").get<std::string>();
    Credential cred;
    for (const json& jc : j.at("claims")) {
      Claim c;
      c.subject = jc.value("subject", subject);
      if (jc.contains("property")) c.property = jc.at("property").get<std::string>();
      const bool hidden = jc.value("hidden", false);
      if (hidden == jc.contains("value")) {
        throw Error(ErrorCode::kParse, "a claim has either a value or \"hidden\": true");
      }
      if (!hidden) {
        if (!c.property) throw Error(ErrorCode::kParse, "visible claim without property");
        c.value = jc.at("value").get<std::string>();
      }
      cred.claims.push_back(std::move(c));
    }
    if (cred.size() == 0 || cred.size() > kMaxClaims) {
      throw Error(ErrorCode::kParse, "credential must have 1 to 64 claims");
    }
    return cred;
  });
}

json index_set_to_json(const IndexSet& s) { return s.indices(); }

IndexSet index_set_from_json(size_t width, const json& j) {
  auto idx = field("index set", [&] { return j.get<std::vector<size_t>>(); });
  return IndexSet::from_indices(width, idx);
}

json ceas_to_json(const Ceas& ceas) {
  json subsets = json::array();
  for (const auto& s : ceas.subsets()) subsets.push_back(index_set_to_json(s));
  return json{{"n", ceas.width()}, {"subsets", subsets}};
}

Ceas ceas_from_json(const json& j) {
  size_t n = field("ceas.n", [&] { return j.at("n").get<size_t>(); });
  std::vector<IndexSet> subsets;
  for (const json& s : field("ceas.subsets", [&] { return j.at("subsets"); })) {
    subsets.push_back(index_set_from_json(n, s));
  }
  return Ceas(n, std::move(subsets));
}

json sigs_to_json(const std::vector<bls::Signature>& sigs) {
  json arr = json::array();
  for (const auto& s : sigs) arr.push_back(s.to_hex());
  return arr;
}

std::vector<bls::Signature> sigs_from_json(const json& j) {
  std::vector<bls::Signature> out;
  for (const auto& s : field("signatures", [&] { return j.get<std::vector<std::string>>(); })) {
    out.push_back(bls::Signature::from_hex(s));
  }
  return out;
}

std::vector<uint8_t> counters_from_json(const json& j) {
  auto v = field("counters", [&] { return j.get<std::vector<unsigned>>(); });
  std::vector<uint8_t> out;
  for (unsigned c : v) {
    if (c >= bls::kCounterBound) throw Error(ErrorCode::kParse, "counter out of range");
    out.push_back(static_cast<uint8_t>(c));
  }
  return out;
}

json counters_to_json(const std::vector<uint8_t>& c) {
  return std::vector<unsigned>(c.begin(), c.end());
}

G2Point pk_from_hex(const std::string& hex) { return g2_deserialize(hex_decode(hex)); }

}  // namespace

std::string write_credential(const Credential& cred, const std::optional<Ceas>& ceas) {
  json j{{"version", kFormatVersion}};
  claims_to_json(cred, j);
  if (ceas) j["ceas"] = ceas_to_json(*ceas);
  return dump(j);
}

CredentialFile read_credential(std::string_view text) {
  json j = parse(text);
  check_version(j);
  CredentialFile f{claims_from_json(j), std::nullopt};
  if (j.contains("ceas")) f.ceas = ceas_from_json(j.at("ceas"));
  return f;
}

std::string write_ceas(const Ceas& ceas) { return dump(ceas_to_json(ceas)); }

Ceas read_ceas(std::string_view text) { return ceas_from_json(parse(text)); }

std::string write_signed_credential(const SignedCredential& sc) {
  json j{{"version", kFormatVersion}};
  claims_to_json(sc.cred, j);
  j["ceas"] = ceas_to_json(sc.ceas);
  j["signatures"] = sigs_to_json(sc.sigs);
  j["counters"] = counters_to_json(sc.counters);
  return dump(j);
}

SignedCredential read_signed_credential(std::string_view text) {
  json j = parse(text);
  check_version(j);
  SignedCredential sc;
  sc.cred = claims_from_json(j);
  sc.ceas = ceas_from_json(field("ceas", [&] { return j.at("ceas"); }));
  sc.sigs = sigs_from_json(field("signatures", [&] { return j.at("signatures"); }));
  sc.counters = counters_from_json(field("counters", [&] { return j.at("counters"); }));
  if (sc.sigs.size() != sc.cred.size() || sc.counters.size() != sc.cred.size()) {
    throw Error(ErrorCode::kParse, "need one signature and one counter per claim");
  }
  return sc;
}

std::string write_presentation(const ExtractedPresentation& pres) {
  json j{{"version", kFormatVersion}};
  claims_to_json(pres.sub_cred, j);
  j["ceas"] = ceas_to_json(pres.ext_sig.ceas);
  j["extraction_set"] = index_set_to_json(clear_indices(pres.sub_cred));
  j["counters"] = counters_to_json(pres.ext_sig.counters);
  j["signature"] = pres.ext_sig.sigma.to_hex();
  if (pres.kept_sigs) j["kept_signatures"] = sigs_to_json(*pres.kept_sigs);
  return dump(j);
}

ExtractedPresentation read_presentation(std::string_view text) {
  json j = parse(text);
  check_version(j);
  ExtractedPresentation p;
  p.sub_cred = claims_from_json(j);
  p.ext_sig.ceas = ceas_from_json(field("ceas", [&] { return j.at("ceas"); }));
  p.ext_sig.counters = counters_from_json(field("counters", [&] { return j.at("counters"); }));
  p.ext_sig.sigma = bls::Signature::from_hex(
      field("signature", [&] { return j.at("signature").get<std::string>(); }));
  if (j.contains("extraction_set")) {
    IndexSet x = index_set_from_json(p.sub_cred.size(), j.at("extraction_set"));
    if (!(x == clear_indices(p.sub_cred))) {
      throw Error(ErrorCode::kParse, "extraction_set disagrees with the visible claims");
    }
  }
  if (j.contains("kept_signatures")) p.kept_sigs = sigs_from_json(j.at("kept_signatures"));
  return p;
}

std::string write_secret_key(const bls::KeyPair& kp) {
  json j{{"version", kFormatVersion},
         {"sk", kp.sk.to_u256().to_hex()},
         {"pk", hex_encode(g2_serialize(kp.pk))}};
  return dump(j);
}

bls::KeyPair read_secret_key(std::string_view text) {
  json j = parse(text);
  check_version(j);
  auto sk_hex = field("sk", [&] { return j.at("sk").get<std::string>(); });
  auto bytes = hex_decode(sk_hex);
  if (bytes.size() != 32) throw Error(ErrorCode::kParse, "sk must be 32 bytes");
  auto sk = Scalar::from_canonical(U256::from_bytes_be(bytes));
  if (!sk || sk->is_zero()) throw Error(ErrorCode::kParse, "sk out of range");
  G2Point pk = bls::derive_public_key(*sk);
  if (j.contains("pk") && !(pk_from_hex(j.at("pk").get<std::string>()) == pk)) {
    throw Error(ErrorCode::kParse, "pk does not match sk");
  }
  return {*sk, pk};
}

std::string write_public_key(const G2Point& pk) {
  return dump(json{{"version", kFormatVersion}, {"pk", hex_encode(g2_serialize(pk))}});
}

G2Point read_public_key(std::string_view text) {
  json j = parse(text);
  check_version(j);
  return pk_from_hex(field("pk", [&] { return j.at("pk").get<std::string>(); }));
}

}  // namespace blsces::io
