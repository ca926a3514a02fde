#include "vectors.h"

#include <json.hpp>

#include <functional>

#include "blsces/bls.h"
#include "blsces/ces.h"
#include "blsces/error.h"
#include "blsces/hex.h"
#include "blsces/zk/zkces.h"

namespace blsces::cli {
namespace {

using nlohmann::json;

constexpr char kGoldenSig[] = "2c81dbf6b57827ba4eb42c3fe2fbe4386f1608925d1eff69128479e0fd461a63";

std::vector<uint8_t> bytes_of(std::string_view s) { return {s.begin(), s.end()}; }

Credential sample_credential() {
  return Credential{{Claim::make("did:ex:alice", "name", "Alice"),
                     Claim::make("did:ex:alice", "age", "31"),
                     Claim::make("did:ex:alice", "country", "NL")}};
}

Ceas sample_ceas() {
  return Ceas(3, {IndexSet(3, 0b101), IndexSet(3, 0b010), IndexSet(3, 0b111)});
}

}  // namespace

std::string bn254_vectors() {
  json keys = json::array();
  for (uint64_t seed : {1, 7, 42}) {
    SeededRandom rng(seed);
    bls::KeyPair kp = bls::keygen(rng);
    keys.push_back({{"seed", seed},
                    {"sk", kp.sk.to_u256().to_hex()},
                    {"pk", hex_encode(g2_serialize(kp.pk))}});
  }

  SeededRandom rng(42);
  bls::KeyPair kp = bls::keygen(rng);
  std::vector<std::vector<uint8_t>> msgs = {bytes_of(""), bytes_of("abc"),
                                            bytes_of("hello world")};
  std::vector<uint8_t> ramp(64);
  for (size_t i = 0; i < ramp.size(); ++i) ramp[i] = static_cast<uint8_t>(i);
  msgs.push_back(ramp);
  json sigs = json::array();
  std::vector<bls::Signature> all;
  for (const auto& m : msgs) {
    auto h = bls::hash_to_g1(m);
    all.push_back(bls::sign(kp.sk, m));
    sigs.push_back({{"msg", hex_encode(m)},
                    {"counter", h.counter},
                    {"x", h.x.to_u256().to_hex()},
                    {"sign_bit", h.sign_bit ? 1 : 0},
                    {"signature", all.back().to_hex()}});
  }

  Credential cred = sample_credential();
  Ceas ceas = sample_ceas();
  SignedCredential sc = ces_sign(kp.sk, cred, ceas);
  json claims = json::array();
  for (size_t i = 0; i < cred.size(); ++i) {
    claims.push_back({{"index", i},
                      {"subject", cred[i].subject},
                      {"property", *cred[i].property},
                      {"value", *cred[i].value},
                      {"message", hex_encode(encode_claim_message(ceas, 3, i, cred[i]))},
                      {"counter", sc.counters[i]},
                      {"signature", sc.sigs[i].to_hex()}});
  }
  auto pres = ces_extract(sc, IndexSet(3, 0b101));
  json j{{"curve", "bn254"},
         {"keys", keys},
         {"bls", {{"seed", 42}, {"signatures", sigs}, {"aggregate", bls::aggregate(all).to_hex()}}},
         {"credential",
          {{"seed", 42},
           {"n", 3},
           {"ceas", hex_encode(ceas.canonical_bytes())},
           {"claims", claims},
           {"extraction", {{"x", {0, 2}}, {"aggregate", pres.ext_sig.sigma.to_hex()}}}}}};
  return j.dump(2) + "\n";
}

std::string toy_vectors() {
  json hashes = json::array();
  for (int k = 0; k < 32; ++k) {
    auto m = bytes_of("m" + std::to_string(k));
    auto h = bls::hash_to_curve<ToyCurve>(m);
    auto y = h.point.to_affine().y;
    hashes.push_back({{"msg", hex_encode(m)},
                      {"counter", h.counter},
                      {"x", h.x.to_u256().limb[0]},
                      {"sign_bit", h.sign_bit ? 1 : 0},
                      {"y", y.to_u256().limb[0]}});
  }
  json euler = json::array();
  for (uint64_t base = 0; base < 11; ++base) {
    auto c = zk::euler_chain(ToyFp::kModulus, U256(base));
    json steps = json::array();
    for (const auto& s : c.steps) steps.push_back({s.q.limb[0], s.r.limb[0]});
    euler.push_back({{"base", base}, {"result", c.result.limb[0]}, {"steps", steps}});
  }
  json j{{"curve", "toy"}, {"p", 11}, {"b", 3}, {"hashes", hashes}, {"euler", euler}};
  return j.dump(2) + "\n";
}

std::vector<std::pair<std::string, bool>> self_test(bool toy_only) {
  std::vector<std::pair<std::string, bool>> out;
  auto check = [&](const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception&) {
      ok = false;
    }
    out.emplace_back(name, ok);
  };

  check("toy_hash_witness", [] {
    Ceas ceas(2, {IndexSet::full(2)});
    for (int k = 0; k < 20; ++k) {
      Claim c = Claim::make("s", "p", std::to_string(k));
      auto w = zk::hash_to_curve_witness(zk::CurveParams::toy(), ceas, k % 2, c);
      auto h = bls::hash_to_curve<ToyCurve>(encode_claim_message(ceas, 2, k % 2, c));
      if (w.counter != h.counter || w.x != h.x.to_u256() || w.sign_bit != h.sign_bit) {
        return false;
      }
    }
    return true;
  });
  check("toy_euler_chain", [] {
    for (uint64_t base = 0; base < 11; ++base) {
      uint64_t direct = 1;
      for (int k = 0; k < 5; ++k) direct = direct * base % 11;
      if (zk::euler_chain(ToyFp::kModulus, U256(base)).result != U256(direct)) return false;
    }
    return true;
  });
  check("toy_statement", [] {
    Credential cred{{Claim::make("s", "age", "42"), Claim::make("s", "name", "Bo")}};
    Ceas ceas(2, {IndexSet(2, 0b01)});
    IndexSet x(2, 0b01);
    auto w = zk::hash_to_curve_witness(zk::CurveParams::toy(), ceas, 0, cred[0]);
    auto st = zk::build_statement(zk::CurveParams::toy(), cred, ceas, {w}, x,
                                  zk::Predicate::range(0, 18, 65));
    return !st.cs.first_unsatisfied(st.assignment).has_value();
  });
  if (toy_only) return out;

  check("golden_signature", [] {
    SeededRandom rng(42);
    auto kp = bls::keygen(rng);
    return bls::sign(kp.sk, bytes_of("abc")).to_hex() == kGoldenSig;
  });
  check("sign_verify", [] {
    SeededRandom rng(3);
    auto kp = bls::keygen(rng);
    auto m = bytes_of("self-test");
    auto sig = bls::sign(kp.sk, m);
    auto other = bytes_of("self-tesT");
    return bls::verify(kp.pk, m, sig).accepted() && !bls::verify(kp.pk, other, sig).accepted();
  });
  check("ces_round_trip", [] {
    SeededRandom rng(4);
    auto kp = bls::keygen(rng);
    auto sc = ces_sign(kp.sk, sample_credential(), sample_ceas());
    auto ok = ces_extract(sc, IndexSet(3, 0b101));
    auto bad = ces_extract(sc, IndexSet(3, 0b001));
    return ces_verify(kp.pk, ok).accepted() && !ces_verify(kp.pk, bad).accepted();
  });
  check("zk_round_trip", [] {
    SeededRandom rng(5);
    auto keys = zk::zk_setup(rng, zk::kTransparentBackend);
    auto sc = ces_sign(keys.keys.sk, sample_credential(), sample_ceas());
    auto bundle =
        zk::prove_extraction(keys.params, sc, IndexSet(3, 0b010), zk::Predicate::range(1, 18, 99));
    return zk::zk_verify(keys.params, keys.keys.pk, bundle).accepted();
  });
  return out;
}

}  // namespace blsces::cli
