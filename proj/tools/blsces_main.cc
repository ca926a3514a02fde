// Command-line front end. Every command prints one JSON diagnostic on stdout
// and exits 0 (success or accept), 1 (reject), 2 (malformed input) or 3
// (I/O failure).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "blsces/bls.h"
#include "blsces/ces.h"
#include "blsces/error.h"
#include "blsces/formats.h"
#include "blsces/hex.h"
#include "blsces/zk/zkces.h"
#include "vectors.h"

namespace blsces::cli {
namespace {

using nlohmann::json;

enum Exit { kOk = 0, kReject = 1, kMalformed = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw IoError("cannot write " + path);
}

int emit(const json& j, int code) {
  std::cout << j.dump() << std::endl;
  return code;
}

json verdict_base(const char* command, bool accepted) {
  return {{"command", command}, {"result", accepted ? "accept" : "reject"}};
}

zk::BackendParams load_params(const std::string& path) {
  if (path.empty()) {
    SystemRandom rng;
    return zk::make_backend(zk::default_backend_id())->setup(rng);
  }
  json j;
  try {
    j = json::parse(read_file(path));
    return {j.at("backend").get<std::string>(), hex_decode(j.at("data").get<std::string>())};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("backend params: ") + e.what());
  }
}

struct Options {
  std::string out, pk_out, params_out, sk, pk, cred, ceas, input, indices, predicate, proof,
      params, dump;
  std::optional<uint64_t> seed;
  bool reextractable = false, blind_property = false, toy = false;
};

int cmd_keygen(const Options& o) {
  std::unique_ptr<RandomSource> rng;
  if (o.seed) {
    rng = std::make_unique<SeededRandom>(*o.seed);
  } else {
    rng = std::make_unique<SystemRandom>();
  }
  zk::ZkKeys keys = zk::zk_setup(*rng, zk::default_backend_id());
  write_file(o.out, io::write_secret_key(keys.keys));
  if (!o.pk_out.empty()) write_file(o.pk_out, io::write_public_key(keys.keys.pk));
  if (!o.params_out.empty()) {
    json p{{"backend", keys.params.backend}, {"data", hex_encode(keys.params.data)}};
    write_file(o.params_out, p.dump(2) + "\n");
  }
  return emit({{"command", "keygen"},
               {"result", "ok"},
               {"pk", hex_encode(g2_serialize(keys.keys.pk))}},
              kOk);
}

int cmd_issue(const Options& o) {
  bls::KeyPair kp = io::read_secret_key(read_file(o.sk));
  io::CredentialFile f = io::read_credential(read_file(o.cred));
  std::optional<Ceas> ceas = f.ceas;
  if (!o.ceas.empty()) ceas = io::read_ceas(read_file(o.ceas));
  if (!ceas) throw Error(ErrorCode::kInvalidArgument, "no CEAS in the credential or --ceas");
  SignedCredential sc = ces_sign(kp.sk, f.cred, *ceas);
  write_file(o.out, io::write_signed_credential(sc));
  json counters = json::array();
  for (uint8_t c : sc.counters) counters.push_back(c);
  return emit({{"command", "issue"}, {"result", "ok"}, {"claims", sc.cred.size()},
               {"counters", counters}},
              kOk);
}

int cmd_extract(const Options& o) {
  std::string text = read_file(o.input);
  ExtractOptions opts{.reextractable = o.reextractable, .blind_property = o.blind_property};
  ExtractedPresentation pres;
  if (json::parse(text, nullptr, false).contains("signatures")) {
    SignedCredential sc = io::read_signed_credential(text);
    pres = ces_extract(sc, IndexSet::parse(sc.cred.size(), o.indices), opts);
  } else {
    ExtractedPresentation prev = io::read_presentation(text);
    pres = ces_extract(prev, IndexSet::parse(prev.sub_cred.size(), o.indices), opts);
  }
  write_file(o.out, io::write_presentation(pres));
  return emit({{"command", "extract"},
               {"result", "ok"},
               {"extraction_set", clear_indices(pres.sub_cred).indices()}},
              kOk);
}

int cmd_verify(const Options& o) {
  G2Point pk = io::read_public_key(read_file(o.pk));
  ExtractedPresentation pres = io::read_presentation(read_file(o.input));
  CesVerdict v = ces_verify(pk, pres);
  json j = verdict_base("verify", v.accepted());
  j["status"] = ces_status_name(v.status);
  j["detail"] = v.detail;
  j["transcript"] = {{"extraction_set", v.transcript.x_prime.indices()},
                     {"n", v.transcript.n},
                     {"in_ceas", v.transcript.in_ceas},
                     {"pairing_ok", v.transcript.pairing_ok}};
  return emit(j, v.accepted() ? kOk : kReject);
}

int cmd_prove(const Options& o) {
  SignedCredential sc = io::read_signed_credential(read_file(o.input));
  IndexSet x = IndexSet::parse(sc.cred.size(), o.indices);
  zk::Predicate pred = zk::Predicate::parse(o.predicate);
  zk::BackendParams params = load_params(o.params);
  zk::ProofBundle bundle = zk::prove_extraction(params, sc, x, pred);
  write_file(o.out, zk::write_proof_bundle(bundle));
  json j{{"command", "prove"}, {"result", "ok"}, {"backend", bundle.backend}};
  if (!o.dump.empty()) {
    std::vector<zk::HashToCurveWitness> ws;
    for (size_t i : x.indices()) {
      ws.push_back(zk::hash_to_curve_witness(zk::CurveParams::bn254(), sc.ceas, i, sc.cred[i]));
    }
    auto st = zk::build_statement(zk::CurveParams::bn254(), sc.cred, sc.ceas, ws, x, pred);
    write_file(o.dump, st.cs.dump());
    j["constraints"] = st.cs.num_constraints();
  }
  return emit(j, kOk);
}

int cmd_zk_verify(const Options& o) {
  G2Point pk = io::read_public_key(read_file(o.pk));
  zk::ProofBundle bundle = zk::read_proof_bundle(read_file(o.proof));
  zk::BackendParams params = load_params(o.params);
  zk::ZkVerdict v = zk::zk_verify(params, pk, bundle);
  json j = verdict_base("zk-verify", v.accepted());
  j["b1"] = v.b1;
  j["b2"] = v.b2;
  j["b3"] = v.b3;
  j["detail"] = v.detail;
  return emit(j, v.accepted() ? kOk : kReject);
}

int cmd_gen_vectors(const Options& o) {
  std::string text = o.toy ? toy_vectors() : bn254_vectors();
  if (o.out.empty()) {
    std::cout << text;
    return kOk;
  }
  write_file(o.out, text);
  return emit({{"command", "gen-vectors"}, {"result", "ok"}, {"curve", o.toy ? "toy" : "bn254"}},
              kOk);
}

int cmd_self_test(const Options& o) {
  auto checks = self_test(o.toy);
  bool ok = true;
  json arr = json::array();
  for (const auto& [name, pass] : checks) {
    arr.push_back({{"name", name}, {"pass", pass}});
    ok &= pass;
  }
  return emit({{"command", "self-test"}, {"result", ok ? "ok" : "fail"}, {"checks", arr}},
              ok ? kOk : kReject);
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsatisfied:
    case ErrorCode::kCounterExhausted: return kReject;
    default: return kMalformed;
  }
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"BLS content-extraction signatures"};
  app.require_subcommand(1);
  Options o;

  auto* keygen = app.add_subcommand("keygen", "Generate an issuer key pair");
  keygen->add_option("--out", o.out, "Secret key file")->required();
  keygen->add_option("--pk-out", o.pk_out, "Public key file");
  keygen->add_option("--params-out", o.params_out, "Proof backend parameters file");
  keygen->add_option("--seed", o.seed, "Deterministic seed (testing only)");

  auto* issue = app.add_subcommand("issue", "Sign every claim of a credential");
  issue->add_option("--sk", o.sk, "Secret key file")->required();
  issue->add_option("--cred", o.cred, "Credential file")->required();
  issue->add_option("--ceas", o.ceas, "CEAS file, if not in the credential");
  issue->add_option("--out", o.out, "Signed credential file")->required();

  auto* extract = app.add_subcommand("extract", "Extract a sub-credential");
  extract->add_option("--in", o.input, "Signed credential or presentation")->required();
  extract->add_option("--x", o.indices, "Indices to keep, e.g. 0,2")->required();
  extract->add_flag("--reextractable", o.reextractable, "Keep per-claim signatures");
  extract->add_flag("--blind-property", o.blind_property, "Hide property names too");
  extract->add_option("--out", o.out, "Presentation file")->required();

  auto* verify = app.add_subcommand("verify", "Verify a presentation");
  verify->add_option("--pk", o.pk, "Issuer public key file")->required();
  verify->add_option("--in", o.input, "Presentation file")->required();

  auto* prove = app.add_subcommand("prove", "Prove an extraction in zero knowledge");
  prove->add_option("--in", o.input, "Signed credential file")->required();
  prove->add_option("--x", o.indices, "Indices to prove")->required();
  prove->add_option("--predicate", o.predicate, "none | range:i:lo:hi | equals:i:value")
      ->default_val("none");
  prove->add_option("--params", o.params, "Proof backend parameters file");
  prove->add_option("--dump-constraints", o.dump, "Write the constraint system, one per line");
  prove->add_option("--out", o.out, "Proof bundle file")->required();

  auto* zkv = app.add_subcommand("zk-verify", "Verify a proof bundle");
  zkv->add_option("--pk", o.pk, "Issuer public key file")->required();
  zkv->add_option("--proof", o.proof, "Proof bundle file")->required();
  zkv->add_option("--params", o.params, "Proof backend parameters file");

  auto* vectors = app.add_subcommand("gen-vectors", "Emit deterministic test vectors");
  vectors->add_flag("--toy", o.toy, "Use the 11-element toy field");
  vectors->add_option("--out", o.out, "Output file (default stdout)");

  auto* selftest = app.add_subcommand("self-test", "Run internal consistency checks");
  selftest->add_flag("--toy", o.toy, "Toy-field checks only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit({{"result", "error"}, {"code", "usage"}, {"message", e.what()}}, kMalformed);
  }

  try {
    if (*keygen) return cmd_keygen(o);
    if (*issue) return cmd_issue(o);
    if (*extract) return cmd_extract(o);
    if (*verify) return cmd_verify(o);
    if (*prove) return cmd_prove(o);
    if (*zkv) return cmd_zk_verify(o);
    if (*vectors) return cmd_gen_vectors(o);
    if (*selftest) return cmd_self_test(o);
  } catch (const IoError& e) {
    return emit({{"result", "error"}, {"code", "io"}, {"message", e.what()}}, kIo);
  } catch (const Error& e) {
    return emit({{"result", "error"}, {"code", error_code_name(e.code())}, {"message", e.what()}},
                exit_for(e.code()));
  } catch (const std::exception& e) {
    return emit({{"result", "error"}, {"code", "malformed"}, {"message", e.what()}}, kMalformed);
  }
  return kMalformed;
}

}  // namespace blsces::cli

int main(int argc, char** argv) { return blsces::cli::run(argc, argv); }
