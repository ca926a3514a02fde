#include "blsces/zk/zkces.h"

#include <charconv>

#include <json.hpp>

#include "blsces/error.h"
#include "blsces/hex.h"
#include "blsces/sha256.h"

namespace blsces::zk {

const CurveParams& CurveParams::bn254() {
  static const CurveParams p{"bn254", Fp::kModulus, Fp::kBits, 3};
  return p;
}

const CurveParams& CurveParams::toy() {
  static const CurveParams p{"toy", ToyFp::kModulus, ToyFp::kBits, 3};
  return p;
}

const CurveParams& CurveParams::by_name(std::string_view name) {
  if (name == "bn254") return bn254();
  if (name == "toy") return toy();
  throw Error(ErrorCode::kInvalidArgument, "unknown curve '" + std::string(name) + "'");
}

namespace {

U256 half_order(const U256& p) {
  U256 e = p;
  for (int i = 0; i < 4; ++i) e.limb[i] = (e.limb[i] >> 1) | (i < 3 ? e.limb[i + 1] << 63 : 0);
  return e;  // (p - 1) / 2 for odd p
}

}  // namespace

EulerChain euler_chain(const U256& p, const U256& base) {
  const U256 e = half_order(p);
  EulerChain out;
  U256 acc = base;
  for (size_t i = e.bit_length() - 1; i-- > 0;) {
    out.steps.push_back(EmulatedField::reduce(acc, acc, 0, p));
    acc = out.steps.back().r;
    if (e.bit(i)) {
      out.steps.push_back(EmulatedField::reduce(acc, base, 0, p));
      acc = out.steps.back().r;
    }
  }
  out.result = acc;
  return out;
}

size_t euler_chain_length(const U256& p) {
  const U256 e = half_order(p);
  size_t ones = 0;
  for (size_t i = 0; i < e.bit_length(); ++i) ones += e.bit(i);
  return e.bit_length() - 1 + ones - 1;
}

HashToCurveWitness hash_to_curve_witness(const CurveParams& params, const Ceas& ceas, size_t i,
                                         const Claim& claim) {
  const auto msg = encode_claim_message(ceas, ceas.width(), i, claim);
  for (unsigned c = 0; c < bls::kCounterBound; ++c) {
    auto split = bls::split_digest(sha256(bls::with_counter(msg, static_cast<uint8_t>(c))),
                                   params.bits);
    if (split.x >= params.p) continue;
    HashToCurveWitness w;
    w.index = i;
    w.x = split.x;
    w.sign_bit = split.sign_bit;
    w.counter = static_cast<uint8_t>(c);
    w.x_squared = EmulatedField::reduce(w.x, w.x, 0, params.p);
    w.rhs = EmulatedField::reduce(w.x_squared.r, w.x, params.b, params.p);
    if (w.rhs.r.is_zero()) continue;
    w.chain = euler_chain(params.p, w.rhs.r);
    if (w.chain.result == U256(1)) return w;
  }
  throw Error(ErrorCode::kCounterExhausted, "hash_to_curve_witness: counter exhausted");
}

Predicate Predicate::range(size_t index, uint64_t lo, uint64_t hi) {
  Predicate p;
  p.kind = Kind::kRange;
  p.index = index;
  p.lo = lo;
  p.hi = hi;
  return p;
}

Predicate Predicate::equals(size_t index, std::string value) {
  Predicate p;
  p.kind = Kind::kEquals;
  p.index = index;
  p.value = std::move(value);
  return p;
}

namespace {

uint64_t parse_u64(std::string_view s, const char* what) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, std::string("predicate: bad ") + what + " '" +
                                       std::string(s) + "'");
  }
  return v;
}

// Splits off the next ':'-separated field.
std::string_view next_field(std::string_view& rest) {
  size_t pos = rest.find(':');
  std::string_view head = rest.substr(0, pos);
  rest = pos == std::string_view::npos ? std::string_view() : rest.substr(pos + 1);
  return head;
}

}  // namespace

Predicate Predicate::parse(std::string_view text) {
  if (text == "none" || text.empty()) return none();
  std::string_view rest = text;
  std::string_view kind = next_field(rest);
  if (kind == "range") {
    size_t index = parse_u64(next_field(rest), "index");
    uint64_t lo = parse_u64(next_field(rest), "lower bound");
    uint64_t hi = parse_u64(rest, "upper bound");
    return range(index, lo, hi);
  }
  if (kind == "equals") {
    if (text.find(':', kind.size() + 1) == std::string_view::npos) {
      throw Error(ErrorCode::kParse, "predicate: equals needs <index>:<value>");
    }
    size_t index = parse_u64(next_field(rest), "index");
    return equals(index, std::string(rest));
  }
  throw Error(ErrorCode::kParse, "predicate: unknown kind '" + std::string(kind) + "'");
}

std::string Predicate::to_string() const {
  switch (kind) {
    case Kind::kNone: return "none";
    case Kind::kRange:
      return "range:" + std::to_string(index) + ":" + std::to_string(lo) + ":" +
             std::to_string(hi);
    case Kind::kEquals: return "equals:" + std::to_string(index) + ":" + value;
  }
  return "none";
}

bool Predicate::holds(std::string_view v) const {
  switch (kind) {
    case Kind::kNone: return true;
    case Kind::kEquals: return v == value;
    case Kind::kRange: {
      if (v.empty() || v.size() > kMaxDecimalDigits) return false;
      uint64_t n = 0;
      for (char c : v) {
        if (c < '0' || c > '9') return false;
        n = n * 10 + static_cast<uint64_t>(c - '0');
      }
      return lo <= n && n <= hi;
    }
  }
  return false;
}

std::vector<Fr> PublicInputs::field_elements() const {
  std::vector<Fr> out;
  for (size_t k = 0; k < xs.size(); ++k) {
    for (int l = 0; l < 4; ++l) out.push_back(Fr::from_u64(xs[k].limb[l]));
    out.push_back(signs[k] ? Fr::one() : Fr::zero());
  }
  for (uint8_t byte : ceas_bytes) out.push_back(Fr::from_u64(byte));
  for (size_t j = 0; j < x.width(); ++j) out.push_back(x.contains(j) ? Fr::one() : Fr::zero());
  return out;
}

namespace {

// Secret inputs for one extracted claim.
struct ClaimSecret {
  const Claim* claim = nullptr;
  const HashToCurveWitness* witness = nullptr;
};

void append_u32(std::vector<Bit>& bits, uint32_t v) {
  const uint8_t be[4] = {static_cast<uint8_t>(v >> 24), static_cast<uint8_t>(v >> 16),
                         static_cast<uint8_t>(v >> 8), static_cast<uint8_t>(v)};
  auto c = constant_byte_bits(be);
  bits.insert(bits.end(), c.begin(), c.end());
}

void append_field(Builder& b, std::vector<Bit>& bits, uint32_t len, const std::string* text) {
  append_u32(bits, len);
  std::vector<uint8_t> bytes(len, 0);
  if (text != nullptr) bytes.assign(text->begin(), text->end());
  auto w = alloc_byte_bits(b, bytes);
  bits.insert(bits.end(), w.begin(), w.end());
}

void enforce_false(Builder& b) { b.enforce(LC(kOne), LC(kOne), LC()); }

// Bits of `len` bytes starting at `offset` in a bit string, MSB first.
std::span<const Bit> byte_range(const std::vector<Bit>& bits, size_t offset, size_t len) {
  return std::span<const Bit>(bits).subspan(8 * offset, 8 * len);
}

void range_gadget(Builder& b, std::span<const Bit> value_bits, uint64_t lo, uint64_t hi) {
  Builder::Scope scope(b, "predicate_range");
  const size_t len = value_bits.size() / 8;
  if (len == 0 || len > kMaxDecimalDigits) {
    enforce_false(b);
    return;
  }
  LC v;
  uint64_t v_value = 0;
  Fr ten_pow = Fr::one();
  for (size_t k = len; k-- > 0;) {
    auto m = value_bits.subspan(8 * k, 8);
    // ASCII digits are 0011dddd.
    b.enforce_equal(m[0].lc(), LC());
    b.enforce_equal(m[1].lc(), LC());
    b.enforce_equal(m[2].lc(), LC::constant(1));
    b.enforce_equal(m[3].lc(), LC::constant(1));
    const Bit low[4] = {m[7], m[6], m[5], m[4]};
    LC d = pack_bits(low);
    uint64_t d_value = 0;
    for (int t = 0; t < 4; ++t) d_value |= uint64_t{bit_value(b, low[t])} << t;
    auto slack = alloc_bits_of(b, U256((9 - d_value) & 15), 4);
    b.enforce_equal(d + pack_bits(slack), LC::constant(9));
    v += d * ten_pow;
    ten_pow *= Fr::from_u64(10);
  }
  for (size_t k = 0; k < len; ++k) {
    uint64_t d_value = 0;
    auto m = value_bits.subspan(8 * k, 8);
    for (int t = 0; t < 4; ++t) d_value |= uint64_t{bit_value(b, m[7 - t])} << t;
    v_value = v_value * 10 + d_value;
  }
  // v - lo and hi - v both fit in 64 bits.
  auto above = alloc_bits_of(b, U256(v_value - lo), 64);
  b.enforce_equal(pack_bits(above), v - LC::constant(lo));
  auto below = alloc_bits_of(b, U256(hi - v_value), 64);
  b.enforce_equal(pack_bits(below), LC::constant(hi) - v);
}

void equals_gadget(Builder& b, std::span<const Bit> value_bits, const std::string& expected) {
  Builder::Scope scope(b, "predicate_equals");
  if (value_bits.size() != 8 * expected.size()) {
    enforce_false(b);
    return;
  }
  auto want = constant_byte_bits(std::span<const uint8_t>(
      reinterpret_cast<const uint8_t*>(expected.data()), expected.size()));
  for (size_t k = 0; k < want.size(); ++k) {
    b.enforce_equal(value_bits[k].lc(), want[k].lc());
  }
}

void validate(const CurveParams& params, const PublicInputs& pub, const StatementShape& shape,
              const Ceas& ceas) {
  const size_t count = pub.x.count();
  if (pub.x.width() != ceas.width()) {
    throw Error(ErrorCode::kWidthMismatch, "extraction set width differs from the CEAS width");
  }
  if (count == 0) throw Error(ErrorCode::kInvalidArgument, "empty extraction set");
  if (pub.xs.size() != count || pub.signs.size() != count || shape.lengths.size() != count) {
    throw Error(ErrorCode::kLengthMismatch, "need one x, sign bit and claim shape per index");
  }
  for (const U256& x : pub.xs) {
    if (x.bit_length() > params.bits) {
      throw Error(ErrorCode::kInvalidArgument, "public x wider than the field");
    }
  }
  if (shape.predicate.kind != Predicate::Kind::kNone &&
      (shape.predicate.index >= pub.x.width() || !pub.x.contains(shape.predicate.index))) {
    throw Error(ErrorCode::kPredicateArity,
                "predicate index " + std::to_string(shape.predicate.index) +
                    " is not in the extraction set");
  }
  for (const ClaimLengths& l : shape.lengths) {
    constexpr uint32_t kMaxField = 1 << 16;
    if (l.subject > kMaxField || l.property > kMaxField || l.value > kMaxField) {
      throw Error(ErrorCode::kInvalidArgument, "claim field too long for a statement");
    }
  }
}

// Shared by prover and verifier; `secrets` is empty in shape mode.
void build(Builder& b, const CurveParams& params, const PublicInputs& pub,
           const StatementShape& shape, const std::vector<ClaimSecret>& secrets) {
  const Ceas ceas = Ceas::from_canonical_bytes(pub.ceas_bytes);
  validate(params, pub, shape, ceas);
  const auto indices = pub.x.indices();
  const size_t n = ceas.width();

  std::vector<std::array<Var, 4>> x_limbs(indices.size());
  std::vector<Var> sign_vars(indices.size());
  for (size_t k = 0; k < indices.size(); ++k) {
    for (int l = 0; l < 4; ++l) x_limbs[k][l] = b.alloc_public(Fr::from_u64(pub.xs[k].limb[l]));
    sign_vars[k] = b.alloc_public(pub.signs[k] ? Fr::one() : Fr::zero());
  }
  std::vector<Var> ceas_vars;
  for (uint8_t byte : pub.ceas_bytes) ceas_vars.push_back(b.alloc_public(Fr::from_u64(byte)));
  std::vector<Var> x_bits;
  for (size_t j = 0; j < n; ++j) {
    x_bits.push_back(b.alloc_public(pub.x.contains(j) ? Fr::one() : Fr::zero()));
  }

  std::vector<Bit> ceas_bits;
  {
    Builder::Scope scope(b, "public");
    for (Var v : x_bits) b.enforce_boolean(v);
    for (Var v : ceas_vars) {
      auto bits = decompose_byte(b, v);
      ceas_bits.insert(ceas_bits.end(), bits.begin(), bits.end());
    }
  }

  {
    // prod over subsets s of sum_j (x_j xor s_j) = 0.
    Builder::Scope scope(b, "ceas_membership");
    const size_t per = (n + 7) / 8;
    LC product;
    Fr product_value = Fr::zero();
    for (size_t t = 0; t < ceas.subsets().size(); ++t) {
      LC factor;
      for (size_t j = 0; j < n; ++j) {
        Bit s = ceas_bits[8 * (8 + t * per + j / 8) + 7 - j % 8];
        Fr xv = b.value(x_bits[j]);
        Fr sv = bit_value(b, s) ? Fr::one() : Fr::zero();
        Var both = b.alloc_witness(xv * sv);
        b.enforce(LC(x_bits[j]), s.lc(), LC(both));
        factor += LC(x_bits[j]) + s.lc() - LC(both) * Fr::from_u64(2);
      }
      if (t == 0) {
        product = factor;
        product_value = b.eval(factor);
      } else {
        product_value = product_value * b.eval(factor);
        Var next = b.alloc_witness(product_value);
        b.enforce(product, factor, LC(next));
        product = LC(next);
      }
    }
    b.enforce_equal(product, LC());
  }

  const size_t chain_len = euler_chain_length(params.p);
  const U256 e = half_order(params.p);
  for (size_t k = 0; k < indices.size(); ++k) {
    const size_t i = indices[k];
    Builder::Scope scope(b, "claim" + std::to_string(i));
    const ClaimLengths& len = shape.lengths[k];
    const ClaimSecret* secret = secrets.empty() ? nullptr : &secrets[k];

    std::vector<Bit> msg;
    append_u32(msg, static_cast<uint32_t>(pub.ceas_bytes.size()));
    msg.insert(msg.end(), ceas_bits.begin(), ceas_bits.end());
    append_u32(msg, static_cast<uint32_t>(n));
    append_u32(msg, static_cast<uint32_t>(i));
    append_field(b, msg, len.subject, secret ? &secret->claim->subject : nullptr);
    append_field(b, msg, len.property, secret ? &*secret->claim->property : nullptr);
    const size_t value_offset = msg.size() / 8 + 4;
    append_field(b, msg, len.value, secret ? &*secret->claim->value : nullptr);
    const uint8_t counter = secret ? secret->witness->counter : 0;
    auto counter_bits = alloc_byte_bits(b, std::span<const uint8_t>(&counter, 1));
    msg.insert(msg.end(), counter_bits.begin(), counter_bits.end());

    auto digest = sha256_gadget(b, msg);
    {
      Builder::Scope bind(b, "bind_x");
      // x bit q (LSB = 0) is digest bit bits - 1 - q.
      for (size_t l = 0; l < 4; ++l) {
        std::vector<Bit> limb_bits;
        for (size_t q = 64 * l; q < 64 * (l + 1) && q < params.bits; ++q) {
          limb_bits.push_back(digest[params.bits - 1 - q]);
        }
        b.enforce_equal(pack_bits(limb_bits), LC(x_limbs[k][l]));
      }
      b.enforce_equal(digest[params.bits].lc(), LC(sign_vars[k]));
    }

    Builder::Scope residue(b, "residuosity");
    EmulatedField f(b, params.p);
    const MulStep zero{};
    if (secret && secret->witness->chain.steps.size() != chain_len) {
      throw Error(ErrorCode::kInvalidArgument, "residuosity chain has the wrong length");
    }
    auto x = f.from_limbs(x_limbs[k], pub.xs[k]);
    f.enforce_canonical(x);
    auto x2 = f.mul(x, x, 0, secret ? secret->witness->x_squared : zero);
    auto rhs = f.mul(x2, x, params.b, secret ? secret->witness->rhs : zero);
    auto acc = rhs;
    size_t s = 0;
    for (size_t bit = e.bit_length() - 1; bit-- > 0;) {
      acc = f.mul(acc, acc, 0, secret ? secret->witness->chain.steps[s] : zero);
      ++s;
      if (e.bit(bit)) {
        acc = f.mul(acc, rhs, 0, secret ? secret->witness->chain.steps[s] : zero);
        ++s;
      }
    }
    f.enforce_equals(acc, U256(1));

    if (shape.predicate.kind != Predicate::Kind::kNone && shape.predicate.index == i) {
      auto value_bits = byte_range(msg, value_offset, len.value);
      if (shape.predicate.kind == Predicate::Kind::kRange) {
        range_gadget(b, value_bits, shape.predicate.lo, shape.predicate.hi);
      } else {
        equals_gadget(b, value_bits, shape.predicate.value);
      }
    }
  }
}

}  // namespace

Statement build_statement(const CurveParams& params, const Credential& cred, const Ceas& ceas,
                          const std::vector<HashToCurveWitness>& witnesses, const IndexSet& x,
                          const Predicate& predicate) {
  if (cred.size() != ceas.width() || x.width() != ceas.width()) {
    throw Error(ErrorCode::kWidthMismatch, "credential, CEAS and extraction set widths differ");
  }
  Statement st;
  st.pub.x = x;
  st.pub.ceas_bytes = ceas.canonical_bytes();
  st.shape.predicate = predicate;
  std::vector<ClaimSecret> secrets;
  for (size_t i : x.indices()) {
    const Claim& c = cred[i];
    if (c.hidden()) {
      throw Error(ErrorCode::kHiddenClaim, "claim " + std::to_string(i) + " is hidden");
    }
    const HashToCurveWitness* w = nullptr;
    for (const auto& cand : witnesses) {
      if (cand.index == i) w = &cand;
    }
    if (w == nullptr) {
      throw Error(ErrorCode::kMissingWitness, "no witness for claim " + std::to_string(i));
    }
    st.pub.xs.push_back(w->x);
    st.pub.signs.push_back(w->sign_bit);
    st.shape.lengths.push_back({static_cast<uint32_t>(c.subject.size()),
                                static_cast<uint32_t>(c.property->size()),
                                static_cast<uint32_t>(c.value->size())});
    secrets.push_back({&c, w});
  }
  Builder b(true);
  build(b, params, st.pub, st.shape, secrets);
  st.cs = b.take_system();
  st.assignment = b.take_assignment();
  return st;
}

ConstraintSystem build_statement_shape(const CurveParams& params, const PublicInputs& pub,
                                       const StatementShape& shape) {
  Builder b(false);
  build(b, params, pub, shape, {});
  return b.take_system();
}

ZkKeys zk_setup(RandomSource& rng, std::string_view backend_id) {
  ZkKeys out;
  out.params = make_backend(backend_id)->setup(rng);
  out.keys = bls::keygen(rng);
  return out;
}

ProofBundle prove_extraction(const BackendParams& params, const SignedCredential& sc,
                             const IndexSet& x, const Predicate& predicate) {
  auto backend = make_backend(params.backend);
  const CurveParams& curve = CurveParams::bn254();
  std::vector<HashToCurveWitness> witnesses;
  std::vector<bls::Signature> sigs;
  if (x.width() != sc.cred.size()) {
    throw Error(ErrorCode::kWidthMismatch, "extraction set width differs from the credential");
  }
  for (size_t i : x.indices()) {
    witnesses.push_back(hash_to_curve_witness(curve, sc.ceas, i, sc.cred[i]));
    sigs.push_back(sc.sigs.at(i));
  }
  Statement st = build_statement(curve, sc.cred, sc.ceas, witnesses, x, predicate);
  if (auto bad = st.cs.first_unsatisfied(st.assignment)) {
    throw Error(ErrorCode::kUnsatisfied,
                "statement does not hold: constraint " + std::to_string(*bad) + " [" +
                    st.cs.label(*bad) + "]");
  }
  ProofBundle out;
  out.curve = curve.name;
  out.backend = backend->id();
  out.pub = st.pub;
  out.shape = st.shape;
  out.sigma = bls::aggregate(sigs);
  out.proof = backend->prove(params, st.cs, st.assignment);
  return out;
}

ZkVerdict zk_verify(const BackendParams& params, const G2Point& pk, const ProofBundle& bundle) {
  ZkVerdict v;
  std::vector<std::string> notes;

  std::optional<Ceas> ceas;
  try {
    ceas = Ceas::from_canonical_bytes(bundle.pub.ceas_bytes);
    v.b1 = ceas_contains(*ceas, bundle.pub.x);
    if (!v.b1) notes.push_back("extraction set is not in the CEAS");
  } catch (const Error& e) {
    notes.push_back(std::string("b1: ") + e.what());
  }

  try {
    if (bundle.curve != "bn254") throw Error(ErrorCode::kInvalidArgument, "curve must be bn254");
    if (bundle.pub.xs.size() != bundle.pub.signs.size()) {
      throw Error(ErrorCode::kLengthMismatch, "x and sign counts differ");
    }
    if (pk.is_identity() || !Backend::g2_in_subgroup(pk)) {
      throw Error(ErrorCode::kNotInSubgroup, "invalid public key");
    }
    std::vector<std::pair<G1Point, G2Point>> terms;
    for (size_t k = 0; k < bundle.pub.xs.size(); ++k) {
      auto x = Fp::from_canonical(bundle.pub.xs[k]);
      if (!x) throw Error(ErrorCode::kMalformedEncoding, "public x is not below p");
      terms.emplace_back(g1_decompress(*x, bundle.pub.signs[k]), pk);
    }
    v.b2 = bls::aggregate_pairing_check(terms, g1_decompress(bundle.sigma.bytes));
    if (!v.b2) notes.push_back("pairing equation fails");
  } catch (const Error& e) {
    notes.push_back(std::string("b2: ") + e.what());
  }

  try {
    if (params.backend != bundle.backend) {
      throw Error(ErrorCode::kUnsupportedBackend, "proof was made with backend '" +
                                                      bundle.backend + "'");
    }
    auto backend = make_backend(bundle.backend);
    const CurveParams& curve = CurveParams::by_name(bundle.curve);
    ConstraintSystem cs = build_statement_shape(curve, bundle.pub, bundle.shape);
    std::string why;
    v.b3 = backend->verify(params, cs, bundle.pub.field_elements(), bundle.proof, &why);
    if (!v.b3) notes.push_back("proof rejected: " + why);
  } catch (const Error& e) {
    notes.push_back(std::string("b3: ") + e.what());
  }

  for (size_t k = 0; k < notes.size(); ++k) v.detail += (k ? "; " : "") + notes[k];
  return v;
}

namespace {

using nlohmann::json;

template <class F>
auto field(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string write_proof_bundle(const ProofBundle& bundle) {
  json xs = json::array();
  for (const U256& x : bundle.pub.xs) xs.push_back(x.to_hex());
  json signs = json::array();
  for (bool s : bundle.pub.signs) signs.push_back(s ? 1 : 0);
  json lengths = json::array();
  for (const auto& l : bundle.shape.lengths) lengths.push_back({l.subject, l.property, l.value});
  json j{{"version", 1},
         {"curve", bundle.curve},
         {"backend", bundle.backend},
         {"public_inputs",
          {{"n", bundle.pub.x.width()},
           {"extraction_set", bundle.pub.x.indices()},
           {"x", xs},
           {"sign_bits", signs},
           {"ceas", hex_encode(bundle.pub.ceas_bytes)}}},
         {"statement", {{"claim_lengths", lengths}, {"predicate", bundle.shape.predicate.to_string()}}},
         {"signature", bundle.sigma.to_hex()},
         {"proof", hex_encode(bundle.proof)}};
  return j.dump(2) + "\n";
}

ProofBundle read_proof_bundle(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  ProofBundle b;
  if (field("version", [&] { return j.at("version").get<int>(); }) != 1) {
    throw Error(ErrorCode::kParse, "unsupported proof bundle version");
  }
  b.curve = field("curve", [&] { return j.at("curve").get<std::string>(); });
  b.backend = field("backend", [&] { return j.at("backend").get<std::string>(); });
  const json& pub = field("public_inputs", [&] { return j.at("public_inputs"); });
  size_t n = field("n", [&] { return pub.at("n").get<size_t>(); });
  b.pub.x = IndexSet::from_indices(
      n, field("extraction_set", [&] { return pub.at("extraction_set").get<std::vector<size_t>>(); }));
  for (const auto& x : field("x", [&] { return pub.at("x").get<std::vector<std::string>>(); })) {
    b.pub.xs.push_back(U256::from_hex(x));
  }
  for (int s : field("sign_bits", [&] { return pub.at("sign_bits").get<std::vector<int>>(); })) {
    if (s != 0 && s != 1) throw Error(ErrorCode::kParse, "sign bits must be 0 or 1");
    b.pub.signs.push_back(s == 1);
  }
  b.pub.ceas_bytes = hex_decode(field("ceas", [&] { return pub.at("ceas").get<std::string>(); }));
  const json& st = field("statement", [&] { return j.at("statement"); });
  for (const auto& l : field("claim_lengths", [&] {
         return st.at("claim_lengths").get<std::vector<std::array<uint32_t, 3>>>();
       })) {
    b.shape.lengths.push_back({l[0], l[1], l[2]});
  }
  b.shape.predicate =
      Predicate::parse(field("predicate", [&] { return st.at("predicate").get<std::string>(); }));
  b.sigma = bls::Signature::from_hex(
      field("signature", [&] { return j.at("signature").get<std::string>(); }));
  b.proof = hex_decode(field("proof", [&] { return j.at("proof").get<std::string>(); }));
  return b;
}

}  // namespace blsces::zk
