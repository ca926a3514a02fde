#include <gtest/gtest.h>

#include <random>

#include "blsces/error.h"
#include "blsces/zk/zkces.h"
#include "zk_test_util.h"

namespace blsces::zk {
namespace {

using testing::random_credential;
using testing::same_system;

const CurveParams& toy() { return CurveParams::toy(); }

std::vector<HashToCurveWitness> witnesses_for(const CurveParams& params, const Credential& cred,
                                              const Ceas& ceas, const IndexSet& x) {
  std::vector<HashToCurveWitness> out;
  for (size_t i : x.indices()) out.push_back(hash_to_curve_witness(params, ceas, i, cred[i]));
  return out;
}

bool holds(const Statement& st) { return !st.cs.first_unsatisfied(st.assignment).has_value(); }

TEST(HashWitnessTest, AgreesWithHashToCurve) {
  std::mt19937_64 g(1);
  for (int t = 0; t < 40; ++t) {
    Credential cred = random_credential(g, 3);
    Ceas ceas(3, {IndexSet::full(3)});
    for (size_t i = 0; i < 3; ++i) {
      auto msg = encode_claim_message(ceas, 3, i, cred[i]);
      auto toy_w = hash_to_curve_witness(toy(), ceas, i, cred[i]);
      auto toy_h = bls::hash_to_curve<ToyCurve>(msg);
      EXPECT_EQ(toy_w.counter, toy_h.counter);
      EXPECT_EQ(toy_w.x, toy_h.x.to_u256());
      EXPECT_EQ(toy_w.sign_bit, toy_h.sign_bit);
      if (t < 5) {
        auto w = hash_to_curve_witness(CurveParams::bn254(), ceas, i, cred[i]);
        auto h = bls::hash_to_g1(msg);
        EXPECT_EQ(w.counter, h.counter);
        EXPECT_EQ(w.x, h.x.to_u256());
        EXPECT_EQ(w.sign_bit, h.sign_bit);
        EXPECT_EQ(w.chain.steps.size(), euler_chain_length(Fp::kModulus));
      }
    }
  }
  EXPECT_THROW(hash_to_curve_witness(toy(), Ceas(1, {IndexSet::full(1)}), 0,
                                     Claim::make("s", "p", "v").blinded(false)),
               Error);
}

TEST(PredicateTest, ParseAndDirectEvaluation) {
  EXPECT_EQ(Predicate::parse("range:1:18:150"), Predicate::range(1, 18, 150));
  EXPECT_EQ(Predicate::parse("equals:2:a:b"), Predicate::equals(2, "a:b"));
  EXPECT_EQ(Predicate::parse("equals:0:"), Predicate::equals(0, ""));
  EXPECT_EQ(Predicate::parse("none"), Predicate::none());
  for (const char* bad : {"range:1:2", "range:x:1:2", "equals:1", "lt:1:2", "range:1:-1:3"}) {
    EXPECT_THROW(Predicate::parse(bad), Error) << bad;
  }
  auto r = Predicate::range(0, 18, 150);
  EXPECT_EQ(Predicate::parse(r.to_string()), r);
  EXPECT_TRUE(r.holds("18"));
  EXPECT_TRUE(r.holds("0150"));
  EXPECT_FALSE(r.holds("151"));
  EXPECT_FALSE(r.holds("17"));
  EXPECT_FALSE(r.holds(""));
  EXPECT_FALSE(r.holds("1a"));
  EXPECT_FALSE(r.holds("0000000000000000018"));  // 19 digits
}

TEST(StatementTest, ToyStatementHoldsAndMatchesVerifierShape) {
  std::mt19937_64 g(2);
  Credential cred = random_credential(g, 3);
  Ceas ceas(3, {IndexSet(3, 0b101), IndexSet(3, 0b010)});
  IndexSet x(3, 0b101);
  auto st = build_statement(toy(), cred, ceas, witnesses_for(toy(), cred, ceas, x), x,
                            Predicate::none());
  EXPECT_TRUE(holds(st));
  EXPECT_EQ(st.pub.field_elements().size(), st.cs.num_public());
  auto shape = build_statement_shape(toy(), st.pub, st.shape);
  EXPECT_TRUE(same_system(shape, st.cs));
  // Public inputs sit at 1..num_public in canonical order.
  auto fe = st.pub.field_elements();
  for (size_t k = 0; k < fe.size(); ++k) EXPECT_EQ(st.assignment[1 + k], fe[k]);
}

TEST(StatementTest, MembershipIsEnforced) {
  std::mt19937_64 g(3);
  Credential cred = random_credential(g, 3);
  Ceas ceas(3, {IndexSet(3, 0b011)});
  IndexSet x(3, 0b001);  // strict subset of the only allowed set
  auto st = build_statement(toy(), cred, ceas, witnesses_for(toy(), cred, ceas, x), x,
                            Predicate::none());
  auto bad = st.cs.first_unsatisfied(st.assignment);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(st.cs.label(*bad), "ceas_membership");
}

TEST(StatementTest, TamperedWitnessesFail) {
  std::mt19937_64 g(4);
  Credential cred = random_credential(g, 2);
  Ceas ceas(2, {IndexSet::full(2)});
  IndexSet x = IndexSet::full(2);
  auto ws = witnesses_for(toy(), cred, ceas, x);

  auto q_bumped = ws;
  q_bumped[0].chain.steps[1].q.limb[0] += 1;
  EXPECT_FALSE(holds(build_statement(toy(), cred, ceas, q_bumped, x, Predicate::none())));

  auto counter = ws;
  counter[1].counter = static_cast<uint8_t>(counter[1].counter + 1);
  EXPECT_FALSE(holds(build_statement(toy(), cred, ceas, counter, x, Predicate::none())));

  auto sign = ws;
  sign[0].sign_bit = !sign[0].sign_bit;
  EXPECT_FALSE(holds(build_statement(toy(), cred, ceas, sign, x, Predicate::none())));

  Credential edited = cred;
  edited.claims[1].value = *edited[1].value + "!";
  auto st = build_statement(toy(), edited, ceas, ws, x, Predicate::none());
  EXPECT_FALSE(holds(st));
}

TEST(StatementTest, PredicatesAgreeWithDirectEvaluation) {
  std::mt19937_64 g(5);
  int true_cases = 0, false_cases = 0;
  for (int t = 0; t < 30; ++t) {
    Credential cred = random_credential(g, 2);
    if (t % 2 == 0) cred.claims[1].value = testing::random_digits(g, 3);
    Ceas ceas(2, {IndexSet::full(2)});
    IndexSet x = IndexSet::full(2);
    auto ws = witnesses_for(toy(), cred, ceas, x);
    Predicate pred = t % 3 == 0 ? Predicate::equals(1, t % 2 ? *cred[1].value : "42")
                                : Predicate::range(1, g() % 500, 300 + g() % 700);
    auto st = build_statement(toy(), cred, ceas, ws, x, pred);
    bool direct = pred.holds(*cred[1].value);
    EXPECT_EQ(holds(st), direct) << pred.to_string() << " on '" << *cred[1].value << "'";
    (direct ? true_cases : false_cases)++;
  }
  EXPECT_GT(true_cases, 3);
  EXPECT_GT(false_cases, 3);
}

TEST(StatementTest, ArgumentErrors) {
  std::mt19937_64 g(6);
  Credential cred = random_credential(g, 3);
  Ceas ceas(3, {IndexSet::full(3)});
  IndexSet x(3, 0b011);
  auto ws = witnesses_for(toy(), cred, ceas, x);
  try {
    build_statement(toy(), cred, ceas, {ws[0]}, x, Predicate::none());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingWitness);
  }
  try {
    build_statement(toy(), cred, ceas, ws, x, Predicate::range(2, 0, 9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPredicateArity);
  }
  Credential hidden = cred;
  hidden.claims[0] = cred[0].blinded(false);
  EXPECT_THROW(build_statement(toy(), hidden, ceas, ws, x, Predicate::none()), Error);
}

TEST(StatementTest, SingleMutationsFalsifyToyStatement) {
  std::mt19937_64 g(7);
  Credential cred = random_credential(g, 2);
  cred.claims[0].value = "123";
  Ceas ceas(2, {IndexSet(2, 0b01), IndexSet(2, 0b11)});
  IndexSet x(2, 0b01);
  auto st = build_statement(toy(), cred, ceas, witnesses_for(toy(), cred, ceas, x), x,
                            Predicate::range(0, 100, 200));
  ASSERT_TRUE(holds(st));
  auto r = testing::mutation_sweep(st.cs, st.assignment, g);
  EXPECT_GT(r.tried, 10000u);
  EXPECT_EQ(r.survived, 0u) << r.first_survivor;
}

TEST(BackendTest, TransparentRoundTripAndRejection) {
  EXPECT_THROW(make_backend("groth16"), Error);
  auto backend = make_backend("transparent");
  SeededRandom rng(1);
  BackendParams params = backend->setup(rng);
  std::mt19937_64 g(8);
  Credential cred = random_credential(g, 2);
  Ceas ceas(2, {IndexSet::full(2)});
  IndexSet x = IndexSet::full(2);
  auto st = build_statement(toy(), cred, ceas, witnesses_for(toy(), cred, ceas, x), x,
                            Predicate::none());
  auto proof = backend->prove(params, st.cs, st.assignment);
  auto pub = st.pub.field_elements();
  std::string why;
  EXPECT_TRUE(backend->verify(params, st.cs, pub, proof, &why)) << why;
  auto bad = proof;
  bad[4 + 100] ^= 1;  // a bit-valued witness flips between tags 0 and 1
  EXPECT_FALSE(backend->verify(params, st.cs, pub, bad, &why));
  EXPECT_NE(why.find("not satisfied"), std::string::npos);
  EXPECT_FALSE(backend->verify(params, st.cs, pub, std::vector<uint8_t>(proof.begin(),
                                                                         proof.end() - 1),
                               &why));
  pub[0] += Fr::one();
  EXPECT_FALSE(backend->verify(params, st.cs, pub, proof, &why));
  EXPECT_THROW(backend->verify(BackendParams{"other", {}}, st.cs, pub, proof, &why), Error);
}

class ZkcesTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    SeededRandom rng(9);
    setup_ = new ZkKeys(zk_setup(rng, "transparent"));
    SeededRandom other_rng(10);
    other_ = new bls::KeyPair(bls::keygen(other_rng));
    Credential cred{{Claim::make("did:ex:holder", "name", "Alice"),
                     Claim::make("did:ex:holder", "age", "31"),
                     Claim::make("did:ex:holder", "country", "NL")}};
    Ceas ceas(3, {IndexSet(3, 0b010), IndexSet(3, 0b011)});
    sc_ = new SignedCredential(ces_sign(setup_->keys.sk, cred, ceas));
    bundle_ = new ProofBundle(
        prove_extraction(setup_->params, *sc_, IndexSet(3, 0b010), Predicate::range(1, 18, 65)));
  }
  static void TearDownTestSuite() {
    delete setup_;
    delete other_;
    delete sc_;
    delete bundle_;
  }
  static ZkKeys* setup_;
  static bls::KeyPair* other_;
  static SignedCredential* sc_;
  static ProofBundle* bundle_;
};

ZkKeys* ZkcesTest::setup_ = nullptr;
bls::KeyPair* ZkcesTest::other_ = nullptr;
SignedCredential* ZkcesTest::sc_ = nullptr;
ProofBundle* ZkcesTest::bundle_ = nullptr;

TEST_F(ZkcesTest, HonestProofVerifies) {
  ZkVerdict v = zk_verify(setup_->params, setup_->keys.pk, *bundle_);
  EXPECT_TRUE(v.accepted()) << v.detail;
  // The aggregate is the issued signature on the single extracted claim.
  EXPECT_EQ(bundle_->sigma, sc_->sigs[1]);
  EXPECT_EQ(read_proof_bundle(write_proof_bundle(*bundle_)), *bundle_);
}

TEST_F(ZkcesTest, ChecksFailIndependently) {
  ZkVerdict wrong_key = zk_verify(setup_->params, other_->pk, *bundle_);
  EXPECT_TRUE(wrong_key.b1);
  EXPECT_FALSE(wrong_key.b2);
  EXPECT_TRUE(wrong_key.b3);

  ProofBundle tampered = *bundle_;
  tampered.proof[4 + 500] ^= 1;
  ZkVerdict bad_proof = zk_verify(setup_->params, setup_->keys.pk, tampered);
  EXPECT_TRUE(bad_proof.b1);
  EXPECT_TRUE(bad_proof.b2);
  EXPECT_FALSE(bad_proof.b3);

  ProofBundle other_pred = *bundle_;
  other_pred.shape.predicate = Predicate::range(1, 40, 65);
  ZkVerdict pred = zk_verify(setup_->params, setup_->keys.pk, other_pred);
  EXPECT_TRUE(pred.b1 && pred.b2);
  EXPECT_FALSE(pred.b3);
}

TEST_F(ZkcesTest, FalsePredicateCannotBeProved) {
  try {
    prove_extraction(setup_->params, *sc_, IndexSet(3, 0b010), Predicate::range(1, 40, 65));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsatisfied);
  }
}

TEST_F(ZkcesTest, ExtractionOutsideCeasFailsMembership) {
  // {0} is not allowed; b1 rejects and the statement cannot be proved.
  EXPECT_THROW(prove_extraction(setup_->params, *sc_, IndexSet(3, 0b001), Predicate::none()),
               Error);
  ProofBundle moved = *bundle_;
  moved.pub.x = IndexSet(3, 0b100);
  ZkVerdict v = zk_verify(setup_->params, setup_->keys.pk, moved);
  EXPECT_FALSE(v.b1);
  EXPECT_FALSE(v.b3);
}

}  // namespace
}  // namespace blsces::zk
