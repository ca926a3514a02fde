#include <gtest/gtest.h>

#include <random>

#include "blsces/error.h"
#include "blsces/formats.h"

namespace blsces::io {
namespace {

std::string rand_text(std::mt19937_64& g) {
  static const std::string kAlphabet = "ab \"\\/\n\t{}\xc3\xa9";
  std::string s;
  size_t len = g() % 6;
  for (size_t i = 0; i < len; ++i) s += kAlphabet[g() % (kAlphabet.size() - 2)];
  if (g() % 4 == 0) s += "\xc3\xa9";  // keep UTF-8 valid
  return s;
}

Credential rand_cred(std::mt19937_64& g, size_t n) {
  Credential c;
  std::string subject = rand_text(g);
  for (size_t i = 0; i < n; ++i) {
    Claim cl = Claim::make(g() % 5 == 0 ? rand_text(g) : subject, rand_text(g), rand_text(g));
    int state = static_cast<int>(g() % 3);
    if (state != 0) cl = cl.blinded(state == 2);
    c.claims.push_back(cl);
  }
  return c;
}

Ceas rand_ceas(std::mt19937_64& g, size_t n) {
  std::vector<IndexSet> s;
  for (size_t k = 0; k < 1 + g() % 4; ++k) {
    s.emplace_back(n, g() & ((uint64_t{1} << n) - 1));
  }
  return Ceas(n, s);
}

TEST(FormatsTest, CredentialRoundTrip) {
  std::mt19937_64 g(1);
  for (int t = 0; t < 300; ++t) {
    size_t n = 1 + g() % 6;
    Credential c = rand_cred(g, n);
    std::optional<Ceas> ceas;
    if (g() % 2) ceas = rand_ceas(g, n);
    CredentialFile f = read_credential(write_credential(c, ceas));
    EXPECT_EQ(f.cred, c);
    EXPECT_EQ(f.ceas, ceas);
    if (ceas) {
      EXPECT_EQ(read_ceas(write_ceas(*ceas)), *ceas);
    }
  }
}

TEST(FormatsTest, SignedAndPresentationRoundTrip) {
  SeededRandom rng(2);
  bls::KeyPair kp = bls::keygen(rng);
  std::mt19937_64 g(3);
  for (int t = 0; t < 5; ++t) {
    size_t n = 1 + g() % 4;
    Credential c = rand_cred(g, n);
    for (auto& cl : c.claims) {
      if (cl.hidden()) cl = Claim::make(cl.subject, "p", "v" + std::to_string(g() % 100));
    }
    Ceas ceas = rand_ceas(g, n);
    SignedCredential sc = ces_sign(kp.sk, c, ceas);
    EXPECT_EQ(read_signed_credential(write_signed_credential(sc)), sc);
    IndexSet x(n, 1 + g() % ((uint64_t{1} << n) - 1));
    for (bool keep : {false, true}) {
      auto pres = ces_extract(sc, x, {.reextractable = keep, .blind_property = (t % 2) == 1});
      std::string text = write_presentation(pres);
      EXPECT_EQ(read_presentation(text), pres);
      EXPECT_EQ(write_presentation(read_presentation(text)), text);
    }
  }
  EXPECT_EQ(read_secret_key(write_secret_key(kp)).sk, kp.sk);
  EXPECT_EQ(read_public_key(write_public_key(kp.pk)), kp.pk);
}

TEST(FormatsTest, RejectsMalformedInput) {
  EXPECT_THROW(read_credential("{"), Error);
  EXPECT_THROW(read_credential(R"({"version":2,"subject":"s","claims":[]})"), Error);
  EXPECT_THROW(read_credential(R"({"version":1,"subject":"s","claims":[]})"), Error);
  EXPECT_THROW(
      read_credential(R"({"version":1,"subject":"s","claims":[{"property":"p"}]})"), Error);
  EXPECT_THROW(read_credential(
                   R"({"version":1,"subject":"s","claims":[{"value":"v","hidden":true}]})"),
               Error);
  EXPECT_THROW(read_ceas(R"({"n":2,"subsets":[[2]]})"), Error);
  EXPECT_THROW(read_ceas(R"({"n":2,"subsets":[]})"), Error);
  EXPECT_THROW(read_public_key(R"({"version":1,"pk":"00"})"), Error);
  auto cf = read_credential(
      R"({"version":1,"subject":"s","claims":[{"property":"p","value":"v"},{"hidden":true}]})");
  EXPECT_EQ(cf.cred.size(), 2u);
  EXPECT_TRUE(cf.cred[1].hidden());
  EXPECT_FALSE(cf.cred[1].property.has_value());
  EXPECT_EQ(cf.cred[1].subject, "s");
}

}  // namespace
}  // namespace blsces::io
