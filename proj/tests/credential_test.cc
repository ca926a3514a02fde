#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "blsces/credential.h"
#include "blsces/error.h"

namespace blsces {
namespace {

Credential three_claims() {
  return Credential{{Claim::make("did:ex:alice", "name", "Alice"),
                     Claim::make("did:ex:alice", "age", "31"),
                     Claim::make("did:ex:alice", "country", "NL")}};
}

// Claim state: 0 visible, 1 value blinded, 2 property and value blinded.
Credential with_pattern(const Credential& c, const std::vector<int>& pattern) {
  Credential out = c;
  for (size_t i = 0; i < c.size(); ++i) {
    if (pattern[i] != 0) out.claims[i] = c[i].blinded(pattern[i] == 2);
  }
  return out;
}

std::vector<std::vector<int>> all_patterns(size_t n) {
  std::vector<std::vector<int>> out;
  size_t total = 1;
  for (size_t i = 0; i < n; ++i) total *= 3;
  for (size_t code = 0; code < total; ++code) {
    std::vector<int> p(n);
    size_t c = code;
    for (size_t i = 0; i < n; ++i, c /= 3) p[i] = static_cast<int>(c % 3);
    out.push_back(p);
  }
  return out;
}

TEST(SubCredentialTest, Examples) {
  Credential full = three_claims();
  EXPECT_TRUE(is_sub_credential(with_pattern(full, {0, 1, 0}), full));
  EXPECT_FALSE(is_sub_credential(full, full));
  Credential shorter{{full[0]}};
  EXPECT_FALSE(is_sub_credential(shorter, full));
  Credential edited = with_pattern(full, {0, 1, 0});
  edited.claims[0].value = "Mallory";
  EXPECT_FALSE(is_sub_credential(edited, full));
}

// All permutations and blinding patterns: a permuted credential is a
// sub-credential exactly when every visible claim stayed in place and at
// least one claim is hidden.
TEST(SubCredentialTest, PermutationsBruteForce) {
  Credential full = three_claims();
  std::vector<size_t> perm = {0, 1, 2};
  int passing_with_all_fixed = 0;
  do {
    Credential permuted;
    for (size_t i : perm) permuted.claims.push_back(full[i]);
    for (const auto& pattern : all_patterns(3)) {
      Credential sub = with_pattern(permuted, pattern);
      bool expected = false;
      bool visible_fixed = true;
      for (size_t i = 0; i < 3; ++i) {
        if (pattern[i] == 0 && perm[i] != i) visible_fixed = false;
        if (pattern[i] != 0) expected = true;
      }
      expected = expected && visible_fixed;
      EXPECT_EQ(is_sub_credential(sub, full), expected);
      bool identity = perm == std::vector<size_t>{0, 1, 2};
      if (expected && identity) ++passing_with_all_fixed;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(passing_with_all_fixed, 26);  // 27 patterns minus all-visible
}

TEST(SubCredentialTest, TransitiveOverAllPatterns) {
  Credential full = three_claims();
  std::vector<Credential> all;
  for (const auto& p : all_patterns(3)) all.push_back(with_pattern(full, p));
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (!is_sub_credential(a, b)) continue;
      for (const auto& c : all) {
        if (is_sub_credential(b, c)) {
          EXPECT_TRUE(is_sub_credential(a, c));
        }
      }
    }
  }
}

TEST(ClearIndicesTest, Examples) {
  Credential full = three_claims();
  EXPECT_EQ(clear_indices(full), IndexSet::full(3));
  EXPECT_TRUE(clear_indices(with_pattern(full, {1, 2, 1})).empty());
  EXPECT_EQ(clear_indices(with_pattern(full, {0, 1, 0})).indices(),
            (std::vector<size_t>{0, 2}));
}

TEST(IndexSetTest, ParseAndValidate) {
  EXPECT_EQ(IndexSet::parse(4, "0, 2,3").mask(), 0b1101u);
  EXPECT_THROW(IndexSet::parse(4, "4"), Error);
  EXPECT_THROW(IndexSet::parse(4, "1,,2"), Error);
  EXPECT_THROW(IndexSet::parse(4, "x"), Error);
  EXPECT_EQ(IndexSet::full(64).count(), 64u);
  EXPECT_EQ(IndexSet::parse(5, "1,3").to_string(), "{1,3}");
  try {
    IndexSet::parse(2, "0,7");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
    EXPECT_NE(std::string(e.what()).find("7"), std::string::npos);
  }
}

TEST(CeasTest, MembershipIsExact) {
  Ceas ceas(3, {IndexSet(3, 0b011), IndexSet(3, 0b100)});
  EXPECT_TRUE(ceas_contains(ceas, IndexSet(3, 0b011)));
  EXPECT_FALSE(ceas_contains(ceas, IndexSet(3, 0b001)));  // strict subset of {0,1}
  EXPECT_THROW(ceas_contains(ceas, IndexSet(4, 0b011)), Error);
}

TEST(CeasTest, AgreesWithLinearScan) {
  std::mt19937_64 g(1);
  for (int t = 0; t < 50; ++t) {
    std::vector<IndexSet> listed;
    for (int k = 0; k < 3; ++k) listed.emplace_back(4, g() % 16);
    Ceas ceas(4, listed);
    for (uint64_t m = 0; m < 16; ++m) {
      bool scan = std::any_of(listed.begin(), listed.end(),
                              [&](const IndexSet& s) { return s.mask() == m; });
      EXPECT_EQ(ceas_contains(ceas, IndexSet(4, m)), scan);
    }
  }
}

TEST(CeasTest, CanonicalBytes) {
  Ceas a(3, {IndexSet(3, 0b101), IndexSet(3, 0b010), IndexSet(3, 0b101)});
  Ceas b(3, {IndexSet(3, 0b010), IndexSet(3, 0b101)});
  EXPECT_EQ(a, b);
  std::vector<uint8_t> expected = {0, 0, 0, 3, 0, 0, 0, 2, 0x02, 0x05};
  EXPECT_EQ(a.canonical_bytes(), expected);
  EXPECT_EQ(Ceas::from_canonical_bytes(expected), a);
  std::vector<uint8_t> unsorted = {0, 0, 0, 3, 0, 0, 0, 2, 0x05, 0x02};
  EXPECT_THROW(Ceas::from_canonical_bytes(unsorted), Error);
  Ceas wide(9, {IndexSet(9, 0x1ff)});
  std::vector<uint8_t> wide_bytes = {0, 0, 0, 9, 0, 0, 0, 1, 0xff, 0x01};
  EXPECT_EQ(wide.canonical_bytes(), wide_bytes);
  EXPECT_THROW(Ceas(3, {}), Error);
}

// Independent parser for the claim message layout.
struct Decoded {
  std::vector<uint8_t> ceas;
  uint32_t n = 0, i = 0;
  std::string subject, property, value;
  std::optional<uint8_t> counter;
  auto operator<=>(const Decoded&) const = default;
};

Decoded decode(const std::vector<uint8_t>& m) {
  size_t pos = 0;
  auto u32 = [&] {
    uint32_t v = 0;
    for (int k = 0; k < 4; ++k) v = v << 8 | m.at(pos++);
    return v;
  };
  auto str = [&] {
    uint32_t len = u32();
    std::string s(m.begin() + pos, m.begin() + pos + len);
    pos += len;
    return s;
  };
  Decoded d;
  uint32_t clen = u32();
  d.ceas.assign(m.begin() + pos, m.begin() + pos + clen);
  pos += clen;
  d.n = u32();
  d.i = u32();
  d.subject = str();
  d.property = str();
  d.value = str();
  if (pos < m.size()) d.counter = m.at(pos++);
  EXPECT_EQ(pos, m.size());
  return d;
}

TEST(EncodeTest, NaiveConcatenationCollisionAvoided) {
  Ceas ceas(12, {IndexSet::full(12)});
  Claim c = Claim::make("s", "p", "v");
  EXPECT_NE(encode_claim_message(ceas, 1, 0, c), encode_claim_message(ceas, 11, 0, c));
  Ceas wide(20, {IndexSet::full(20)});
  EXPECT_NE(encode_claim_message(wide, 1, 0, Claim::make("s", "p", "12")),
            encode_claim_message(wide, 11, 0, Claim::make("s", "p", "2")));
  EXPECT_NE(encode_claim_message(wide, 13, 12, c), encode_claim_message(wide, 12, 2, c));
  EXPECT_NE(encode_claim_message(wide, 13, 1, Claim::make("s", "ab", "c")),
            encode_claim_message(wide, 13, 1, Claim::make("s", "a", "bc")));
}

TEST(EncodeTest, RejectsHiddenAndOutOfRange) {
  Ceas ceas(2, {IndexSet::full(2)});
  Claim c = Claim::make("s", "p", "v");
  EXPECT_THROW(encode_claim_message(ceas, 2, 0, c.blinded(false)), Error);
  EXPECT_THROW(encode_claim_message(ceas, 2, 2, c), Error);
  EXPECT_EQ(encode_claim_message(ceas, 2, 1, c), encode_claim_message(ceas, 2, 1, c));
  Ceas other(2, {IndexSet(2, 1)});
  EXPECT_NE(encode_claim_message(ceas, 2, 1, c), encode_claim_message(other, 2, 1, c));
  auto with = encode_claim_message(ceas, 2, 1, c, 7);
  auto without = encode_claim_message(ceas, 2, 1, c);
  without.push_back(7);
  EXPECT_EQ(with, without);
}

// 10^5 random inputs over a small alphabet: the encoding decodes back to its
// input, and no two distinct inputs share an encoding.
TEST(EncodeTest, InjectiveOverFuzzedDomain) {
  std::mt19937_64 g(2);
  auto rand_str = [&] {
    std::string s(g() % 4, 'a');
    for (auto& ch : s) ch = "ab\0"[g() % 3];
    return s;
  };
  std::map<std::vector<uint8_t>, Decoded> seen;
  for (int t = 0; t < 100000; ++t) {
    size_t n = 1 + g() % 3;
    std::vector<IndexSet> subsets = {IndexSet(n, g() % (uint64_t{1} << n))};
    Ceas ceas(n, subsets);
    size_t i = g() % n;
    Claim c = Claim::make(rand_str(), rand_str(), rand_str());
    std::optional<uint8_t> counter;
    if (g() % 2) counter = static_cast<uint8_t>(g() % 3);
    auto m = encode_claim_message(ceas, n, i, c, counter);
    Decoded d{ceas.canonical_bytes(), static_cast<uint32_t>(n), static_cast<uint32_t>(i),
              c.subject, *c.property, *c.value, counter};
    ASSERT_EQ(decode(m), d);
    auto [it, inserted] = seen.emplace(m, d);
    if (!inserted) {
      ASSERT_EQ(it->second, d);
    }
  }
}

}  // namespace
}  // namespace blsces
