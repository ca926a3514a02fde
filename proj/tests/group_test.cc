#include <gtest/gtest.h>

#include "blsces/group.h"
#include "blsces/random.h"

namespace blsces {
namespace {

Fp dec(const char* s) { return *Fp::from_canonical(U256::from_decimal(s)); }

// e(g1, g2) as computed by py_ecc's optimized_bn128, coefficients on 1, w, ..., w^5.
TEST(PairingTest, GeneratorPairingMatchesReference) {
  const std::array<Fp2, 6> expected = {
      Fp2{dec("8493334370784016972005089913588211327688223499729897951716206968320726508021"),
          dec("3758435817766288188804561253838670030762970764366672594784247447067868088068")},
      Fp2{dec("20049218015652006197026173611347504489508678646783216776320737476707192559881"),
          dec("18059168546148152671857026372711724379319778306792011146784665080987064164612")},
      Fp2{dec("6565798094314091391201231504228224566495939541538094766881371862976727043038"),
          dec("14656606573936501743457633041048024656612227301473084805627390748872617280984")},
      Fp2{dec("12145052038566888241256672223106590273978429515702193755778990643425246950730"),
          dec("17918828665069491344039743589118342552553375221610735811112289083834142789347")},
      Fp2{dec("634997487638609332803583491743335852620873788902390365055086820718589720118"),
          dec("19455424343576886430889849773367397946457449073528455097210946839000147698372")},
      Fp2{dec("6223602427219597392892794664899549544171383137467762280768257680446283161705"),
          dec("7484542354754424633621663080190936924481536615300815203692506276894207018007")},
  };
  const auto& gp = GroupParams::bn254();
  EXPECT_EQ(pairing(gp.g1, gp.g2).value().coefficients(), expected);
}

TEST(PairingTest, Bilinear) {
  const auto& gp = GroupParams::bn254();
  SeededRandom rng(7);
  Scalar a = Scalar::random_nonzero(rng), b = Scalar::random_nonzero(rng);
  GtElement e = pairing(gp.g1, gp.g2);
  GtElement lhs = pairing(g1_scalar_mul(a, gp.g1), g2_scalar_mul(b, gp.g2));
  EXPECT_EQ(lhs, e.pow(a * b));
  EXPECT_FALSE(e.is_identity());
  EXPECT_TRUE(e.pow(Scalar::from_u64(0)).is_identity());
  // e has order r: e^(r-1) * e = 1.
  U256 rm1;
  sub_with_borrow(rm1, Fr::kModulus, U256(1));
  EXPECT_TRUE((GtElement(e.value().pow(rm1)) * e).is_identity());
}

TEST(PairingTest, ProductMatchesIndividualPairings) {
  const auto& gp = GroupParams::bn254();
  G1Point p2 = g1_scalar_mul(Scalar::from_u64(2), gp.g1);
  G2Point q3 = g2_scalar_mul(Scalar::from_u64(3), gp.g2);
  std::vector<std::pair<G1Point, G2Point>> pairs = {{p2, gp.g2}, {gp.g1, q3}};
  EXPECT_EQ(pairing_product(pairs), pairing(gp.g1, gp.g2).pow(Scalar::from_u64(5)));
}

TEST(GroupTest, GeneratorOrders) {
  const auto& gp = GroupParams::bn254();
  EXPECT_TRUE(gp.g1.mul(Fr::kModulus).is_identity());
  EXPECT_TRUE(gp.g2.mul(Fr::kModulus).is_identity());
  EXPECT_EQ(gp.embedding_degree, 12u);
}

TEST(GroupTest, AdditionLaws) {
  const auto& gp = GroupParams::bn254();
  G1Point a = gp.g1.mul(U256(5)), b = gp.g1.mul(U256(11));
  EXPECT_EQ(g1_add(a, b), gp.g1.mul(U256(16)));
  EXPECT_EQ(a + a, a.dbl());
  EXPECT_TRUE((a - a).is_identity());
  EXPECT_EQ(a + G1Point::identity(), a);
}

TEST(EncodingTest, G1CompressionRoundTrip) {
  const auto& gp = GroupParams::bn254();
  SeededRandom rng(8);
  for (int i = 0; i < 20; ++i) {
    G1Point p = g1_scalar_mul(Scalar::random_nonzero(rng), gp.g1);
    CompressedPoint c = g1_compress(p);
    EXPECT_EQ(g1_decompress(c), p);
    EXPECT_EQ(g1_compress(-p)[0] & kSignFlag, (c[0] & kSignFlag) ^ kSignFlag);
  }
  CompressedPoint id = g1_compress(G1Point::identity());
  EXPECT_EQ(id[0], kIdentityFlag);
  EXPECT_TRUE(g1_decompress(id).is_identity());
}

TEST(EncodingTest, GeneratorEncodingIsOne) {
  CompressedPoint c = g1_compress(GroupParams::bn254().g1);
  CompressedPoint expected{};
  expected[31] = 1;  // x = 1, y = 2 is even
  EXPECT_EQ(c, expected);
}

TEST(EncodingTest, G1DecompressRejectsBadInput) {
  CompressedPoint bad{};
  bad[0] = kIdentityFlag;
  bad[31] = 1;
  EXPECT_THROW(g1_decompress(bad), Error);
  // x = 0 gives 3, which is not a square modulo p.
  CompressedPoint zero_x{};
  EXPECT_THROW(g1_decompress(zero_x), Error);
  auto too_big = Fp::kModulus.to_bytes_be();
  EXPECT_THROW(g1_decompress(too_big), Error);
  std::vector<uint8_t> short_buf(31);
  EXPECT_THROW(g1_decompress(short_buf), Error);
}

TEST(EncodingTest, G2SerializeRoundTripAndValidation) {
  const auto& gp = GroupParams::bn254();
  G2Point q = g2_scalar_mul(Scalar::from_u64(77), gp.g2);
  auto bytes = g2_serialize(q);
  EXPECT_EQ(g2_deserialize(bytes), q);
  std::array<uint8_t, kG2Bytes> zero{};
  EXPECT_TRUE(g2_deserialize(zero).is_identity());
  bytes[127] ^= 1;
  EXPECT_THROW(g2_deserialize(bytes), Error);
}

// Square root in Fp2 through the norm, for building test points.
std::optional<Fp2> fp2_sqrt(const Fp2& a) {
  auto s = (a.c0.square() + a.c1.square()).sqrt();
  if (!s) return std::nullopt;
  Fp half = Fp::from_u64(2).inverse();
  for (Fp t : {(a.c0 + *s) * half, (a.c0 - *s) * half}) {
    auto c0 = t.sqrt();
    if (!c0 || c0->is_zero()) continue;
    Fp2 y{*c0, a.c1 * c0->dbl().inverse()};
    if (y.square() == a) return y;
  }
  return std::nullopt;
}

TEST(EncodingTest, G2RejectsPointOutsideSubgroup) {
  // The twist has a large cofactor, so a point with a small x is almost
  // surely outside the r-torsion.
  std::optional<G2Point> q;
  for (uint64_t k = 1; !q; ++k) {
    Fp2 x{Fp::from_u64(k), Fp::one()};
    if (auto y = fp2_sqrt(x.square() * x + bn254::G2Curve::b())) {
      q = G2Point::from_affine(x, *y);
    }
  }
  EXPECT_FALSE(bn254::g2_in_subgroup(*q));
  try {
    g2_deserialize(g2_serialize(*q));
    FAIL() << "accepted a point outside the subgroup";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInSubgroup);
  }
  EXPECT_THROW(pairing(GroupParams::bn254().g1, *q), Error);

  auto bytes = g2_serialize(GroupParams::bn254().g2);
  bytes[0] ^= 0x01;
  EXPECT_THROW(g2_deserialize(bytes), Error);
}

// y^2 = x^3 + 3 over F_11 has 11 affine points plus infinity.
TEST(ToyCurveTest, PointCountAndDecompression) {
  int count = 1;
  for (uint64_t x = 0; x < 11; ++x) {
    for (uint64_t y = 0; y < 11; ++y) {
      if ((y * y) % 11 == (x * x * x + 3) % 11) ++count;
    }
  }
  EXPECT_EQ(count, 12);
  ToyPoint p = decompress_point<ToyCurve>(ToyFp::from_u64(1), false);
  auto a = p.to_affine();
  EXPECT_EQ(a.y.to_u256(), U256(2));
  EXPECT_EQ(decompress_point<ToyCurve>(ToyFp::from_u64(1), true).to_affine().y.to_u256(),
            U256(9));
  EXPECT_THROW(decompress_point<ToyCurve>(ToyFp::from_u64(3), false), Error);
  EXPECT_TRUE(p.mul(U256(12)).is_identity());
}

}  // namespace
}  // namespace blsces
