#ifndef BLSCES_ZK_ZKCES_H_
#define BLSCES_ZK_ZKCES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "blsces/bls.h"
#include "blsces/ces.h"
#include "blsces/credential.h"
#include "blsces/random.h"
#include "blsces/zk/backend.h"
#include "blsces/zk/gadgets.h"
#include "blsces/zk/r1cs.h"

// Extraction proofs that hide the extracted claims. The statement proves
// that each public (x_i, sign_i) is the try-and-increment hash of a claim
// message at index i, that X is in the CEAS, and that an optional predicate
// holds on one extracted value.
namespace blsces::zk {

// Base field of the hashing curve y^2 = x^3 + b.
struct CurveParams {
  std::string name;
  U256 p;
  size_t bits = 0;
  uint64_t b = 0;

  static const CurveParams& bn254();
  static const CurveParams& toy();
  // Throws kInvalidArgument for unknown names.
  static const CurveParams& by_name(std::string_view name);
};

// Left-to-right square-and-multiply for base^((p-1)/2) mod p.
struct EulerChain {
  std::vector<MulStep> steps;
  U256 result;
};
EulerChain euler_chain(const U256& p, const U256& base);
size_t euler_chain_length(const U256& p);

struct HashToCurveWitness {
  size_t index = 0;
  U256 x;
  bool sign_bit = false;
  uint8_t counter = 0;
  MulStep x_squared;  // x * x
  MulStep rhs;        // x^2 * x + b
  EulerChain chain;   // rhs^((p-1)/2) = 1
};

// The smallest counter whose digest lands on the curve, with the residuosity
// evidence. Throws kCounterExhausted, or kHiddenClaim for a blinded claim.
HashToCurveWitness hash_to_curve_witness(const CurveParams& params, const Ceas& ceas,
                                         size_t i, const Claim& claim);

struct Predicate {
  enum class Kind { kNone, kRange, kEquals };

  Kind kind = Kind::kNone;
  size_t index = 0;
  uint64_t lo = 0, hi = 0;  // inclusive, on a decimal value
  std::string value;

  static Predicate none() { return {}; }
  static Predicate range(size_t index, uint64_t lo, uint64_t hi);
  static Predicate equals(size_t index, std::string value);
  // "none", "range:<i>:<lo>:<hi>" or "equals:<i>:<value>".
  static Predicate parse(std::string_view text);
  std::string to_string() const;

  // Direct evaluation on a claim value.
  bool holds(std::string_view claim_value) const;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

// Longest decimal value a range predicate accepts.
inline constexpr size_t kMaxDecimalDigits = 18;

struct ClaimLengths {
  uint32_t subject = 0, property = 0, value = 0;
  friend bool operator==(const ClaimLengths&, const ClaimLengths&) = default;
};

// Public inputs in canonical order: for each i in X ascending, the four
// 64-bit limbs of x_i (least significant first) and sign_i; then each CEAS
// canonical byte; then the N membership bits of X.
struct PublicInputs {
  IndexSet x;
  std::vector<U256> xs;
  std::vector<bool> signs;
  std::vector<uint8_t> ceas_bytes;

  std::vector<Fr> field_elements() const;
  friend bool operator==(const PublicInputs&, const PublicInputs&) = default;
};

// Statement metadata the verifier needs beyond the public inputs.
struct StatementShape {
  std::vector<ClaimLengths> lengths;  // per i in X ascending
  Predicate predicate;
  friend bool operator==(const StatementShape&, const StatementShape&) = default;
};

struct Statement {
  ConstraintSystem cs;
  std::vector<Fr> assignment;  // full assignment, prover side only
  PublicInputs pub;
  StatementShape shape;
};

// Prover side. Throws kMissingWitness when a witness for some i in X is
// absent and kPredicateArity when the predicate index is outside X.
Statement build_statement(const CurveParams& params, const Credential& cred, const Ceas& ceas,
                          const std::vector<HashToCurveWitness>& witnesses, const IndexSet& x,
                          const Predicate& predicate);

// Verifier side: the same constraint system built from public data only.
ConstraintSystem build_statement_shape(const CurveParams& params, const PublicInputs& pub,
                                       const StatementShape& shape);

struct ZkKeys {
  bls::KeyPair keys;
  BackendParams params;
};
ZkKeys zk_setup(RandomSource& rng, std::string_view backend_id);

struct ProofBundle {
  std::string curve = "bn254";
  std::string backend;
  PublicInputs pub;
  StatementShape shape;
  bls::Signature sigma;
  std::vector<uint8_t> proof;

  friend bool operator==(const ProofBundle&, const ProofBundle&) = default;
};

// Throws kUnsatisfied when the statement does not hold, for example when
// the predicate is false.
ProofBundle prove_extraction(const BackendParams& params, const SignedCredential& sc,
                             const IndexSet& x, const Predicate& predicate);

struct ZkVerdict {
  bool b1 = false;  // X in CEAS
  bool b2 = false;  // aggregate pairing equation on the public points
  bool b3 = false;  // proof verifies
  std::string detail;

  bool accepted() const { return b1 && b2 && b3; }
};

ZkVerdict zk_verify(const BackendParams& params, const G2Point& pk, const ProofBundle& bundle);

std::string write_proof_bundle(const ProofBundle& bundle);
ProofBundle read_proof_bundle(std::string_view text);

}  // namespace blsces::zk

#endif  // BLSCES_ZK_ZKCES_H_
