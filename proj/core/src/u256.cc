#include "blsces/u256.h"

#include <algorithm>

#include "blsces/error.h"

namespace blsces {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kOffCurve: return "off_curve";
    case ErrorCode::kNotInSubgroup: return "not_in_subgroup";
    case ErrorCode::kMalformedEncoding: return "malformed_encoding";
    case ErrorCode::kNotQuadraticResidue: return "not_quadratic_residue";
    case ErrorCode::kCounterExhausted: return "counter_exhausted";
    case ErrorCode::kLengthMismatch: return "length_mismatch";
    case ErrorCode::kDuplicateMessage: return "duplicate_message";
    case ErrorCode::kWidthMismatch: return "width_mismatch";
    case ErrorCode::kIndexOutOfRange: return "index_out_of_range";
    case ErrorCode::kHiddenClaim: return "hidden_claim";
    case ErrorCode::kMissingWitness: return "missing_witness";
    case ErrorCode::kPredicateArity: return "predicate_arity";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kUnsupportedBackend: return "unsupported_backend";
    case ErrorCode::kUnsatisfied: return "unsatisfied";
  }
  return "unknown";
}

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

U256 U256::from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty() || hex.size() > 64) {
    throw Error(ErrorCode::kParse, "bad 256-bit hex literal");
  }
  U256 r;
  for (char c : hex) {
    int d = hex_digit(c);
    if (d < 0) throw Error(ErrorCode::kParse, "bad hex digit");
    r = shl(r, 4);
    r.limb[0] |= static_cast<uint64_t>(d);
  }
  return r;
}

U256 U256::from_decimal(std::string_view dec) {
  if (dec.empty()) throw Error(ErrorCode::kParse, "empty decimal literal");
  U256 r;
  for (char c : dec) {
    if (c < '0' || c > '9') throw Error(ErrorCode::kParse, "bad decimal digit");
    // r = r * 10 + d
    uint64_t carry = static_cast<uint64_t>(c - '0');
    for (auto& l : r.limb) {
      u128 t = static_cast<u128>(l) * 10 + carry;
      l = static_cast<uint64_t>(t);
      carry = static_cast<uint64_t>(t >> 64);
    }
    if (carry != 0) throw Error(ErrorCode::kParse, "decimal literal overflow");
  }
  return r;
}

U256 U256::from_bytes_be(std::span<const uint8_t> bytes) {
  if (bytes.size() > 32) {
    throw Error(ErrorCode::kMalformedEncoding, "more than 32 bytes");
  }
  U256 r;
  for (uint8_t b : bytes) {
    r = shl(r, 8);
    r.limb[0] |= b;
  }
  return r;
}

std::string U256::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s(64, '0');
  for (size_t i = 0; i < 64; ++i) {
    size_t nibble = 63 - i;
    s[i] = kDigits[(limb[nibble / 16] >> ((nibble % 16) * 4)) & 0xf];
  }
  return s;
}

std::string U256::to_decimal() const {
  if (is_zero()) return "0";
  std::string s;
  U256 cur = *this;
  while (!cur.is_zero()) {
    uint64_t rem = 0;
    cur = div_small(cur, 10, &rem);
    s.push_back(static_cast<char>('0' + rem));
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::array<uint8_t, 32> U256::to_bytes_be() const {
  std::array<uint8_t, 32> out{};
  for (size_t i = 0; i < 32; ++i) {
    out[31 - i] = static_cast<uint8_t>(limb[i / 8] >> ((i % 8) * 8));
  }
  return out;
}

}  // namespace blsces
