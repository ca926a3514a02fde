#ifndef BLSCES_CREDENTIAL_H_
#define BLSCES_CREDENTIAL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blsces {

inline constexpr size_t kMaxClaims = 64;

// A subject-property-value triple. An absent value is the BLINDED sentinel
// and marks the claim hidden; in both-blinded mode the property is absent too.
struct Claim {
  std::string subject;
  std::optional<std::string> property;
  std::optional<std::string> value;

  static Claim make(std::string subject, std::string property, std::string value);

  bool hidden() const { return !value.has_value(); }
  // Copy with the value (and optionally the property) replaced by BLINDED.
  Claim blinded(bool blind_property) const;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct Credential {
  std::vector<Claim> claims;

  size_t size() const { return claims.size(); }
  const Claim& operator[](size_t i) const { return claims[i]; }
  friend bool operator==(const Credential&, const Credential&) = default;
};

// Subset of {0, ..., width - 1}, width <= 64.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(size_t width, uint64_t mask);

  static IndexSet from_indices(size_t width, std::span<const size_t> indices);
  static IndexSet full(size_t width);
  // Comma-separated list such as "0,2,3". Throws kParse / kIndexOutOfRange.
  static IndexSet parse(size_t width, std::string_view text);

  size_t width() const { return width_; }
  uint64_t mask() const { return mask_; }
  bool contains(size_t i) const { return i < width_ && ((mask_ >> i) & 1) != 0; }
  bool empty() const { return mask_ == 0; }
  size_t count() const;
  bool is_subset_of(const IndexSet& other) const;
  std::vector<size_t> indices() const;  // ascending
  std::string to_string() const;        // "{0,2}"

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  size_t width_ = 0;
  uint64_t mask_ = 0;
};

// Content extraction access structure: an explicit, canonically ordered set
// of allowed extraction subsets.
class Ceas {
 public:
  Ceas() = default;
  // Sorts and deduplicates. Throws on an empty family, a width mismatch or
  // a width outside [1, 64].
  Ceas(size_t width, std::vector<IndexSet> subsets);

  size_t width() const { return width_; }
  const std::vector<IndexSet>& subsets() const { return subsets_; }

  // Throws kWidthMismatch when x has a different width.
  bool contains(const IndexSet& x) const;

  // u32 width || u32 count || each subset as ceil(width / 8) bytes, bit i of
  // the subset in byte i / 8 at position i % 8 (LSB first), subsets ordered
  // by mask. All integers big-endian.
  std::vector<uint8_t> canonical_bytes() const;
  static Ceas from_canonical_bytes(std::span<const uint8_t> bytes);

  friend bool operator==(const Ceas&, const Ceas&) = default;

 private:
  size_t width_ = 0;
  std::vector<IndexSet> subsets_;
};

bool is_sub_credential(const Credential& sub, const Credential& full);
IndexSet clear_indices(const Credential& c);
bool ceas_contains(const Ceas& ceas, const IndexSet& x);

// Hides every claim outside x.
Credential blind_outside(const Credential& c, const IndexSet& x, bool blind_property);

// u32 len || CEAS bytes || u32 n || u32 i || (u32 len || field) for subject,
// property and value || optional counter byte. Throws kHiddenClaim for a
// hidden claim and kIndexOutOfRange when i >= n.
std::vector<uint8_t> encode_claim_message(const Ceas& ceas, size_t n, size_t i,
                                          const Claim& claim,
                                          std::optional<uint8_t> counter = {});
// Same, with the CEAS already serialized.
std::vector<uint8_t> encode_claim_message(std::span<const uint8_t> ceas_bytes,
                                          size_t n, size_t i, const Claim& claim,
                                          std::optional<uint8_t> counter = {});

}  // namespace blsces

#endif  // BLSCES_CREDENTIAL_H_
