#include "blsces/credential.h"

#include <algorithm>
#include <bit>
#include <charconv>

#include "blsces/error.h"

namespace blsces {
namespace {

void check_width(size_t width) {
  if (width == 0 || width > kMaxClaims) {
    throw Error(ErrorCode::kInvalidArgument,
                "claim count must be in [1, 64], got " + std::to_string(width));
  }
}

uint64_t width_mask(size_t width) {
  return width == 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
}

void put_u32(std::vector<uint8_t>& out, size_t v) {
  if (v > 0xffffffffu) throw Error(ErrorCode::kInvalidArgument, "length exceeds 2^32");
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<uint8_t>(v >> s));
}

void put_field(std::vector<uint8_t>& out, std::string_view s) {
  put_u32(out, s.size());
  out.insert(out.end(), s.begin(), s.end());
}

uint32_t get_u32(std::span<const uint8_t> in, size_t& pos) {
  if (in.size() - pos < 4) throw Error(ErrorCode::kMalformedEncoding, "truncated CEAS");
  uint32_t v = 0;
  for (int k = 0; k < 4; ++k) v = v << 8 | in[pos++];
  return v;
}

}  // namespace

Claim Claim::make(std::string subject, std::string property, std::string value) {
  return Claim{std::move(subject), std::move(property), std::move(value)};
}

Claim Claim::blinded(bool blind_property) const {
  Claim c = *this;
  c.value.reset();
  if (blind_property) c.property.reset();
  return c;
}

IndexSet::IndexSet(size_t width, uint64_t mask) : width_(width), mask_(mask) {
  check_width(width);
  if ((mask & ~width_mask(width)) != 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "index set exceeds its width");
  }
}

IndexSet IndexSet::from_indices(size_t width, std::span<const size_t> indices) {
  check_width(width);
  uint64_t mask = 0;
  for (size_t i : indices) {
    if (i >= width) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "index " + std::to_string(i) + " out of range for " +
                      std::to_string(width) + " claims");
    }
    mask |= uint64_t{1} << i;
  }
  return IndexSet(width, mask);
}

IndexSet IndexSet::full(size_t width) {
  check_width(width);
  return IndexSet(width, width_mask(width));
}

IndexSet IndexSet::parse(size_t width, std::string_view text) {
  std::vector<size_t> idx;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    size_t v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size()) {
      throw Error(ErrorCode::kParse, "bad index '" + std::string(tok) + "'");
    }
    idx.push_back(v);
    pos = comma + 1;
  }
  return from_indices(width, idx);
}

size_t IndexSet::count() const { return static_cast<size_t>(std::popcount(mask_)); }

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return width_ == other.width_ && (mask_ & ~other.mask_) == 0;
}

std::vector<size_t> IndexSet::indices() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < width_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (size_t i : indices()) {
    if (s.size() > 1) s += ",";
    s += std::to_string(i);
  }
  return s + "}";
}

Ceas::Ceas(size_t width, std::vector<IndexSet> subsets) : width_(width) {
  check_width(width);
  if (subsets.empty()) throw Error(ErrorCode::kInvalidArgument, "CEAS must be non-empty");
  for (const auto& s : subsets) {
    if (s.width() != width) {
      throw Error(ErrorCode::kWidthMismatch, "CEAS subset width differs from N");
    }
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const IndexSet& a, const IndexSet& b) { return a.mask() < b.mask(); });
  subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
  subsets_ = std::move(subsets);
}

bool Ceas::contains(const IndexSet& x) const {
  if (x.width() != width_) {
    throw Error(ErrorCode::kWidthMismatch,
                "extraction set width " + std::to_string(x.width()) +
                    " differs from CEAS width " + std::to_string(width_));
  }
  return std::binary_search(
      subsets_.begin(), subsets_.end(), x,
      [](const IndexSet& a, const IndexSet& b) { return a.mask() < b.mask(); });
}

std::vector<uint8_t> Ceas::canonical_bytes() const {
  std::vector<uint8_t> out;
  put_u32(out, width_);
  put_u32(out, subsets_.size());
  const size_t per = (width_ + 7) / 8;
  for (const auto& s : subsets_) {
    for (size_t b = 0; b < per; ++b) out.push_back(static_cast<uint8_t>(s.mask() >> (8 * b)));
  }
  return out;
}

Ceas Ceas::from_canonical_bytes(std::span<const uint8_t> bytes) {
  size_t pos = 0;
  const size_t width = get_u32(bytes, pos);
  const size_t count = get_u32(bytes, pos);
  check_width(width);
  const size_t per = (width + 7) / 8;
  if (count == 0 || (bytes.size() - pos) != count * per) {
    throw Error(ErrorCode::kMalformedEncoding, "CEAS length mismatch");
  }
  std::vector<IndexSet> subsets;
  for (size_t k = 0; k < count; ++k) {
    uint64_t mask = 0;
    for (size_t b = 0; b < per; ++b) mask |= uint64_t{bytes[pos++]} << (8 * b);
    subsets.emplace_back(width, mask);
  }
  Ceas c(width, std::move(subsets));
  if (c.canonical_bytes().size() != bytes.size() ||
      !std::equal(bytes.begin(), bytes.end(), c.canonical_bytes().begin())) {
    throw Error(ErrorCode::kMalformedEncoding, "CEAS bytes are not canonical");
  }
  return c;
}

bool is_sub_credential(const Credential& sub, const Credential& full) {
  if (sub.size() != full.size()) return false;
  bool any_hidden = false;
  for (size_t i = 0; i < sub.size(); ++i) {
    if (sub[i].hidden()) {
      any_hidden = true;
    } else if (!(sub[i] == full[i])) {
      return false;
    }
  }
  return any_hidden;
}

IndexSet clear_indices(const Credential& c) {
  check_width(c.size());
  uint64_t mask = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (!c[i].hidden()) mask |= uint64_t{1} << i;
  }
  return IndexSet(c.size(), mask);
}

bool ceas_contains(const Ceas& ceas, const IndexSet& x) { return ceas.contains(x); }

Credential blind_outside(const Credential& c, const IndexSet& x, bool blind_property) {
  if (x.width() != c.size()) {
    throw Error(ErrorCode::kWidthMismatch, "extraction set width differs from N");
  }
  Credential out = c;
  for (size_t i = 0; i < c.size(); ++i) {
    if (!x.contains(i) && !c[i].hidden()) out.claims[i] = c[i].blinded(blind_property);
  }
  return out;
}

std::vector<uint8_t> encode_claim_message(std::span<const uint8_t> ceas_bytes,
                                          size_t n, size_t i, const Claim& claim,
                                          std::optional<uint8_t> counter) {
  if (claim.hidden() || !claim.property) {
    throw Error(ErrorCode::kHiddenClaim, "hidden claims are never signed");
  }
  if (i >= n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "claim index " + std::to_string(i) + " >= " + std::to_string(n));
  }
  std::vector<uint8_t> out;
  out.reserve(ceas_bytes.size() + 24 + claim.subject.size() +
              claim.property->size() + claim.value->size());
  put_u32(out, ceas_bytes.size());
  out.insert(out.end(), ceas_bytes.begin(), ceas_bytes.end());
  put_u32(out, n);
  put_u32(out, i);
  put_field(out, claim.subject);
  put_field(out, *claim.property);
  put_field(out, *claim.value);
  if (counter) out.push_back(*counter);
  return out;
}

std::vector<uint8_t> encode_claim_message(const Ceas& ceas, size_t n, size_t i,
                                          const Claim& claim,
                                          std::optional<uint8_t> counter) {
  return encode_claim_message(ceas.canonical_bytes(), n, i, claim, counter);
}

}  // namespace blsces
