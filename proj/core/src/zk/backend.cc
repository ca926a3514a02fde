#include "blsces/zk/backend.h"

#include <cstdlib>

#include "blsces/error.h"

namespace blsces::zk {
namespace {

// Witness values: tag 0 for zero, 1 for one, 2 followed by 32 big-endian
// bytes otherwise. Most witness variables are bits.
class TransparentBackend final : public ProofBackend {
 public:
  std::string id() const override { return std::string(kTransparentBackend); }

  BackendParams setup(RandomSource&) const override { return {id(), {}}; }

  std::vector<uint8_t> prove(const BackendParams& params, const ConstraintSystem& cs,
                             std::span<const Fr> assignment) const override {
    check_params(params);
    if (assignment.size() != cs.num_vars()) {
      throw Error(ErrorCode::kInvalidArgument, "assignment size mismatch");
    }
    std::vector<uint8_t> out;
    const uint32_t n = static_cast<uint32_t>(cs.num_witness());
    for (int k = 3; k >= 0; --k) out.push_back(static_cast<uint8_t>(n >> (8 * k)));
    for (size_t v = 1 + cs.num_public(); v < cs.num_vars(); ++v) {
      const Fr& f = assignment[v];
      if (f.is_zero()) {
        out.push_back(0);
      } else if (f.is_one()) {
        out.push_back(1);
      } else {
        out.push_back(2);
        auto bytes = f.to_bytes_be();
        out.insert(out.end(), bytes.begin(), bytes.end());
      }
    }
    return out;
  }

  bool verify(const BackendParams& params, const ConstraintSystem& cs,
              std::span<const Fr> public_inputs, std::span<const uint8_t> proof,
              std::string* detail) const override {
    check_params(params);
    auto fail = [&](const std::string& why) {
      if (detail) *detail = why;
      return false;
    };
    if (public_inputs.size() != cs.num_public()) return fail("public input count mismatch");
    if (proof.size() < 4) return fail("proof truncated");
    uint32_t n = 0;
    for (int k = 0; k < 4; ++k) n = n << 8 | proof[k];
    if (n != cs.num_witness()) return fail("witness count mismatch");
    std::vector<Fr> assignment;
    assignment.reserve(cs.num_vars());
    assignment.push_back(Fr::one());
    assignment.insert(assignment.end(), public_inputs.begin(), public_inputs.end());
    size_t pos = 4;
    while (pos < proof.size()) {
      uint8_t tag = proof[pos++];
      if (tag == 0) {
        assignment.push_back(Fr::zero());
      } else if (tag == 1) {
        assignment.push_back(Fr::one());
      } else if (tag == 2 && pos + 32 <= proof.size()) {
        auto v = Fr::from_canonical(U256::from_bytes_be(proof.subspan(pos, 32)));
        if (!v) return fail("non-canonical witness value");
        assignment.push_back(*v);
        pos += 32;
      } else {
        return fail("malformed proof encoding");
      }
    }
    if (assignment.size() != cs.num_vars()) return fail("witness count mismatch");
    if (auto bad = cs.first_unsatisfied(assignment)) {
      return fail("constraint " + std::to_string(*bad) + " [" + cs.label(*bad) +
                  "] is not satisfied");
    }
    return true;
  }

 private:
  void check_params(const BackendParams& params) const {
    if (params.backend != id()) {
      throw Error(ErrorCode::kUnsupportedBackend,
                  "parameters are for backend '" + params.backend + "'");
    }
  }
};

}  // namespace

std::unique_ptr<ProofBackend> make_backend(std::string_view id) {
  if (id == kTransparentBackend) return std::make_unique<TransparentBackend>();
  throw Error(ErrorCode::kUnsupportedBackend, "unknown proof backend '" + std::string(id) + "'");
}

std::string default_backend_id() {
  const char* env = std::getenv("BLSCES_BACKEND");
  if (env != nullptr && *env != '\0') return env;
  return std::string(kTransparentBackend);
}

}  // namespace blsces::zk
