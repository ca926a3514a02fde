#ifndef BLSCES_ZK_BACKEND_H_
#define BLSCES_ZK_BACKEND_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blsces/random.h"
#include "blsces/zk/r1cs.h"

namespace blsces::zk {

struct BackendParams {
  std::string backend;
  std::vector<uint8_t> data;
  friend bool operator==(const BackendParams&, const BackendParams&) = default;
};

class ProofBackend {
 public:
  virtual ~ProofBackend() = default;
  virtual std::string id() const = 0;
  virtual BackendParams setup(RandomSource& rng) const = 0;
  virtual std::vector<uint8_t> prove(const BackendParams& params, const ConstraintSystem& cs,
                                     std::span<const Fr> assignment) const = 0;
  // On rejection, detail names the reason.
  virtual bool verify(const BackendParams& params, const ConstraintSystem& cs,
                      std::span<const Fr> public_inputs, std::span<const uint8_t> proof,
                      std::string* detail) const = 0;
};

// The transparent backend's proof is the witness itself; it is sound but
// not zero-knowledge.
inline constexpr std::string_view kTransparentBackend = "transparent";

// Throws kUnsupportedBackend for unknown ids.
std::unique_ptr<ProofBackend> make_backend(std::string_view id);
// BLSCES_BACKEND if set, otherwise the transparent backend.
std::string default_backend_id();

}  // namespace blsces::zk

#endif  // BLSCES_ZK_BACKEND_H_
