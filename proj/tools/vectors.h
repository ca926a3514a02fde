#ifndef BLSCES_TOOLS_VECTORS_H_
#define BLSCES_TOOLS_VECTORS_H_

#include <string>
#include <utility>
#include <vector>

namespace blsces::cli {

// Deterministic vectors as JSON, for cross-checking with other
// implementations.
std::string bn254_vectors();
std::string toy_vectors();

// Named consistency checks and whether each passed.
std::vector<std::pair<std::string, bool>> self_test(bool toy_only);

}  // namespace blsces::cli

#endif  // BLSCES_TOOLS_VECTORS_H_
