#ifndef BLSCES_FORMATS_H_
#define BLSCES_FORMATS_H_

#include <optional>
#include <string>
#include <string_view>

#include "blsces/bls.h"
#include "blsces/ces.h"
#include "blsces/credential.h"

// JSON file formats for humans and tools. Nothing here is hashed or signed;
// signed bytes always come from the canonical encodings in credential.h.
// Writers are deterministic (sorted keys, fixed indentation). Readers throw
// Error(kParse) or the underlying decoding error.
namespace blsces::io {

inline constexpr int kFormatVersion = 1;

struct CredentialFile {
  Credential cred;
  std::optional<Ceas> ceas;

  friend bool operator==(const CredentialFile&, const CredentialFile&) = default;
};

std::string write_credential(const Credential& cred,
                             const std::optional<Ceas>& ceas = std::nullopt);
CredentialFile read_credential(std::string_view text);

std::string write_ceas(const Ceas& ceas);
Ceas read_ceas(std::string_view text);

std::string write_signed_credential(const SignedCredential& sc);
SignedCredential read_signed_credential(std::string_view text);

std::string write_presentation(const ExtractedPresentation& pres);
ExtractedPresentation read_presentation(std::string_view text);

std::string write_secret_key(const bls::KeyPair& kp);
bls::KeyPair read_secret_key(std::string_view text);

std::string write_public_key(const G2Point& pk);
// Validates the curve equation and subgroup membership.
G2Point read_public_key(std::string_view text);

}  // namespace blsces::io

#endif  // BLSCES_FORMATS_H_
