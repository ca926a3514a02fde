#ifndef BLSCES_TESTS_ZK_TEST_UTIL_H_
#define BLSCES_TESTS_ZK_TEST_UTIL_H_

#include <random>
#include <string>
#include <vector>

#include "blsces/credential.h"
#include "blsces/zk/r1cs.h"

namespace blsces::zk::testing {

inline Fr random_fr(std::mt19937_64& g) {
  U256 v(g(), g(), g(), g() >> 3);
  return Fr::reduce(v);
}

// Same variables, same constraints with the same coefficients and labels.
inline bool same_system(const ConstraintSystem& a, const ConstraintSystem& b) {
  if (a.num_vars() != b.num_vars() || a.num_public() != b.num_public() ||
      a.num_constraints() != b.num_constraints()) {
    return false;
  }
  for (size_t i = 0; i < a.num_constraints(); ++i) {
    if (a.label(i) != b.label(i)) return false;
    for (int w = 0; w < 3; ++w) {
      auto ra = a.row(i, w), rb = b.row(i, w);
      if (ra.size() != rb.size()) return false;
      for (size_t k = 0; k < ra.size(); ++k) {
        if (ra[k].var != rb[k].var || !(a.coeff(ra[k].coeff) == b.coeff(rb[k].coeff))) {
          return false;
        }
      }
    }
  }
  return true;
}

struct SweepResult {
  size_t tried = 0;
  size_t survived = 0;
  std::string first_survivor;
};

// Changes one witness variable at a time and rechecks the constraints that
// mention it. Boolean variables are flipped; every variable is also shifted
// by a random nonzero amount.
inline SweepResult mutation_sweep(const ConstraintSystem& cs, std::vector<Fr> assignment,
                                  std::mt19937_64& g) {
  SweepResult out;
  const auto occ = cs.occurrences();
  for (size_t v = 1 + cs.num_public(); v < cs.num_vars(); ++v) {
    const Fr original = assignment[v];
    std::vector<Fr> mutants;
    if (original.is_zero() || original.is_one()) mutants.push_back(Fr::one() - original);
    Fr delta = random_fr(g);
    if (delta.is_zero()) delta = Fr::one();
    mutants.push_back(original + delta);
    for (const Fr& m : mutants) {
      assignment[v] = m;
      ++out.tried;
      bool all_hold = true;
      for (uint32_t c : occ[v]) {
        if (!cs.is_satisfied(c, assignment)) {
          all_hold = false;
          break;
        }
      }
      if (all_hold) {
        if (out.survived++ == 0) {
          out.first_survivor = "w" + std::to_string(v) +
                               (occ[v].empty() ? " (unused)" : " in " + cs.label(occ[v][0]));
        }
      }
    }
    assignment[v] = original;
  }
  return out;
}

inline std::string random_digits(std::mt19937_64& g, size_t max_len) {
  std::string s(1 + g() % max_len, '0');
  for (auto& c : s) c = static_cast<char>('0' + g() % 10);
  return s;
}

// Credentials with short random claims; every third value is numeric.
inline Credential random_credential(std::mt19937_64& g, size_t n) {
  static const char* kProps[] = {"name", "age", "country", "degree", "year"};
  Credential c;
  std::string subject = "did:ex:" + std::to_string(g() % 1000);
  for (size_t i = 0; i < n; ++i) {
    std::string value;
    if (g() % 3 == 0) {
      value = random_digits(g, 3);
    } else {
      value.resize(g() % 6);
      for (auto& ch : value) ch = static_cast<char>('a' + g() % 26);
    }
    c.claims.push_back(Claim::make(subject, kProps[g() % 5], value));
  }
  return c;
}

}  // namespace blsces::zk::testing

#endif  // BLSCES_TESTS_ZK_TEST_UTIL_H_
