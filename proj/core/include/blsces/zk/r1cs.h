#ifndef BLSCES_ZK_R1CS_H_
#define BLSCES_ZK_R1CS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "blsces/field.h"

// Rank-1 constraint systems over the BN-254 scalar field. Variable 0 is the
// constant one, variables 1..num_public are public inputs and the rest are
// witness.
namespace blsces::zk {

using Var = uint32_t;
inline constexpr Var kOne = 0;

class LinearCombination {
 public:
  LinearCombination() = default;
  LinearCombination(Var v) : terms_{{v, Fr::one()}} {}  // NOLINT
  static LinearCombination constant(const Fr& c);
  static LinearCombination constant(uint64_t c) { return constant(Fr::from_u64(c)); }

  LinearCombination& add(Var v, const Fr& c);
  LinearCombination& operator+=(const LinearCombination& o);
  LinearCombination& operator-=(const LinearCombination& o);
  LinearCombination operator+(const LinearCombination& o) const;
  LinearCombination operator-(const LinearCombination& o) const;
  LinearCombination operator*(const Fr& s) const;

  const std::vector<std::pair<Var, Fr>>& terms() const { return terms_; }

 private:
  std::vector<std::pair<Var, Fr>> terms_;
};

using LC = LinearCombination;

// Immutable once built. Terms of all constraints live in one arena with
// interned coefficients.
class ConstraintSystem {
 public:
  struct Term {
    Var var;
    uint32_t coeff;
  };

  size_t num_vars() const { return num_vars_; }
  size_t num_public() const { return num_public_; }
  size_t num_witness() const { return num_vars_ - 1 - num_public_; }
  size_t num_constraints() const { return labels_.size(); }
  size_t num_terms() const { return terms_.size(); }

  // Row 0, 1, 2 for A, B, C.
  std::span<const Term> row(size_t constraint, int which) const;
  const Fr& coeff(uint32_t id) const { return coeffs_[id]; }
  const std::string& label(size_t constraint) const { return label_names_[labels_[constraint]]; }

  Fr evaluate(std::span<const Term> row, std::span<const Fr> assignment) const;
  bool is_satisfied(size_t constraint, std::span<const Fr> assignment) const;
  // Index of the first violated constraint, if any. The assignment must
  // have num_vars() entries with assignment[0] = 1.
  std::optional<size_t> first_unsatisfied(std::span<const Fr> assignment) const;

  // For each variable, the constraints mentioning it (deduplicated).
  std::vector<std::vector<uint32_t>> occurrences() const;

  // One constraint per line: "<index> [<label>] (A) * (B) = (C)".
  std::string dump() const;

 private:
  friend class Builder;

  size_t num_vars_ = 1;
  size_t num_public_ = 0;
  std::vector<Term> terms_;
  std::vector<Fr> coeffs_;
  std::vector<uint32_t> offsets_{0};  // 3 per constraint
  std::vector<uint32_t> labels_;
  std::vector<std::string> label_names_;
};

// Builds a constraint system and, in prover mode, its assignment. In shape
// mode no values are tracked, so the shape cannot depend on them.
class Builder {
 public:
  explicit Builder(bool compute_values);

  bool computing() const { return computing_; }

  // All public inputs must be allocated before the first witness variable.
  Var alloc_public(const Fr& value);
  Var alloc_witness(const Fr& value);
  Var alloc_witness() { return alloc_witness(Fr::zero()); }

  void enforce(const LC& a, const LC& b, const LC& c);
  void enforce_equal(const LC& a, const LC& b) { enforce(a - b, LC(kOne), LC()); }
  void enforce_boolean(Var v);

  const Fr& value(Var v) const { return values_[v]; }
  Fr eval(const LC& lc) const;

  class Scope {
   public:
    Scope(Builder& b, std::string_view name);
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    Builder& b_;
    size_t prev_len_;
  };

  ConstraintSystem& system() { return cs_; }
  ConstraintSystem take_system() { return std::move(cs_); }
  std::vector<Fr> take_assignment() { return std::move(values_); }

 private:
  uint32_t intern_coeff(const Fr& c);
  uint32_t current_label();
  void push_row(const LC& lc);

  bool computing_;
  ConstraintSystem cs_;
  std::vector<Fr> values_;
  std::string scope_;
  std::optional<uint32_t> label_id_;
  std::unordered_map<std::string, uint32_t> label_index_;
  std::unordered_map<std::string, uint32_t> coeff_index_;
};

}  // namespace blsces::zk

#endif  // BLSCES_ZK_R1CS_H_
