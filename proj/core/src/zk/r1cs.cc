#include "blsces/zk/r1cs.h"

#include <algorithm>

#include "blsces/error.h"

namespace blsces::zk {

LC LC::constant(const Fr& c) {
  LC out;
  if (!c.is_zero()) out.terms_.emplace_back(kOne, c);
  return out;
}

LC& LC::add(Var v, const Fr& c) {
  if (!c.is_zero()) terms_.emplace_back(v, c);
  return *this;
}

LC& LC::operator+=(const LC& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

LC& LC::operator-=(const LC& o) {
  for (const auto& [v, c] : o.terms_) terms_.emplace_back(v, -c);
  return *this;
}

LC LC::operator+(const LC& o) const {
  LC out = *this;
  out += o;
  return out;
}

LC LC::operator-(const LC& o) const {
  LC out = *this;
  out -= o;
  return out;
}

LC LC::operator*(const Fr& s) const {
  LC out;
  if (s.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [v, c] : terms_) out.terms_.emplace_back(v, c * s);
  return out;
}

std::span<const ConstraintSystem::Term> ConstraintSystem::row(size_t constraint,
                                                              int which) const {
  size_t k = 3 * constraint + static_cast<size_t>(which);
  return {terms_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
}

Fr ConstraintSystem::evaluate(std::span<const Term> row,
                              std::span<const Fr> assignment) const {
  Fr acc = Fr::zero();
  for (const Term& t : row) {
    if (t.coeff == 0) {
      acc += assignment[t.var];
    } else {
      acc += coeffs_[t.coeff] * assignment[t.var];
    }
  }
  return acc;
}

bool ConstraintSystem::is_satisfied(size_t constraint, std::span<const Fr> assignment) const {
  Fr a = evaluate(row(constraint, 0), assignment);
  Fr c = evaluate(row(constraint, 2), assignment);
  auto b_row = row(constraint, 1);
  // Linear constraints carry B = 1; skip the multiplication.
  if (b_row.size() == 1 && b_row[0].var == kOne && b_row[0].coeff == 0) return a == c;
  return a * evaluate(b_row, assignment) == c;
}

std::optional<size_t> ConstraintSystem::first_unsatisfied(
    std::span<const Fr> assignment) const {
  if (assignment.size() != num_vars_ || !assignment[0].is_one()) {
    throw Error(ErrorCode::kInvalidArgument, "assignment does not match the constraint system");
  }
  for (size_t i = 0; i < num_constraints(); ++i) {
    if (!is_satisfied(i, assignment)) return i;
  }
  return std::nullopt;
}

std::vector<std::vector<uint32_t>> ConstraintSystem::occurrences() const {
  std::vector<std::vector<uint32_t>> out(num_vars_);
  for (size_t i = 0; i < num_constraints(); ++i) {
    for (size_t k = offsets_[3 * i]; k < offsets_[3 * i + 3]; ++k) {
      auto& list = out[terms_[k].var];
      if (list.empty() || list.back() != i) list.push_back(static_cast<uint32_t>(i));
    }
  }
  return out;
}

namespace {

void append_row(std::string& out, std::span<const ConstraintSystem::Term> row,
                const ConstraintSystem& cs) {
  static const U256 kHalf = [] {
    U256 h = Fr::kModulus;
    for (int i = 0; i < 4; ++i) {
      h.limb[i] = (h.limb[i] >> 1) | (i < 3 ? h.limb[i + 1] << 63 : 0);
    }
    return h;
  }();
  out += '(';
  if (row.empty()) out += '0';
  bool first = true;
  for (const auto& t : row) {
    Fr c = cs.coeff(t.coeff);
    bool neg = c.to_u256() > kHalf;
    if (neg) c = -c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mag = c.is_one() ? "" : c.to_u256().to_decimal();
    if (t.var == kOne) {
      out += mag.empty() ? "1" : mag;
    } else {
      if (!mag.empty()) out += mag + "*";
      out += (t.var <= cs.num_public() ? "p" : "w") + std::to_string(t.var);
    }
  }
  out += ')';
}

}  // namespace

std::string ConstraintSystem::dump() const {
  std::string out;
  for (size_t i = 0; i < num_constraints(); ++i) {
    out += std::to_string(i) + " [" + label(i) + "] ";
    append_row(out, row(i, 0), *this);
    out += " * ";
    append_row(out, row(i, 1), *this);
    out += " = ";
    append_row(out, row(i, 2), *this);
    out += '\n';
  }
  return out;
}

Builder::Builder(bool compute_values) : computing_(compute_values) {
  cs_.coeffs_.push_back(Fr::one());
  values_.push_back(Fr::one());
}

Var Builder::alloc_public(const Fr& value) {
  if (cs_.num_vars_ != cs_.num_public_ + 1) {
    throw Error(ErrorCode::kInvalidArgument, "public inputs must precede witness variables");
  }
  ++cs_.num_public_;
  values_.push_back(computing_ ? value : Fr::zero());
  return static_cast<Var>(cs_.num_vars_++);
}

Var Builder::alloc_witness(const Fr& value) {
  values_.push_back(computing_ ? value : Fr::zero());
  return static_cast<Var>(cs_.num_vars_++);
}

Fr Builder::eval(const LC& lc) const {
  Fr acc = Fr::zero();
  for (const auto& [v, c] : lc.terms()) acc += c * values_[v];
  return acc;
}

void Builder::enforce_boolean(Var v) { enforce(LC(v), LC(v) - LC(kOne), LC()); }

uint32_t Builder::intern_coeff(const Fr& c) {
  if (c.is_one()) return 0;
  auto bytes = c.to_bytes_be();
  std::string key(bytes.begin(), bytes.end());
  auto [it, inserted] = coeff_index_.emplace(std::move(key), 0);
  if (inserted) {
    it->second = static_cast<uint32_t>(cs_.coeffs_.size());
    cs_.coeffs_.push_back(c);
  }
  return it->second;
}

void Builder::push_row(const LC& lc) {
  std::vector<std::pair<Var, Fr>> t = lc.terms();
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i < t.size();) {
    Var v = t[i].first;
    Fr c = t[i].second;
    size_t j = i + 1;
    for (; j < t.size() && t[j].first == v; ++j) c += t[j].second;
    if (!c.is_zero()) cs_.terms_.push_back({v, intern_coeff(c)});
    i = j;
  }
  cs_.offsets_.push_back(static_cast<uint32_t>(cs_.terms_.size()));
}

uint32_t Builder::current_label() {
  if (!label_id_) {
    auto [it, inserted] = label_index_.emplace(scope_, 0);
    if (inserted) {
      it->second = static_cast<uint32_t>(cs_.label_names_.size());
      cs_.label_names_.push_back(scope_);
    }
    label_id_ = it->second;
  }
  return *label_id_;
}

void Builder::enforce(const LC& a, const LC& b, const LC& c) {
  push_row(a);
  push_row(b);
  push_row(c);
  cs_.labels_.push_back(current_label());
}

Builder::Scope::Scope(Builder& b, std::string_view name) : b_(b), prev_len_(b.scope_.size()) {
  if (!b_.scope_.empty()) b_.scope_ += '/';
  b_.scope_ += name;
  b_.label_id_.reset();
}

Builder::Scope::~Scope() {
  b_.scope_.resize(prev_len_);
  b_.label_id_.reset();
}

}  // namespace blsces::zk
