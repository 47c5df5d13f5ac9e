// Copyright 2026 The ntilde Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NTILDE_TERM_H_
#define NTILDE_TERM_H_

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "ntilde/natural.h"

namespace ntilde {

inline constexpr std::uint64_t kDefaultGuardBits = 1'000'000;
inline constexpr std::uint64_t kMinGuardBits = 64;

// A variable name. User names match [A-Za-z_][A-Za-z0-9_]* (and are not the
// reserved symbol "E"); generated names are "$" followed by a decimal counter,
// so the two never collide.
class Var {
 public:
  Var() = default;
  explicit Var(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  bool is_fresh() const { return !name_.empty() && name_[0] == '$'; }
  // Counter of a generated name; nullopt for user names.
  std::optional<std::uint64_t> fresh_index() const;

  // User names sort lexicographically, generated names after them by counter.
  friend std::strong_ordering operator<=>(const Var& a, const Var& b);
  friend bool operator==(const Var& a, const Var& b) {
    return a.name_ == b.name_;
  }

 private:
  std::string name_;
};

bool IsUserIdentifier(std::string_view name);
bool IsFreshIdentifier(std::string_view name);

// Witness values: a finite map from variables to naturals.
using Assignment = std::map<Var, Natural>;

// Generates "$0", "$1", ... for one compilation run.
class FreshVars {
 public:
  FreshVars() = default;
  explicit FreshVars(std::uint64_t next) : next_(next) {}

  // A generator whose names cannot collide with any generated name in `used`.
  static FreshVars Avoiding(const std::set<Var>& used);

  Var Next() { return Var("$" + std::to_string(next_++)); }
  std::uint64_t peek() const { return next_; }

 private:
  std::uint64_t next_ = 0;
};

// Polynomial term over (N; +, *): constants, variables, sums, products.
class NTerm {
 public:
  enum class Kind { kConst, kVar, kAdd, kMul };

  static NTerm Constant(Natural value);
  static NTerm Variable(Var var);
  static NTerm Sum(NTerm lhs, NTerm rhs);
  static NTerm Product(NTerm lhs, NTerm rhs);

  Kind kind() const;
  // Valid for kConst.
  const Natural& constant() const;
  // Valid for kVar.
  const Var& var() const;
  // Valid for kAdd and kMul.
  const NTerm& lhs() const;
  const NTerm& rhs() const;

  bool is_const() const { return kind() == Kind::kConst; }

  friend bool operator==(const NTerm& a, const NTerm& b);

 private:
  struct Node;
  explicit NTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

NTerm operator+(NTerm lhs, NTerm rhs);
NTerm operator*(NTerm lhs, NTerm rhs);

// Term over the power-circuit signature (N>0; +, x*2^y, 1). The only
// constant is One; Exp2(b, e) denotes b * 2^e.
class TTerm {
 public:
  enum class Kind { kOne, kVar, kAdd, kExp2 };

  static TTerm One();
  static TTerm Variable(Var var);
  static TTerm Sum(TTerm lhs, TTerm rhs);
  static TTerm Exp2(TTerm base, TTerm exponent);

  Kind kind() const;
  const Var& var() const;
  // For kAdd the summands, for kExp2 the base and the exponent.
  const TTerm& lhs() const;
  const TTerm& rhs() const;

  friend bool operator==(const TTerm& a, const TTerm& b);

 private:
  struct Node;
  explicit TTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

TTerm operator+(TTerm lhs, TTerm rhs);

// Exact evaluation. Throws MissingVariable when `assignment` does not cover
// the term and SizeGuardExceeded when any intermediate value needs more than
// `guard_bits` bits.
Natural Evaluate(const NTerm& term, const Assignment& assignment,
                 std::uint64_t guard_bits = kDefaultGuardBits);
Natural Evaluate(const TTerm& term, const Assignment& assignment,
                 std::uint64_t guard_bits = kDefaultGuardBits);

void CollectVars(const NTerm& term, std::set<Var>* out);
void CollectVars(const TTerm& term, std::set<Var>* out);

// Algebraic constant folding: Const (+|*) Const is evaluated, t + 0 and
// 0 + t become t, t * 0 and 0 * t become 0, t * 1 and 1 * t become t. No
// range reasoning is performed.
NTerm FoldConstants(const NTerm& term);

// Replaces variables found in `values` by constants (no folding).
NTerm Substitute(const NTerm& term, const Assignment& values);

}  // namespace ntilde

#endif  // NTILDE_TERM_H_
