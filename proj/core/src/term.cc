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

#include "ntilde/term.h"

#include <cctype>
#include <utility>

#include "ntilde/errors.h"

namespace ntilde {

std::optional<std::uint64_t> Var::fresh_index() const {
  if (!is_fresh()) return std::nullopt;
  const auto value = ParseDecimal(std::string_view(name_).substr(1));
  if (!value) return std::nullopt;
  return ToUint64(*value);
}

std::strong_ordering operator<=>(const Var& a, const Var& b) {
  const bool a_fresh = a.is_fresh();
  const bool b_fresh = b.is_fresh();
  if (a_fresh != b_fresh) return a_fresh ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
  if (a_fresh) {
    const auto ia = a.fresh_index();
    const auto ib = b.fresh_index();
    if (ia && ib && *ia != *ib) return *ia <=> *ib;
  }
  return a.name_ <=> b.name_;
}

bool IsUserIdentifier(std::string_view name) {
  if (name.empty() || name == "E") return false;
  const auto is_start = [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  };
  if (!is_start(name[0])) return false;
  for (char c : name) {
    if (!is_start(c) && !std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

bool IsFreshIdentifier(std::string_view name) {
  if (name.size() < 2 || name[0] != '$') return false;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

FreshVars FreshVars::Avoiding(const std::set<Var>& used) {
  std::uint64_t next = 0;
  for (const Var& v : used) {
    if (auto index = v.fresh_index(); index && *index >= next) {
      next = *index + 1;
    }
  }
  return FreshVars(next);
}

// ---------------------------------------------------------------------------
// NTerm

struct NTerm::Node {
  Kind kind;
  Natural value;
  Var var;
  std::optional<NTerm> lhs;
  std::optional<NTerm> rhs;
};

NTerm NTerm::Constant(Natural value) {
  return NTerm(std::make_shared<const Node>(
      Node{Kind::kConst, std::move(value), Var(), std::nullopt, std::nullopt}));
}

NTerm NTerm::Variable(Var var) {
  return NTerm(std::make_shared<const Node>(
      Node{Kind::kVar, Natural(), std::move(var), std::nullopt, std::nullopt}));
}

NTerm NTerm::Sum(NTerm lhs, NTerm rhs) {
  return NTerm(std::make_shared<const Node>(
      Node{Kind::kAdd, Natural(), Var(), std::move(lhs), std::move(rhs)}));
}

NTerm NTerm::Product(NTerm lhs, NTerm rhs) {
  return NTerm(std::make_shared<const Node>(
      Node{Kind::kMul, Natural(), Var(), std::move(lhs), std::move(rhs)}));
}

NTerm::Kind NTerm::kind() const { return node_->kind; }
const Natural& NTerm::constant() const { return node_->value; }
const Var& NTerm::var() const { return node_->var; }
const NTerm& NTerm::lhs() const { return *node_->lhs; }
const NTerm& NTerm::rhs() const { return *node_->rhs; }

bool operator==(const NTerm& a, const NTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case NTerm::Kind::kConst:
      return a.constant() == b.constant();
    case NTerm::Kind::kVar:
      return a.var() == b.var();
    case NTerm::Kind::kAdd:
    case NTerm::Kind::kMul:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

NTerm operator+(NTerm lhs, NTerm rhs) {
  return NTerm::Sum(std::move(lhs), std::move(rhs));
}

NTerm operator*(NTerm lhs, NTerm rhs) {
  return NTerm::Product(std::move(lhs), std::move(rhs));
}

// ---------------------------------------------------------------------------
// TTerm

struct TTerm::Node {
  Kind kind;
  Var var;
  std::optional<TTerm> lhs;
  std::optional<TTerm> rhs;
};

TTerm TTerm::One() {
  static const TTerm one(std::make_shared<const Node>(
      Node{Kind::kOne, Var(), std::nullopt, std::nullopt}));
  return one;
}

TTerm TTerm::Variable(Var var) {
  return TTerm(std::make_shared<const Node>(
      Node{Kind::kVar, std::move(var), std::nullopt, std::nullopt}));
}

TTerm TTerm::Sum(TTerm lhs, TTerm rhs) {
  return TTerm(std::make_shared<const Node>(
      Node{Kind::kAdd, Var(), std::move(lhs), std::move(rhs)}));
}

TTerm TTerm::Exp2(TTerm base, TTerm exponent) {
  return TTerm(std::make_shared<const Node>(
      Node{Kind::kExp2, Var(), std::move(base), std::move(exponent)}));
}

TTerm::Kind TTerm::kind() const { return node_->kind; }
const Var& TTerm::var() const { return node_->var; }
const TTerm& TTerm::lhs() const { return *node_->lhs; }
const TTerm& TTerm::rhs() const { return *node_->rhs; }

bool operator==(const TTerm& a, const TTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TTerm::Kind::kOne:
      return true;
    case TTerm::Kind::kVar:
      return a.var() == b.var();
    case TTerm::Kind::kAdd:
    case TTerm::Kind::kExp2:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

TTerm operator+(TTerm lhs, TTerm rhs) {
  return TTerm::Sum(std::move(lhs), std::move(rhs));
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

const Natural& Lookup(const Assignment& assignment, const Var& var) {
  const auto it = assignment.find(var);
  if (it == assignment.end()) {
    throw MissingVariable("no value for variable " + var.name());
  }
  return it->second;
}

void CheckGuard(const Natural& value, std::uint64_t guard_bits) {
  if (BitLength(value) > guard_bits) throw SizeGuardExceeded(guard_bits);
}

Natural EvalN(const NTerm& term, const Assignment& a, std::uint64_t guard) {
  switch (term.kind()) {
    case NTerm::Kind::kConst:
      CheckGuard(term.constant(), guard);
      return term.constant();
    case NTerm::Kind::kVar: {
      const Natural& value = Lookup(a, term.var());
      CheckGuard(value, guard);
      return value;
    }
    case NTerm::Kind::kAdd: {
      Natural sum = EvalN(term.lhs(), a, guard) + EvalN(term.rhs(), a, guard);
      CheckGuard(sum, guard);
      return sum;
    }
    case NTerm::Kind::kMul: {
      const Natural lhs = EvalN(term.lhs(), a, guard);
      const Natural rhs = EvalN(term.rhs(), a, guard);
      if (sgn(lhs) == 0 || sgn(rhs) == 0) return Natural(0);
      if (BitLength(lhs) + BitLength(rhs) > guard + 1) {
        throw SizeGuardExceeded(guard);
      }
      Natural product = lhs * rhs;
      CheckGuard(product, guard);
      return product;
    }
  }
  return Natural(0);
}

Natural EvalT(const TTerm& term, const Assignment& a, std::uint64_t guard) {
  switch (term.kind()) {
    case TTerm::Kind::kOne:
      return Natural(1);
    case TTerm::Kind::kVar: {
      const Natural& value = Lookup(a, term.var());
      CheckGuard(value, guard);
      return value;
    }
    case TTerm::Kind::kAdd: {
      Natural sum = EvalT(term.lhs(), a, guard) + EvalT(term.rhs(), a, guard);
      CheckGuard(sum, guard);
      return sum;
    }
    case TTerm::Kind::kExp2: {
      Natural base = EvalT(term.lhs(), a, guard);
      const Natural exponent = EvalT(term.rhs(), a, guard);
      if (sgn(base) == 0) return base;
      const auto shift = ToUint64(exponent);
      if (!shift || BitLength(base) + *shift > guard) {
        throw SizeGuardExceeded(guard);
      }
      mpz_mul_2exp(base.get_mpz_t(), base.get_mpz_t(), *shift);
      return base;
    }
  }
  return Natural(0);
}

}  // namespace

Natural Evaluate(const NTerm& term, const Assignment& assignment,
                 std::uint64_t guard_bits) {
  return EvalN(term, assignment, guard_bits);
}

Natural Evaluate(const TTerm& term, const Assignment& assignment,
                 std::uint64_t guard_bits) {
  return EvalT(term, assignment, guard_bits);
}

void CollectVars(const NTerm& term, std::set<Var>* out) {
  switch (term.kind()) {
    case NTerm::Kind::kConst:
      return;
    case NTerm::Kind::kVar:
      out->insert(term.var());
      return;
    case NTerm::Kind::kAdd:
    case NTerm::Kind::kMul:
      CollectVars(term.lhs(), out);
      CollectVars(term.rhs(), out);
      return;
  }
}

void CollectVars(const TTerm& term, std::set<Var>* out) {
  switch (term.kind()) {
    case TTerm::Kind::kOne:
      return;
    case TTerm::Kind::kVar:
      out->insert(term.var());
      return;
    case TTerm::Kind::kAdd:
    case TTerm::Kind::kExp2:
      CollectVars(term.lhs(), out);
      CollectVars(term.rhs(), out);
      return;
  }
}

NTerm FoldConstants(const NTerm& term) {
  switch (term.kind()) {
    case NTerm::Kind::kConst:
    case NTerm::Kind::kVar:
      return term;
    case NTerm::Kind::kAdd: {
      NTerm lhs = FoldConstants(term.lhs());
      NTerm rhs = FoldConstants(term.rhs());
      if (lhs.is_const() && rhs.is_const()) {
        return NTerm::Constant(lhs.constant() + rhs.constant());
      }
      if (lhs.is_const() && sgn(lhs.constant()) == 0) return rhs;
      if (rhs.is_const() && sgn(rhs.constant()) == 0) return lhs;
      return NTerm::Sum(std::move(lhs), std::move(rhs));
    }
    case NTerm::Kind::kMul: {
      NTerm lhs = FoldConstants(term.lhs());
      NTerm rhs = FoldConstants(term.rhs());
      if (lhs.is_const() && rhs.is_const()) {
        return NTerm::Constant(lhs.constant() * rhs.constant());
      }
      for (const NTerm* side : {&lhs, &rhs}) {
        if (side->is_const() && sgn(side->constant()) == 0) {
          return NTerm::Constant(0);
        }
      }
      if (lhs.is_const() && lhs.constant() == 1) return rhs;
      if (rhs.is_const() && rhs.constant() == 1) return lhs;
      return NTerm::Product(std::move(lhs), std::move(rhs));
    }
  }
  return term;
}

NTerm Substitute(const NTerm& term, const Assignment& values) {
  switch (term.kind()) {
    case NTerm::Kind::kConst:
      return term;
    case NTerm::Kind::kVar: {
      const auto it = values.find(term.var());
      return it == values.end() ? term : NTerm::Constant(it->second);
    }
    case NTerm::Kind::kAdd:
      return NTerm::Sum(Substitute(term.lhs(), values),
                        Substitute(term.rhs(), values));
    case NTerm::Kind::kMul:
      return NTerm::Product(Substitute(term.lhs(), values),
                            Substitute(term.rhs(), values));
  }
  return term;
}

}  // namespace ntilde
