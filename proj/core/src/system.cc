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

#include "ntilde/system.h"

namespace ntilde {

std::uint64_t Domain::lowest() const {
  switch (kind_) {
    case Kind::kAllNaturals:
      return 0;
    case Kind::kGreaterThan:
      return k_ + 1;
    case Kind::kTilde:
      return 1;
  }
  return 0;
}

std::string Domain::ToString() const {
  switch (kind_) {
    case Kind::kAllNaturals:
      return "N";
    case Kind::kGreaterThan:
      return "N>" + std::to_string(k_);
    case Kind::kTilde:
      return "tilde";
  }
  return "";
}

Domain DomainOf(const System& system) {
  if (const auto* n = std::get_if<NSystem>(&system)) return n->domain;
  return Domain::Tilde();
}

std::size_t AtomCount(const System& system) {
  if (const auto* n = std::get_if<NSystem>(&system)) {
    return n->equations.size();
  }
  return std::get<TSystem>(system).atoms.size();
}

std::set<Var> VarsOf(const NEquation& equation) {
  std::set<Var> vars;
  CollectVars(equation.lhs, &vars);
  CollectVars(equation.rhs, &vars);
  return vars;
}

std::set<Var> VarsOf(const TAtom& atom) {
  std::set<Var> vars;
  CollectVars(atom.lhs, &vars);
  CollectVars(atom.rhs, &vars);
  return vars;
}

std::set<Var> VarsOf(const NSystem& system) {
  std::set<Var> vars;
  for (const NEquation& eq : system.equations) {
    CollectVars(eq.lhs, &vars);
    CollectVars(eq.rhs, &vars);
  }
  return vars;
}

std::set<Var> VarsOf(const TSystem& system) {
  std::set<Var> vars;
  for (const TAtom& atom : system.atoms) {
    CollectVars(atom.lhs, &vars);
    CollectVars(atom.rhs, &vars);
  }
  return vars;
}

std::set<Var> VarsOf(const System& system) {
  return std::visit([](const auto& s) { return VarsOf(s); }, system);
}

bool CheckAtom(const NEquation& equation, const Assignment& assignment,
               std::uint64_t guard_bits) {
  return Evaluate(equation.lhs, assignment, guard_bits) ==
         Evaluate(equation.rhs, assignment, guard_bits);
}

bool CheckAtom(const TAtom& atom, const Assignment& assignment,
               std::uint64_t guard_bits) {
  const Natural lhs = Evaluate(atom.lhs, assignment, guard_bits);
  const Natural rhs = Evaluate(atom.rhs, assignment, guard_bits);
  return atom.relation == Relation::kEq ? lhs == rhs : lhs <= rhs;
}

}  // namespace ntilde
