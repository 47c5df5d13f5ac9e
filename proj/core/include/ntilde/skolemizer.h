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

#ifndef NTILDE_SKOLEMIZER_H_
#define NTILDE_SKOLEMIZER_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ntilde/natural.h"
#include "ntilde/system.h"
#include "ntilde/term.h"

namespace ntilde {

// result = lhs * rhs
struct MulEq {
  Var result, lhs, rhs;
  friend bool operator==(const MulEq&, const MulEq&) = default;
};

// result = lhs + rhs
struct AddEq {
  Var result, lhs, rhs;
  friend bool operator==(const AddEq&, const AddEq&) = default;
};

// result = operand + 1
struct IncEq {
  Var result, operand;
  friend bool operator==(const IncEq&, const IncEq&) = default;
};

using SkolemEq = std::variant<MulEq, AddEq, IncEq>;

// A system over N>1 whose equations only have the three shapes above. No
// constants occur anywhere.
struct SkolemSystem {
  std::vector<SkolemEq> equations;
  // Skolem variables standing for variables of the input system.
  std::set<Var> originals;

  Domain domain() const { return Domain::GreaterThan(1); }
  friend bool operator==(const SkolemSystem&, const SkolemSystem&) = default;
};

struct SkolemResult {
  SkolemSystem system;
  // Input variable -> Skolem variable. Input variables equated by a bare
  // "x = y" atom share one Skolem variable.
  std::map<Var, Var> back_map;
  // Values forced by constant gadgets, keyed by Skolem variable.
  std::map<Var, Natural> forced_values;
  // Set when an atom was unsatisfiable at fold time over N>1 and the
  // canonical gadget {a = a + 1} was emitted in its place.
  bool emitted_unsat_gadget = false;
};

// Flattens every atom p = q bottom-up, left to right. Each Add/Mul node gets
// a fresh variable, constants >= 2 become constant gadgets, "+ 1" becomes an
// IncEq, and the two root variables of an atom are unified. Requires a system
// over N>1.
SkolemResult Skolemize(const NSystem& system, FreshVars* fresh);

// A variable forced to the value `c` (c >= 2) by O(log c) equations: the
// 2-gadget {v = u * u, v = u + u}, then one doubling AddEq per remaining
// binary digit, each followed by an IncEq when the digit is 1.
std::pair<Var, std::vector<SkolemEq>> BuildConstant(const Natural& c,
                                                    FreshVars* fresh);

// Recognises a system over N>1 that is already in Skolem form. The
// originals are its user-named variables.
std::optional<SkolemSystem> AsSkolemSystem(const NSystem& system);

NSystem ToNSystem(const SkolemSystem& system);
std::set<Var> VarsOf(const SkolemSystem& system);

bool CheckSkolemEq(const SkolemEq& equation, const Assignment& assignment);
std::string PrintSkolemEq(const SkolemEq& equation);

// Extends values of the input variables to every Skolem variable by
// bottom-up evaluation. Returns nullopt when the input values disagree on a
// unified variable or some variable is not determined (the unsat gadget).
// The result is not checked against the equations.
std::optional<Assignment> ExtendWitness(const SkolemResult& result,
                                        const Assignment& input_values);

// Fills in every variable that is the result of an equation whose operands
// are known, repeatedly. Returns nullopt when some variable stays unknown.
std::optional<Assignment> CompleteBottomUp(const SkolemSystem& system,
                                           Assignment values);

}  // namespace ntilde

#endif  // NTILDE_SKOLEMIZER_H_
