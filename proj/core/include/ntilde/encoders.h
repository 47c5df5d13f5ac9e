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

#ifndef NTILDE_ENCODERS_H_
#define NTILDE_ENCODERS_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ntilde/natural.h"
#include "ntilde/skolemizer.h"
#include "ntilde/system.h"
#include "ntilde/term.h"

namespace ntilde {

// Closed-form rules that determine an auxiliary value from values already
// known. Each rule fails (rather than guessing) when no value in N>0 exists.
enum class WitnessRule {
  kMersenneDiv,  // (d, n):  (2^n - 1) / (2^d - 1), exact division required
  kSub,          // (s, t):  t - s, must be positive
  kFloorLog,     // (s):     floor(log2 s), must be positive
  kBitcapSub,    // (s, y):  2^(y+1) - s, must be positive
  kSquare,       // (x):     x * x
};

const char* RuleName(WitnessRule rule);

struct PlanStep {
  Var target;
  WitnessRule rule;
  std::vector<TTerm> args;
};

// Auxiliary values in dependency order, plus the atoms a completed
// assignment has to satisfy.
struct WitnessPlan {
  std::vector<PlanStep> steps;
  std::vector<TAtom> atoms;
};

// A relation over N>0 given by the existential closure of `atoms` over `aux`.
// For every interface valuation at most one aux valuation satisfies the
// atoms, and `plan` computes it.
struct EncodedRelation {
  std::vector<TTerm> interface;
  std::vector<Var> aux;
  WitnessPlan plan;

  const std::vector<TAtom>& atoms() const { return plan.atoms; }
  TSystem AsSystem() const { return TSystem{plan.atoms}; }
};

// s < t:  s + z = t.
EncodedRelation EncodeLess(const TTerm& s, const TTerm& t, FreshVars* fresh);

// d | n:  E(1, n) + z = E(z, d) + 1, i.e. 2^n - 1 = z * (2^d - 1).
EncodedRelation EncodeDivides(const TTerm& d, const TTerm& n,
                              FreshVars* fresh);

// y = floor(log2 s):  E(1, y) <= s  and  s + z = E(1, y + 1).
// Unsatisfiable for s = 1 since y would be 0.
EncodedRelation EncodeFloorLog2(const TTerm& s, const Var& y,
                                FreshVars* fresh);

// y = x * x for x >= 2. Membership of y + x in the multiples of x(x+1),
// a cap floor(log2 y) <= 2 floor(log2 x) + 1 leaving only x^2, 2x^2 + x and
// 3x^2 + 2x, and the filter (x+2 | y+2x) and (x+3 | y+3x) keeping x^2.
EncodedRelation EncodeSquare(const TTerm& x, const Var& y, FreshVars* fresh);

// z = x * y for x, y >= 2:  z + z + x^2 + y^2 = (x + y)^2.
EncodedRelation EncodeMult(const TTerm& x, const TTerm& y, const TTerm& z,
                           FreshVars* fresh);

// Brute-force set {y : x | y + x, x + 1 | y + x, floor(log2 y) <=
// 2 floor(log2 x) + 1}, ascending. Independent of the encoders. xv >= 2.
std::vector<std::uint64_t> EnumerateSPrime(std::uint64_t xv);

struct CompiledSystem {
  TSystem system;
  WitnessPlan plan;
  // Variables of the Skolem system (the compiled system's interface).
  std::set<Var> interface;
};

// Skolem system over N>1 -> system over N>0 with the power-circuit
// signature. Products become multiplication gadgets, sums and increments are
// copied, and variables that occur in no product get the condition 1 < x.
CompiledSystem CompileSystem(const SkolemSystem& system, FreshVars* fresh);

// Runs the plan steps on top of `values`. Returns a description of the first
// failing step, or nullopt once every step succeeded.
std::optional<std::string> ApplyPlanSteps(
    const WitnessPlan& plan, Assignment* values,
    std::uint64_t guard_bits = kDefaultGuardBits);

// Index of the first atom of `plan` that does not hold, or nullopt.
std::optional<std::size_t> FirstFailingAtom(
    const WitnessPlan& plan, const Assignment& values,
    std::uint64_t guard_bits = kDefaultGuardBits);

// Completes a solution of a Skolem system to a solution of its compiled
// system. Throws WitnessLiftFailure naming the first failing step or atom
// when `originals` is not a solution.
Assignment LiftWitness(const WitnessPlan& plan, const Assignment& originals,
                       std::uint64_t guard_bits = kDefaultGuardBits);

// One line per step: "aux <- rule(args)".
std::string PrintPlan(const WitnessPlan& plan);

}  // namespace ntilde

#endif  // NTILDE_ENCODERS_H_
