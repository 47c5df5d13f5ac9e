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

#ifndef NTILDE_CASESPLIT_H_
#define NTILDE_CASESPLIT_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ntilde/system.h"
#include "ntilde/term.h"

namespace ntilde {

enum class CaseStatus { kOpen, kTriviallyTrue, kTriviallyFalse };

const char* CaseStatusName(CaseStatus status);

// One member of the family obtained by fixing some variables to values in
// {0..k}; the remaining variables range over N>k.
struct SplitCase {
  Assignment substitution;
  // Over N>k. Empty for both trivial statuses.
  NSystem residual;
  CaseStatus status = CaseStatus::kOpen;
};

// All (k+2)^n cases for the n variables of `system` (which must be over N).
// Each variable is either fixed to 0..k or left open, with the variables in
// Var order acting as odometer digits (first variable most significant,
// digits ordered 0, 1, ..., k, open). Residuals are constant-folded and
// ground atoms are resolved; no range reasoning is done.
std::vector<SplitCase> CaseSplit(const NSystem& system, std::uint64_t k);

// Compares [system has a solution in {0..bound}] with [some case is
// trivially true or its residual has a solution in {k+1..bound}], both by
// exhaustive enumeration. True iff the two agree. Requires bound >= k + 1.
bool SplitEquivalenceCheck(const NSystem& system, std::uint64_t k,
                           std::uint64_t bound);

// Rewrites a system over N>k (k >= 1) into an equisolvable system over N>1
// by adding x = t_x + (k - 1) with fresh t_x for every variable. For k = 1
// the system is returned unchanged. The x -> t_x pairs go to `offsets`.
NSystem RestrictToAboveOne(const NSystem& system, FreshVars* fresh,
                           std::map<Var, Var>* offsets = nullptr);

// "x=0, y=1" style rendering; "-" for the empty substitution.
std::string DescribeSubstitution(const Assignment& substitution);

}  // namespace ntilde

#endif  // NTILDE_CASESPLIT_H_
