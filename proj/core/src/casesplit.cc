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

#include "ntilde/casesplit.h"

#include <algorithm>
#include <utility>

#include "ntilde/errors.h"
#include "ntilde/solver.h"

namespace ntilde {

const char* CaseStatusName(CaseStatus status) {
  switch (status) {
    case CaseStatus::kOpen:
      return "open";
    case CaseStatus::kTriviallyTrue:
      return "trivially-true";
    case CaseStatus::kTriviallyFalse:
      return "trivially-false";
  }
  return "?";
}

std::vector<SplitCase> CaseSplit(const NSystem& system, std::uint64_t k) {
  if (system.domain != Domain::AllNaturals()) {
    throw Error("case split expects a system over N, got " +
                system.domain.ToString());
  }
  const std::set<Var> var_set = VarsOf(system);
  const std::vector<Var> vars(var_set.begin(), var_set.end());
  const std::uint64_t open = k + 1;  // digit value meaning "not substituted"

  std::vector<SplitCase> cases;
  std::vector<std::uint64_t> digits(vars.size(), 0);
  while (true) {
    SplitCase c;
    c.residual.domain = Domain::GreaterThan(k);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (digits[i] != open) {
        c.substitution[vars[i]] = Natural(static_cast<unsigned long>(digits[i]));
      }
    }
    bool all_true = true;
    for (const NEquation& eq : system.equations) {
      NEquation folded{FoldConstants(Substitute(eq.lhs, c.substitution)),
                       FoldConstants(Substitute(eq.rhs, c.substitution))};
      if (folded.lhs.is_const() && folded.rhs.is_const()) {
        if (folded.lhs.constant() != folded.rhs.constant()) {
          c.status = CaseStatus::kTriviallyFalse;
          break;
        }
        continue;
      }
      all_true = false;
      c.residual.equations.push_back(std::move(folded));
    }
    if (c.status == CaseStatus::kTriviallyFalse) {
      c.residual.equations.clear();
    } else if (all_true) {
      c.status = CaseStatus::kTriviallyTrue;
    }
    cases.push_back(std::move(c));

    // Advance the odometer; the last variable is the fastest digit.
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (digits[i] < open) {
        ++digits[i];
        break;
      }
      digits[i] = 0;
      if (i == 0) return cases;
    }
    if (vars.empty()) return cases;
  }
}

bool SplitEquivalenceCheck(const NSystem& system, std::uint64_t k,
                           std::uint64_t bound) {
  if (bound < k + 1) throw Error("bound must be at least k + 1");
  SolveOptions options;
  options.max_vars = std::max<std::size_t>(options.max_vars, 8);
  const bool original_solvable =
      SolveBounded(system, bound, options).outcome == SolveOutcome::kSat;
  bool some_case_solvable = false;
  for (const SplitCase& c : CaseSplit(system, k)) {
    if (c.status == CaseStatus::kTriviallyTrue) {
      some_case_solvable = true;
    } else if (c.status == CaseStatus::kOpen) {
      some_case_solvable =
          SolveBounded(c.residual, bound, options).outcome ==
          SolveOutcome::kSat;
    }
    if (some_case_solvable) break;
  }
  return original_solvable == some_case_solvable;
}

NSystem RestrictToAboveOne(const NSystem& system, FreshVars* fresh,
                           std::map<Var, Var>* offsets) {
  if (system.domain.kind() != Domain::Kind::kGreaterThan ||
      system.domain.k() < 1) {
    throw Error("expected a system over N>k with k >= 1");
  }
  NSystem out = system;
  out.domain = Domain::GreaterThan(1);
  const std::uint64_t shift = system.domain.k() - 1;
  if (shift == 0) return out;
  for (const Var& v : VarsOf(system)) {
    const Var offset = fresh->Next();
    if (offsets != nullptr) (*offsets)[v] = offset;
    out.equations.push_back(
        {NTerm::Variable(v),
         NTerm::Variable(offset) +
             NTerm::Constant(Natural(static_cast<unsigned long>(shift)))});
  }
  return out;
}

std::string DescribeSubstitution(const Assignment& substitution) {
  if (substitution.empty()) return "-";
  std::string out;
  for (const auto& [var, value] : substitution) {
    if (!out.empty()) out += ", ";
    out += var.name() + "=" + ToDecimal(value);
  }
  return out;
}

}  // namespace ntilde
