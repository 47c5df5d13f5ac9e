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

#ifndef NTILDE_SOLVER_H_
#define NTILDE_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ntilde/encoders.h"
#include "ntilde/natural.h"
#include "ntilde/skolemizer.h"
#include "ntilde/system.h"
#include "ntilde/term.h"

namespace ntilde {

inline constexpr std::uint64_t kDefaultBound = 10;
inline constexpr std::size_t kDefaultVariableCap = 6;

enum class SolveOutcome { kSat, kExhaustedUnsat, kGuardTripped };

const char* SolveOutcomeName(SolveOutcome outcome);

struct SolveOptions {
  std::size_t max_vars = kDefaultVariableCap;
  std::uint64_t guard_bits = kDefaultGuardBits;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  // Variables pinned to these values instead of being enumerated.
  Assignment fixed;
};

struct SolveReport {
  SolveOutcome outcome = SolveOutcome::kExhaustedUnsat;
  // The satisfying assignment for kSat, the offending one for kGuardTripped.
  Assignment witness;
  // Candidates up to and including the reported one (all of them when
  // exhausted). Independent of scheduling.
  std::uint64_t tried = 0;
  double elapsed_seconds = 0;
  std::uint64_t bound = 0;
  std::uint64_t lowest = 0;
};

// Enumerates every assignment with values in {lowest..bound} in
// lexicographic order (variables in Var order, first one most significant)
// and reports the first satisfying one. Enumeration runs on several threads;
// the result is the same as a sequential scan. Throws VariableCapExceeded
// when the system has more than options.max_vars variables.
SolveReport SolveBounded(const NSystem& system, std::uint64_t bound,
                         const SolveOptions& options = {});
SolveReport SolveBounded(const TSystem& system, std::uint64_t bound,
                         const SolveOptions& options = {});
SolveReport SolveBounded(const System& system, std::uint64_t bound,
                         const SolveOptions& options = {});

// Bounded search for Skolem systems: only the free variables (those no
// equation defines bottom-up from the others) range over {2..bound}; every
// other variable is computed from them and may exceed the bound. The cap
// applies to the free variables.
SolveReport SolveSkolemBounded(const SkolemSystem& system, std::uint64_t bound,
                               const SolveOptions& options = {});

// "outcome: ...", "bound: ...", "tried: ..." followed by witness lines.
std::string PrintSolveReport(const SolveReport& report);
// Inverse of PrintSolveReport (elapsed time and lowest are not recorded).
SolveReport ParseSolveReport(std::string_view text);

struct VerifyReport {
  std::vector<bool> atom_holds;

  bool ok() const;
  std::optional<std::size_t> first_failure() const;
};

// Checks every atom with exact arithmetic. Throws MissingVariable when a
// system variable has no value and DomainViolation when a value lies outside
// the system's carrier.
VerifyReport Verify(const System& system, const Assignment& assignment,
                    std::uint64_t guard_bits = kDefaultGuardBits);
VerifyReport Verify(const NSystem& system, const Assignment& assignment,
                    std::uint64_t guard_bits = kDefaultGuardBits);
VerifyReport Verify(const TSystem& system, const Assignment& assignment,
                    std::uint64_t guard_bits = kDefaultGuardBits);

struct Decision {
  bool sat = false;
  // Interface and aux values when sat.
  Assignment witness;
  // Why the relation is unsatisfiable.
  std::string reason;
};

// Decides an encoder-produced relation at the given interface values by
// running its witness plan; no search. Complete because aux values are
// unique. Throws NotEncoderShaped when some aux has no plan step and
// DomainViolation for a zero interface value.
Decision DecideCompiled(const EncodedRelation& relation,
                        const std::vector<Natural>& interface_values,
                        std::uint64_t guard_bits = kDefaultGuardBits);

// (2^n - 1) mod (2^m - 1) == 0, via modular exponentiation. m, n >= 1.
bool DividesMersenne(const Natural& m, const Natural& n);

}  // namespace ntilde

#endif  // NTILDE_SOLVER_H_
