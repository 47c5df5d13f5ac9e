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

#include "ntilde/solver.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <set>
#include <thread>
#include <utility>

#include "ntilde/errors.h"
#include "ntilde/textio.h"

namespace ntilde {
namespace {

constexpr std::uint64_t kChunkSize = 2048;

enum class Event { kNone, kSat, kGuard };

template <typename SystemT>
Event EvaluateCandidate(const SystemT& system, const Assignment& values,
                        std::uint64_t guard) {
  try {
    if constexpr (std::is_same_v<SystemT, NSystem>) {
      for (const NEquation& eq : system.equations) {
        if (!CheckAtom(eq, values, guard)) return Event::kNone;
      }
    } else {
      for (const TAtom& atom : system.atoms) {
        if (!CheckAtom(atom, values, guard)) return Event::kNone;
      }
    }
  } catch (const SizeGuardExceeded&) {
    return Event::kGuard;
  }
  return Event::kSat;
}

// Writes the candidate with lexicographic rank `index` into `slots`.
void Decode(std::uint64_t index, std::uint64_t lowest, std::uint64_t radix,
            const std::vector<Natural*>& slots) {
  for (std::size_t i = slots.size(); i > 0; --i) {
    *slots[i - 1] = static_cast<unsigned long>(lowest + index % radix);
    index /= radix;
  }
}

std::uint64_t GridSize(std::size_t vars, std::uint64_t radix) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    if (total > (std::uint64_t{1} << 62) / radix) {
      throw VariableCapExceeded("search space does not fit in 62 bits");
    }
    total *= radix;
  }
  return total;
}

// Smallest index in [0, total) whose probe reports an event, or total.
// make_probe() is called once per worker and returns a callable
// Event(std::uint64_t index) owning that worker's scratch state.
template <typename MakeProbe>
std::uint64_t FirstEvent(std::uint64_t total, unsigned requested_threads,
                         MakeProbe make_probe) {
  std::atomic<std::uint64_t> best{total};
  std::atomic<std::uint64_t> next_chunk{0};
  const auto worker = [&] {
    auto probe = make_probe();
    while (true) {
      const std::uint64_t first = next_chunk.fetch_add(1) * kChunkSize;
      if (first >= std::min(total, best.load())) return;
      const std::uint64_t last = std::min(first + kChunkSize, total);
      for (std::uint64_t index = first; index < last; ++index) {
        if (index >= best.load(std::memory_order_relaxed)) return;
        if (probe(index) == Event::kNone) continue;
        std::uint64_t current = best.load();
        while (index < current &&
               !best.compare_exchange_weak(current, index)) {
        }
        return;
      }
    }
  };
  unsigned threads = requested_threads != 0
                         ? requested_threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, (total + kChunkSize - 1) / kChunkSize));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return best.load();
}

void CheckBound(std::uint64_t bound, std::uint64_t lowest) {
  if (bound < lowest) {
    throw Error("bound " + std::to_string(bound) +
                " is below the smallest domain value " +
                std::to_string(lowest));
  }
}

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

template <typename SystemT>
SolveReport Solve(const SystemT& system, Domain domain, std::uint64_t bound,
                  const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Var> free;
  for (const Var& v : VarsOf(system)) {
    if (!options.fixed.contains(v)) free.push_back(v);
  }
  if (free.size() > options.max_vars) {
    throw VariableCapExceeded("system has " + std::to_string(free.size()) +
                              " variables; the cap is " +
                              std::to_string(options.max_vars));
  }
  SolveReport report;
  report.bound = bound;
  report.lowest = domain.lowest();
  CheckBound(bound, report.lowest);
  const std::uint64_t radix = bound - report.lowest + 1;
  const std::uint64_t total = GridSize(free.size(), radix);

  // Each probe owns an assignment whose free slots are rewritten in place.
  const auto prepare = [&](Assignment* values) {
    *values = options.fixed;
    std::vector<Natural*> slots;
    for (const Var& v : free) slots.push_back(&(*values)[v]);
    return slots;
  };
  const std::uint64_t found =
      FirstEvent(total, options.threads, [&] {
        auto values = std::make_shared<Assignment>();
        auto slots = prepare(values.get());
        return [&, values, slots](std::uint64_t index) {
          Decode(index, report.lowest, radix, slots);
          return EvaluateCandidate(system, *values, options.guard_bits);
        };
      });

  if (found == total) {
    report.outcome = SolveOutcome::kExhaustedUnsat;
    report.tried = total;
  } else {
    Decode(found, report.lowest, radix, prepare(&report.witness));
    report.outcome =
        EvaluateCandidate(system, report.witness, options.guard_bits) ==
                Event::kSat
            ? SolveOutcome::kSat
            : SolveOutcome::kGuardTripped;
    report.tried = found + 1;
  }
  report.elapsed_seconds = SecondsSince(start);
  return report;
}

// Free variables of a Skolem system and the equations that define every
// other variable from them, in evaluation order.
struct Derivation {
  std::vector<Var> free;
  std::vector<const SkolemEq*> steps;
};

Derivation Derive(const SkolemSystem& system) {
  const std::set<Var> vars = VarsOf(system);
  std::set<Var> results;
  for (const SkolemEq& eq : system.equations) {
    std::visit([&](const auto& e) { results.insert(e.result); }, eq);
  }
  Derivation out;
  std::set<Var> known;
  for (const Var& v : vars) {
    if (!results.contains(v)) {
      out.free.push_back(v);
      known.insert(v);
    }
  }
  while (true) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (const SkolemEq& eq : system.equations) {
        const bool ready = std::visit(
            [&](const auto& e) {
              using T = std::decay_t<decltype(e)>;
              if (known.contains(e.result)) return false;
              if constexpr (std::is_same_v<T, IncEq>) {
                return known.contains(e.operand);
              } else {
                return known.contains(e.lhs) && known.contains(e.rhs);
              }
            },
            eq);
        if (!ready) continue;
        std::visit([&](const auto& e) { known.insert(e.result); }, eq);
        out.steps.push_back(&eq);
        progress = true;
      }
    }
    // Cycles (e.g. a = a + 1) leave variables undetermined; enumerate the
    // smallest of them as well.
    const auto undetermined = std::find_if(
        vars.begin(), vars.end(), [&](const Var& v) { return !known.contains(v); });
    if (undetermined == vars.end()) break;
    out.free.push_back(*undetermined);
    known.insert(*undetermined);
  }
  return out;
}

void CheckCoverage(const std::set<Var>& vars, Domain domain,
                   const Assignment& assignment) {
  for (const Var& v : vars) {
    const auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw MissingVariable("no value for variable " + v.name());
    }
    if (!domain.Contains(it->second)) {
      throw DomainViolation("value " + ToDecimal(it->second) + " of " +
                            v.name() + " is outside " + domain.ToString());
    }
  }
}

}  // namespace

const char* SolveOutcomeName(SolveOutcome outcome) {
  switch (outcome) {
    case SolveOutcome::kSat:
      return "sat";
    case SolveOutcome::kExhaustedUnsat:
      return "exhausted-unsat";
    case SolveOutcome::kGuardTripped:
      return "guard-tripped";
  }
  return "?";
}

SolveReport SolveBounded(const NSystem& system, std::uint64_t bound,
                         const SolveOptions& options) {
  return Solve(system, system.domain, bound, options);
}

SolveReport SolveBounded(const TSystem& system, std::uint64_t bound,
                         const SolveOptions& options) {
  return Solve(system, system.domain(), bound, options);
}

SolveReport SolveBounded(const System& system, std::uint64_t bound,
                         const SolveOptions& options) {
  return std::visit(
      [&](const auto& s) { return SolveBounded(s, bound, options); }, system);
}

SolveReport SolveSkolemBounded(const SkolemSystem& system,
                               std::uint64_t bound,
                               const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Derivation derivation = Derive(system);
  if (derivation.free.size() > options.max_vars) {
    throw VariableCapExceeded(
        "system has " + std::to_string(derivation.free.size()) +
        " free variables; the cap is " + std::to_string(options.max_vars));
  }
  SolveReport report;
  report.bound = bound;
  report.lowest = system.domain().lowest();
  CheckBound(bound, report.lowest);
  const std::uint64_t radix = bound - report.lowest + 1;
  const std::uint64_t total = GridSize(derivation.free.size(), radix);

  const auto evaluate = [&](Assignment* values,
                            const std::vector<Natural*>& slots,
                            std::uint64_t index) {
    Decode(index, report.lowest, radix, slots);
    for (const SkolemEq* eq : derivation.steps) {
      std::visit(
          [&](const auto& e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, MulEq>) {
              (*values)[e.result] = values->at(e.lhs) * values->at(e.rhs);
            } else if constexpr (std::is_same_v<T, AddEq>) {
              (*values)[e.result] = values->at(e.lhs) + values->at(e.rhs);
            } else {
              (*values)[e.result] = values->at(e.operand) + 1;
            }
          },
          *eq);
    }
    for (const SkolemEq& eq : system.equations) {
      if (!CheckSkolemEq(eq, *values)) return Event::kNone;
    }
    return Event::kSat;
  };
  const auto prepare = [&](Assignment* values) {
    std::vector<Natural*> slots;
    for (const Var& v : derivation.free) slots.push_back(&(*values)[v]);
    return slots;
  };
  const std::uint64_t found = FirstEvent(total, options.threads, [&] {
    auto values = std::make_shared<Assignment>();
    auto slots = prepare(values.get());
    return [&, values, slots](std::uint64_t index) {
      return evaluate(values.get(), slots, index);
    };
  });
  if (found == total) {
    report.outcome = SolveOutcome::kExhaustedUnsat;
    report.tried = total;
  } else {
    evaluate(&report.witness, prepare(&report.witness), found);
    report.outcome = SolveOutcome::kSat;
    report.tried = found + 1;
  }
  report.elapsed_seconds = SecondsSince(start);
  return report;
}

std::string PrintSolveReport(const SolveReport& report) {
  std::string out = "outcome: ";
  out += SolveOutcomeName(report.outcome);
  out += "\nbound: " + std::to_string(report.bound);
  out += "\ntried: " + std::to_string(report.tried) + "\n";
  out += PrintAssignment(report.witness);
  return out;
}

SolveReport ParseSolveReport(std::string_view text) {
  SolveReport report;
  const auto take_line = [&](std::string_view key, std::size_t line_no) {
    const auto end = text.find('\n');
    const std::string_view line = text.substr(0, end);
    if (line.substr(0, key.size()) != key) {
      throw ParseError(line_no, 1, "missing report field",
                       {"'" + std::string(key) + "'"});
    }
    std::string_view value = line.substr(key.size());
    while (!value.empty() && value.front() == ' ') value.remove_prefix(1);
    text = end == std::string_view::npos ? std::string_view()
                                         : text.substr(end + 1);
    return std::string(value);
  };
  const std::string outcome = take_line("outcome:", 1);
  if (outcome == "sat") {
    report.outcome = SolveOutcome::kSat;
  } else if (outcome == "exhausted-unsat") {
    report.outcome = SolveOutcome::kExhaustedUnsat;
  } else if (outcome == "guard-tripped") {
    report.outcome = SolveOutcome::kGuardTripped;
  } else {
    throw ParseError(1, 10, "unknown outcome '" + outcome + "'");
  }
  const auto number = [](const std::string& s, std::size_t line_no) {
    const auto value = ParseDecimal(s);
    const auto v64 = value ? ToUint64(*value) : std::nullopt;
    if (!v64) throw ParseError(line_no, 1, "expected a decimal number");
    return *v64;
  };
  report.bound = number(take_line("bound:", 2), 2);
  report.tried = number(take_line("tried:", 3), 3);
  report.witness = ParseAssignment(text);
  return report;
}

bool VerifyReport::ok() const {
  return std::all_of(atom_holds.begin(), atom_holds.end(),
                     [](bool b) { return b; });
}

std::optional<std::size_t> VerifyReport::first_failure() const {
  for (std::size_t i = 0; i < atom_holds.size(); ++i) {
    if (!atom_holds[i]) return i;
  }
  return std::nullopt;
}

VerifyReport Verify(const NSystem& system, const Assignment& assignment,
                    std::uint64_t guard_bits) {
  CheckCoverage(VarsOf(system), system.domain, assignment);
  VerifyReport report;
  for (const NEquation& eq : system.equations) {
    report.atom_holds.push_back(CheckAtom(eq, assignment, guard_bits));
  }
  return report;
}

VerifyReport Verify(const TSystem& system, const Assignment& assignment,
                    std::uint64_t guard_bits) {
  CheckCoverage(VarsOf(system), system.domain(), assignment);
  VerifyReport report;
  for (const TAtom& atom : system.atoms) {
    report.atom_holds.push_back(CheckAtom(atom, assignment, guard_bits));
  }
  return report;
}

VerifyReport Verify(const System& system, const Assignment& assignment,
                    std::uint64_t guard_bits) {
  return std::visit(
      [&](const auto& s) { return Verify(s, assignment, guard_bits); },
      system);
}

Decision DecideCompiled(const EncodedRelation& relation,
                        const std::vector<Natural>& interface_values,
                        std::uint64_t guard_bits) {
  std::set<Var> planned;
  for (const PlanStep& step : relation.plan.steps) planned.insert(step.target);
  for (const Var& aux : relation.aux) {
    if (!planned.contains(aux)) {
      throw NotEncoderShaped("no witness rule for auxiliary " + aux.name());
    }
  }
  if (interface_values.size() != relation.interface.size()) {
    throw Error("expected " + std::to_string(relation.interface.size()) +
                " interface values, got " +
                std::to_string(interface_values.size()));
  }
  std::set<Var> bound_vars;
  std::set<Var> compound_vars;
  for (const TTerm& term : relation.interface) {
    if (term.kind() == TTerm::Kind::kVar) {
      bound_vars.insert(term.var());
    } else {
      CollectVars(term, &compound_vars);
    }
  }
  for (const Var& v : compound_vars) {
    if (!bound_vars.contains(v)) {
      throw NotEncoderShaped("interface variable " + v.name() +
                             " only occurs inside a compound position");
    }
  }
  Decision decision;
  Assignment values;
  for (std::size_t i = 0; i < interface_values.size(); ++i) {
    if (sgn(interface_values[i]) <= 0) {
      throw DomainViolation("interface value " + std::to_string(i + 1) +
                            " is outside N>0");
    }
    const TTerm& term = relation.interface[i];
    if (term.kind() != TTerm::Kind::kVar) continue;
    const auto [it, inserted] = values.emplace(term.var(), interface_values[i]);
    if (!inserted && it->second != interface_values[i]) {
      decision.reason = "conflicting values for " + term.var().name();
      return decision;
    }
  }
  for (std::size_t i = 0; i < interface_values.size(); ++i) {
    const TTerm& term = relation.interface[i];
    if (term.kind() == TTerm::Kind::kVar) continue;
    if (Evaluate(term, values, guard_bits) != interface_values[i]) {
      decision.reason = "interface term " + PrintTerm(term) +
                        " does not evaluate to the given value";
      return decision;
    }
  }
  if (auto failure = ApplyPlanSteps(relation.plan, &values, guard_bits)) {
    decision.reason = *failure;
    return decision;
  }
  if (auto index = FirstFailingAtom(relation.plan, values, guard_bits)) {
    decision.reason = "atom '" + PrintAtom(relation.plan.atoms[*index]) +
                      "' does not hold";
    return decision;
  }
  decision.sat = true;
  decision.witness = std::move(values);
  return decision;
}

bool DividesMersenne(const Natural& m, const Natural& n) {
  if (m < 1 || n < 1) throw Error("Mersenne divisibility needs m, n >= 1");
  const auto m64 = ToUint64(m);
  if (!m64) throw Error("modulus exponent too large");
  const Natural modulus = Pow2(*m64) - 1;
  Natural residue;
  const Natural two = 2;
  mpz_powm(residue.get_mpz_t(), two.get_mpz_t(), n.get_mpz_t(),
           modulus.get_mpz_t());
  // 2^n - 1 == 0 (mod 2^m - 1)  <=>  2^n mod (2^m - 1) == 1 mod (2^m - 1)
  Natural one_mod = Natural(1) % modulus;
  return residue == one_mod;
}

}  // namespace ntilde
