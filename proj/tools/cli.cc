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

#include "cli.h"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ntilde/casesplit.h"
#include "ntilde/encoders.h"
#include "ntilde/errors.h"
#include "ntilde/skolemizer.h"
#include "ntilde/solver.h"
#include "ntilde/system.h"
#include "ntilde/textio.h"

namespace ntilde::cli {
namespace {

constexpr std::size_t kMaxCaseSplitVars = 8;

struct PipelineConfig {
  std::string input = "-";
  std::string output;
  std::uint64_t bound = kDefaultBound;
  std::uint64_t k = 1;
  std::uint64_t guard_bits = kDefaultGuardBits;
  std::size_t var_cap = kDefaultVariableCap;
  std::string witness_path;
  std::string originals_path;
  std::string out_dir;
  bool grid = false;
};

// Unreadable files and inputs of the wrong kind.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string ReadFile(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path.string());
  file << text;
}

SolveOptions MakeSolveOptions(const PipelineConfig& config) {
  SolveOptions options;
  options.max_vars = config.var_cap;
  options.guard_bits = config.guard_bits;
  return options;
}

const NSystem& RequireNSystem(const System& system, const char* command) {
  const auto* n = std::get_if<NSystem>(&system);
  if (n == nullptr) {
    throw InputError(std::string(command) +
                     " expects a polynomial system, got domain tilde");
  }
  return *n;
}

SkolemSystem RequireSkolem(const System& system, const char* command) {
  const NSystem& n = RequireNSystem(system, command);
  auto skolem = AsSkolemSystem(n);
  if (!skolem) {
    throw InputError(std::string(command) +
                     " expects a Skolem-form system over N>1 (atoms x = y * z,"
                     " x = y + z, x = y + 1); run 'skolem' first");
  }
  return *skolem;
}

std::string PlanComments(const WitnessPlan& plan) {
  std::string out = "# witness plan\n";
  std::istringstream lines(PrintPlan(plan));
  for (std::string line; std::getline(lines, line);) out += "# " + line + "\n";
  return out;
}

// --- subcommands ------------------------------------------------------------

int CmdParse(const PipelineConfig& config, std::istream& in,
             std::ostream& out) {
  out << PrintSystem(ParseSystem(ReadFile(config.input, in)));
  return kOk;
}

int CmdSkolem(const PipelineConfig& config, std::istream& in,
              std::ostream& out, std::ostream& err) {
  const System system = ParseSystem(ReadFile(config.input, in));
  const NSystem& n = RequireNSystem(system, "skolem");
  FreshVars fresh = FreshVars::Avoiding(VarsOf(n));
  const SkolemResult result = Skolemize(n, &fresh);
  for (const auto& [input, skolem] : result.back_map) {
    if (!(input == skolem)) {
      out << "# " << input.name() << " -> " << skolem.name() << "\n";
    }
  }
  if (result.emitted_unsat_gadget) {
    err << "note: an atom is unsatisfiable over N>1; emitted a = a + 1\n";
    out << "# unsatisfiable atom replaced by a = a + 1\n";
  }
  out << PrintSystem(ToNSystem(result.system));
  return kOk;
}

int CmdCompile(const PipelineConfig& config, std::istream& in,
               std::ostream& out) {
  const SkolemSystem skolem =
      RequireSkolem(ParseSystem(ReadFile(config.input, in)), "compile");
  FreshVars fresh = FreshVars::Avoiding(VarsOf(skolem));
  const CompiledSystem compiled = CompileSystem(skolem, &fresh);
  out << PrintSystem(compiled.system) << PlanComments(compiled.plan);
  return kOk;
}

std::string CaseBlock(std::size_t index, const SplitCase& c) {
  return "# case " + std::to_string(index) + ": " +
         DescribeSubstitution(c.substitution) + " [" +
         CaseStatusName(c.status) + "]\n" + PrintSystem(c.residual);
}

std::vector<SplitCase> SplitWithCap(const NSystem& n, std::uint64_t k) {
  const std::size_t vars = VarsOf(n).size();
  if (vars > kMaxCaseSplitVars) {
    throw VariableCapExceeded("case split refuses " + std::to_string(vars) +
                              " variables (limit " +
                              std::to_string(kMaxCaseSplitVars) + ")");
  }
  return CaseSplit(n, k);
}

int CmdCaseSplit(const PipelineConfig& config, std::istream& in,
                 std::ostream& out) {
  const System system = ParseSystem(ReadFile(config.input, in));
  const std::vector<SplitCase> cases =
      SplitWithCap(RequireNSystem(system, "casesplit"), config.k);
  if (!config.out_dir.empty()) std::filesystem::create_directories(config.out_dir);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const std::string block = CaseBlock(i, cases[i]);
    if (config.out_dir.empty()) {
      if (i > 0) out << "\n";
      out << block;
      continue;
    }
    std::ostringstream name;
    name << "case_" << std::setw(3) << std::setfill('0') << i << ".txt";
    const auto path = std::filesystem::path(config.out_dir) / name.str();
    WriteFile(path, block);
    out << path.string() << "\n";
  }
  return kOk;
}

int ExitFor(SolveOutcome outcome) {
  switch (outcome) {
    case SolveOutcome::kSat:
      return kOk;
    case SolveOutcome::kExhaustedUnsat:
      return kNegative;
    case SolveOutcome::kGuardTripped:
      return kLimit;
  }
  return kLimit;
}

int CmdSolve(const PipelineConfig& config, std::istream& in,
             std::ostream& out, std::ostream& err) {
  const System system = ParseSystem(ReadFile(config.input, in));
  const SolveOptions options = MakeSolveOptions(config);
  SolveReport report;
  std::optional<SkolemSystem> skolem;
  if (const auto* n = std::get_if<NSystem>(&system); n && !config.grid) {
    skolem = AsSkolemSystem(*n);
  }
  if (skolem) {
    err << "note: Skolem-form input; enumerating free variables only"
           " (use --grid for plain enumeration)\n";
    report = SolveSkolemBounded(*skolem, config.bound, options);
  } else {
    report = SolveBounded(system, config.bound, options);
  }
  out << PrintSolveReport(report);
  if (report.outcome == SolveOutcome::kGuardTripped) {
    err << "size guard of " << config.guard_bits << " bits tripped\n";
  }
  return ExitFor(report.outcome);
}

int CmdVerify(const PipelineConfig& config, std::istream& in,
              std::ostream& out, std::ostream& err) {
  const System system = ParseSystem(ReadFile(config.input, in));
  const Assignment witness = ParseAssignment(ReadFile(config.witness_path, in));
  const VerifyReport report = Verify(system, witness, config.guard_bits);
  for (std::size_t i = 0; i < report.atom_holds.size(); ++i) {
    const std::string atom = std::visit(
        [&](const auto& s) -> std::string {
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>, NSystem>) {
            return PrintAtom(s.equations[i]);
          } else {
            return PrintAtom(s.atoms[i]);
          }
        },
        system);
    out << (report.atom_holds[i] ? "ok   " : "FAIL ") << atom << "\n";
    if (!report.atom_holds[i]) {
      err << "atom " << (i + 1) << " '" << atom << "' does not hold\n";
    }
  }
  out << "verdict: " << (report.ok() ? "pass" : "fail") << "\n";
  return report.ok() ? kOk : kNegative;
}

int CmdLift(const PipelineConfig& config, std::istream& in,
            std::ostream& out, std::ostream& err) {
  const SkolemSystem skolem =
      RequireSkolem(ParseSystem(ReadFile(config.input, in)), "lift");
  const Assignment given = ParseAssignment(ReadFile(config.originals_path, in));
  Assignment start;
  const std::set<Var> vars = VarsOf(skolem);
  for (const auto& [var, value] : given) {
    if (vars.contains(var)) start.emplace(var, value);
  }
  const auto originals = CompleteBottomUp(skolem, start);
  if (!originals) {
    throw InputError("the given values do not determine every variable");
  }
  FreshVars fresh = FreshVars::Avoiding(vars);
  const CompiledSystem compiled = CompileSystem(skolem, &fresh);
  Assignment lifted;
  try {
    lifted = LiftWitness(compiled.plan, *originals, config.guard_bits);
  } catch (const WitnessLiftFailure& e) {
    err << "witness lift failed: " << e.what() << "\n";
    return kNegative;
  }
  const VerifyReport report =
      Verify(compiled.system, lifted, config.guard_bits);
  out << "# lifted witness: " << report.atom_holds.size()
      << " compiled atoms hold\n"
      << PrintAssignment(lifted);
  return report.ok() ? kOk : kNegative;
}

struct CaseRow {
  std::string original;
  std::string lifted;
  bool solvable = false;
  bool lift_attempted = false;
  bool lift_ok = false;
};

// Solves one open residual, then compiles it and checks the lifted witness.
CaseRow RunOpenCase(const PipelineConfig& config, const SplitCase& c,
                    const std::filesystem::path* dir, std::size_t index) {
  CaseRow row;
  const SolveOptions options = MakeSolveOptions(config);
  FreshVars fresh = FreshVars::Avoiding(VarsOf(c.residual));
  std::map<Var, Var> offsets;
  const NSystem restricted = RestrictToAboveOne(c.residual, &fresh, &offsets);
  const SkolemResult skolem = Skolemize(restricted, &fresh);
  const CompiledSystem compiled = CompileSystem(skolem.system, &fresh);
  std::ostringstream stem;
  stem << "case_" << std::setw(3) << std::setfill('0') << index;
  if (dir != nullptr) {
    WriteFile(*dir / (stem.str() + ".residual.txt"), PrintSystem(c.residual));
    WriteFile(*dir / (stem.str() + ".skolem.txt"),
              PrintSystem(ToNSystem(skolem.system)));
    WriteFile(*dir / (stem.str() + ".compiled.txt"),
              PrintSystem(compiled.system) + PlanComments(compiled.plan));
  }

  const SolveReport report = SolveBounded(c.residual, config.bound, options);
  row.original = SolveOutcomeName(report.outcome);
  if (report.outcome != SolveOutcome::kSat) {
    row.lifted = report.outcome == SolveOutcome::kExhaustedUnsat
                     ? "not checked beyond interface decision"
                     : "n/a";
    return row;
  }
  row.solvable = true;
  row.lift_attempted = true;
  row.original += " (" + DescribeSubstitution(report.witness) + ")";
  Assignment inputs = report.witness;
  const Natural shift = Natural(static_cast<unsigned long>(config.k)) - 1;
  for (const auto& [var, offset] : offsets) inputs[offset] = inputs[var] - shift;
  const auto skolem_values = ExtendWitness(skolem, inputs);
  if (!skolem_values) {
    row.lifted = "failed: Skolem extension";
    return row;
  }
  try {
    const Assignment lifted =
        LiftWitness(compiled.plan, *skolem_values, config.guard_bits);
    const VerifyReport verify =
        Verify(compiled.system, lifted, config.guard_bits);
    row.lift_ok = verify.ok();
    row.lifted = (verify.ok() ? "verified (" : "FAILED (") +
                 std::to_string(verify.atom_holds.size()) + " atoms)";
    if (dir != nullptr) {
      WriteFile(*dir / (stem.str() + ".witness.txt"), PrintAssignment(lifted));
    }
  } catch (const WitnessLiftFailure& e) {
    row.lifted = std::string("failed: ") + e.what();
  } catch (const SizeGuardExceeded&) {
    row.lifted = "guard-tripped";
  }
  return row;
}

int CmdPipeline(const PipelineConfig& config, std::istream& in,
                std::ostream& out) {
  if (config.k < 1) {
    throw CLI::ValidationError("--k", "pipeline needs k >= 1");
  }
  const System system = ParseSystem(ReadFile(config.input, in));
  const NSystem& n = RequireNSystem(system, "pipeline");
  const std::vector<SplitCase> cases = SplitWithCap(n, config.k);
  std::optional<std::filesystem::path> dir;
  if (!config.out_dir.empty()) {
    dir = config.out_dir;
    std::filesystem::create_directories(*dir);
  }

  std::ostringstream table;
  table << std::left << std::setw(6) << "case" << std::setw(22)
        << "substitution" << std::setw(28) << "original-solve"
        << "lift/verify\n";
  std::size_t solvable_cases = 0;
  std::size_t lifts = 0;
  std::size_t lifts_ok = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const SplitCase& c = cases[i];
    CaseRow row;
    if (c.status == CaseStatus::kOpen) {
      row = RunOpenCase(config, c, dir ? &*dir : nullptr, i);
    } else {
      row.original = CaseStatusName(c.status);
      row.lifted = "n/a";
      row.solvable = c.status == CaseStatus::kTriviallyTrue;
    }
    solvable_cases += row.solvable ? 1 : 0;
    lifts += row.lift_attempted ? 1 : 0;
    lifts_ok += row.lift_ok ? 1 : 0;
    table << std::left << std::setw(6) << i << std::setw(22)
          << DescribeSubstitution(c.substitution) << std::setw(28)
          << row.original << row.lifted << "\n";
  }

  const SolveReport direct =
      SolveBounded(n, config.bound, MakeSolveOptions(config));
  const bool direct_sat = direct.outcome == SolveOutcome::kSat;
  const bool agree = direct_sat == (solvable_cases > 0);
  out << table.str();
  out << "original system over N, bound " << config.bound << ": "
      << SolveOutcomeName(direct.outcome) << "\n";
  out << "cases with a solution: " << solvable_cases << " of " << cases.size()
      << "\n";
  out << "agreement: " << (agree ? "yes" : "NO") << "\n";
  out << "lifted witnesses verified: " << lifts_ok << " of " << lifts << "\n";
  return agree && lifts_ok == lifts ? kOk : kNegative;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  PipelineConfig config;
  CLI::App app{"Compiles polynomial systems over N into systems over "
               "(N>0; +, x*2^y, <=, 1) and checks them at desk scale",
               "ntilde"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--guard-bits", config.guard_bits,
                 "Largest intermediate value in bits")
      ->check(CLI::Range(kMinGuardBits, std::uint64_t{1} << 40));
  app.add_option("--var-cap", config.var_cap,
                 "Most variables bounded enumeration accepts")
      ->check(CLI::Range(std::size_t{1}, std::size_t{12}));
  app.add_option("-o,--output", config.output, "Write results to this file");

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "Input file, '-' for stdin");
  };
  auto* parse = app.add_subcommand("parse", "Echo the canonical form");
  add_input(parse);
  auto* skolem = app.add_subcommand("skolem", "N>1 system -> Skolem form");
  add_input(skolem);
  auto* compile =
      app.add_subcommand("compile", "Skolem form -> tilde system + plan");
  add_input(compile);
  auto* casesplit =
      app.add_subcommand("casesplit", "N system -> substituted cases over N>k");
  add_input(casesplit);
  casesplit->add_option("--k", config.k, "Values 0..k are split off")
      ->required();
  casesplit->add_option("--out-dir", config.out_dir,
                        "Write one file per case here");
  auto* solve = app.add_subcommand("solve", "Bounded brute-force search");
  add_input(solve);
  solve->add_option("--bound", config.bound, "Largest value tried")
      ->check(CLI::Range(std::uint64_t{0}, std::uint64_t{1} << 32));
  solve->add_flag("--grid", config.grid,
                  "Enumerate every variable, even for Skolem-form input");
  auto* verify = app.add_subcommand("verify", "Check a witness atom by atom");
  add_input(verify);
  verify->add_option("--witness", config.witness_path, "Assignment file")
      ->required();
  auto* lift = app.add_subcommand(
      "lift", "Lift a Skolem solution to the compiled tilde system");
  add_input(lift);
  lift->add_option("--originals", config.originals_path, "Assignment file")
      ->required();
  auto* pipeline = app.add_subcommand(
      "pipeline", "Case split, compile and cross-check an N system");
  add_input(pipeline);
  pipeline->add_option("--k", config.k, "Values 0..k are split off")
      ->default_val(1);
  pipeline->add_option("--bound", config.bound, "Largest value tried")
      ->check(CLI::Range(std::uint64_t{0}, std::uint64_t{1} << 32));
  pipeline->add_option("--out-dir", config.out_dir,
                       "Write residual, Skolem, compiled and witness files");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output.empty()) {
    file.open(config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << config.output << "\n";
      return kInput;
    }
    sink = &file;
  }

  try {
    if (parse->parsed()) return CmdParse(config, in, *sink);
    if (skolem->parsed()) return CmdSkolem(config, in, *sink, err);
    if (compile->parsed()) return CmdCompile(config, in, *sink);
    if (casesplit->parsed()) return CmdCaseSplit(config, in, *sink);
    if (solve->parsed()) return CmdSolve(config, in, *sink, err);
    if (verify->parsed()) return CmdVerify(config, in, *sink, err);
    if (lift->parsed()) return CmdLift(config, in, *sink, err);
    if (pipeline->parsed()) return CmdPipeline(config, in, *sink);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeGuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const VariableCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}

}  // namespace ntilde::cli
