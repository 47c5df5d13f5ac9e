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

#include "ntilde/skolemizer.h"

#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ntilde/errors.h"
#include "ntilde/solver.h"
#include "ntilde/textio.h"
#include "testing/random_systems.h"

namespace ntilde {
namespace {

NSystem ParseN(const std::string& text) {
  return std::get<NSystem>(ParseSystem(text));
}

// Calls `fn` on every assignment of `vars` into [lo, hi].
void ForEachAssignment(const std::set<Var>& vars, int lo, int hi,
                       const std::function<void(const Assignment&)>& fn) {
  std::vector<Var> order(vars.begin(), vars.end());
  Assignment current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) {
      fn(current);
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      current[order[i]] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

bool Holds(const NSystem& system, const Assignment& a) {
  for (const NEquation& eq : system.equations) {
    if (!CheckAtom(eq, a)) return false;
  }
  return true;
}

bool HoldsSkolem(const SkolemSystem& system, const Assignment& a) {
  for (const SkolemEq& eq : system.equations) {
    if (!CheckSkolemEq(eq, a)) return false;
  }
  for (const auto& [var, value] : a) {
    if (value < 2) return false;
  }
  return true;
}

TEST(SkolemizeTest, ProductPlusOne) {
  FreshVars fresh;
  const SkolemResult r = Skolemize(ParseN("domain N>1\nz = x*y + 1"), &fresh);
  const Var t("$0");
  const std::vector<SkolemEq> expected = {MulEq{t, Var("x"), Var("y")},
                                          IncEq{Var("z"), t}};
  EXPECT_EQ(r.system.equations, expected);
  EXPECT_EQ(r.system.originals, (std::set<Var>{Var("x"), Var("y"), Var("z")}));
  EXPECT_EQ(r.back_map.at(Var("z")), Var("z"));
  EXPECT_FALSE(r.emitted_unsat_gadget);
}

TEST(SkolemizeTest, BareEqualityUnifiesVariables) {
  FreshVars fresh;
  const SkolemResult r =
      Skolemize(ParseN("domain N>1\nx = y\ny = z * z"), &fresh);
  EXPECT_EQ(r.back_map.at(Var("x")), r.back_map.at(Var("y")));
  ASSERT_EQ(r.system.equations.size(), 1u);
  EXPECT_EQ(r.system.equations[0],
            (SkolemEq{MulEq{Var("x"), Var("z"), Var("z")}}));
}

TEST(SkolemizeTest, LowConstantsEmitUnsatGadget) {
  for (const char* text : {"domain N>1\nx = 1", "domain N>1\nx = 0",
                           "domain N>1\n0 * y = x", "domain N>1\n2 = 3"}) {
    FreshVars fresh;
    const SkolemResult r = Skolemize(ParseN(text), &fresh);
    EXPECT_TRUE(r.emitted_unsat_gadget) << text;
    ASSERT_EQ(r.system.equations.size(), 1u) << text;
    const auto& inc = std::get<IncEq>(r.system.equations[0]);
    EXPECT_EQ(inc.result, inc.operand);
  }
}

TEST(SkolemizeTest, RejectsOtherDomains) {
  FreshVars fresh;
  EXPECT_THROW(Skolemize(ParseN("domain N\nx = y"), &fresh), Error);
}

TEST(SkolemizeTest, PrintedFormHasNoConstants) {
  FreshVars fresh;
  const SkolemResult r =
      Skolemize(ParseN("domain N>1\n3 * x^2 + 12 = y + 1\nx * 7 = z"), &fresh);
  const std::string text = PrintSystem(ToNSystem(r.system));
  // Past the header, digits only occur in generated names and in the
  // "+ 1" of successor equations.
  for (std::size_t i = text.find('\n'); i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) continue;
    std::size_t j = i;
    while (j > 0 && std::isdigit(static_cast<unsigned char>(text[j - 1]))) --j;
    const bool generated = j > 0 && text[j - 1] == '$';
    const bool successor = text.compare(i - 2, 4, "+ 1\n") == 0;
    ASSERT_TRUE(generated || successor) << text;
  }
  EXPECT_EQ(AsSkolemSystem(ParseN(text)).has_value(), true);
}

// Distinct values of `var` over solutions of `eqs` in [2, hi]^vars.
std::set<int> GadgetValues(const std::vector<SkolemEq>& eqs, const Var& var,
                          int hi) {
  SkolemSystem system{eqs, {}};
  std::set<int> seen;
  ForEachAssignment(VarsOf(system), 2, hi, [&](const Assignment& a) {
    if (HoldsSkolem(system, a)) seen.insert(a.at(var).get_si());
  });
  return seen;
}

TEST(BuildConstantTest, TwoGadgetHasUniqueSolution) {
  FreshVars fresh;
  const auto [var, eqs] = BuildConstant(2, &fresh);
  ASSERT_EQ(eqs.size(), 2u);
  SkolemSystem system{eqs, {}};
  std::vector<Assignment> solutions;
  ForEachAssignment(VarsOf(system), 2, 50, [&](const Assignment& a) {
    if (HoldsSkolem(system, a)) solutions.push_back(a);
  });
  ASSERT_EQ(solutions.size(), 1u);
  EXPECT_EQ(solutions[0].at(var), 2);
  for (const auto& [v, value] : solutions[0]) {
    if (v != var) EXPECT_EQ(value, 4);
  }
}

TEST(BuildConstantTest, FiveGadgetFollowsBinaryExpansion) {
  FreshVars fresh;
  const auto [var, eqs] = BuildConstant(5, &fresh);
  ASSERT_EQ(eqs.size(), 4u);
  EXPECT_TRUE(std::holds_alternative<AddEq>(eqs[2]));
  EXPECT_TRUE(std::holds_alternative<IncEq>(eqs[3]));
  EXPECT_EQ(GadgetValues(eqs, var, 30), std::set<int>{5});
}

TEST(BuildConstantTest, EquationCounts) {
  const std::vector<std::pair<int, std::size_t>> cases = {
      {2, 2}, {3, 3}, {4, 3}, {5, 4}, {12, 5}, {255, 15}, {256, 9}};
  for (const auto& [c, count] : cases) {
    FreshVars fresh;
    EXPECT_EQ(BuildConstant(c, &fresh).second.size(), count) << c;
  }
}

TEST(BuildConstantTest, TwelveIsForcedBySolver) {
  FreshVars fresh;
  const auto [var, eqs] = BuildConstant(12, &fresh);
  const SkolemSystem system{eqs, {}};
  const SolveReport report = SolveSkolemBounded(system, 50);
  ASSERT_EQ(report.outcome, SolveOutcome::kSat);
  EXPECT_EQ(report.witness.at(var), 12);
  EXPECT_EQ(GadgetValues(eqs, var, 14), std::set<int>{12});
}

TEST(BuildConstantTest, RejectsSmallValues) {
  FreshVars fresh;
  EXPECT_THROW(BuildConstant(1, &fresh), Error);
}

TEST(AsSkolemSystemTest, RecognisesShapes) {
  EXPECT_TRUE(AsSkolemSystem(ParseN("domain N>1\nz = x * y\nw = z + 1")));
  EXPECT_FALSE(AsSkolemSystem(ParseN("domain N>1\nz = x * y + 1")));
  EXPECT_FALSE(AsSkolemSystem(ParseN("domain N>1\nz = x + 2")));
  EXPECT_FALSE(AsSkolemSystem(ParseN("domain N\nz = x * y")));
  const auto sk = AsSkolemSystem(ParseN("domain N>1\nw = z + 1\nz = x * y"));
  ASSERT_TRUE(sk);
  EXPECT_EQ(ParseN(PrintSystem(ToNSystem(*sk))), ToNSystem(*sk));
}

TEST(ExtendWitnessTest, ExtendsBottomUp) {
  FreshVars fresh;
  const SkolemResult r = Skolemize(
      ParseN("domain N>1\nx^2 + y^2 = z^2 + 0 * x\nq = 12"), &fresh);
  const Assignment input = {
      {Var("x"), 3}, {Var("y"), 4}, {Var("z"), 5}, {Var("q"), 12}};
  const auto extended = ExtendWitness(r, input);
  ASSERT_TRUE(extended);
  EXPECT_TRUE(HoldsSkolem(r.system, *extended));
  const Assignment bad = {
      {Var("x"), 3}, {Var("y"), 4}, {Var("z"), 5}, {Var("q"), 11}};
  EXPECT_FALSE(ExtendWitness(r, bad));
}

// Per-assignment equisolvability: the input holds at an assignment into
// (1, B] exactly when that assignment extends to a Skolem solution.
TEST(SkolemizePropertyTest, EquisolvableOnRandomSystems) {
  testing::RandomSystems gen(77, {.max_vars = 3,
                                  .max_coefficient = 5,
                                  .max_degree = 2,
                                  .max_equations = 2,
                                  .max_monomials = 2});
  int satisfiable = 0;
  int solved = 0;
  for (int i = 0; i < 60; ++i) {
    const NSystem input = gen.Next(Domain::GreaterThan(1));
    FreshVars fresh;
    const SkolemResult r = Skolemize(input, &fresh);
    const int bound = 3 + i % 8;
    bool any = false;
    ForEachAssignment(VarsOf(input), 2, bound, [&](const Assignment& a) {
      const bool holds = Holds(input, a);
      const auto extended = ExtendWitness(r, a);
      const bool lifted = extended && HoldsSkolem(r.system, *extended);
      ASSERT_EQ(holds, lifted) << PrintSystem(input) << PrintAssignment(a);
      any = any || holds;
    });
    satisfiable += any;
    // Any Skolem solution the solver finds maps back to an input solution.
    // Each constant adds a free gadget base, so wide systems are skipped.
    SolveOptions options;
    options.max_vars = 5;
    SolveReport report;
    try {
      report = SolveSkolemBounded(r.system, bound, options);
    } catch (const VariableCapExceeded&) {
      continue;
    }
    ++solved;
    if (report.outcome == SolveOutcome::kSat) {
      Assignment back;
      for (const auto& [in, sk] : r.back_map) back[in] = report.witness.at(sk);
      EXPECT_TRUE(Holds(input, back)) << PrintSystem(input);
    } else if (any) {
      // A solution with originals in (1, B] also has its gadget bases
      // (always 2) in range, so the solver must not miss it.
      EXPECT_EQ(report.outcome, SolveOutcome::kSat) << PrintSystem(input);
    }
  }
  EXPECT_GT(solved, 20);
  EXPECT_GT(satisfiable, 0);
}

}  // namespace
}  // namespace ntilde
