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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ntilde/textio.h"
#include "testing/random_systems.h"

namespace ntilde {
namespace {

NSystem ParseN(const std::string& text) {
  return std::get<NSystem>(ParseSystem(text));
}

void ForEachAssignment(const std::set<Var>& vars, int lo, int hi,
                       const std::function<bool(const Assignment&)>& fn) {
  std::vector<Var> order(vars.begin(), vars.end());
  Assignment current;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) return fn(current);
    for (int v = lo; v <= hi; ++v) {
      current[order[i]] = v;
      if (!rec(i + 1)) return false;
    }
    return true;
  };
  rec(0);
}

bool Holds(const NSystem& system, const Assignment& a) {
  for (const NEquation& eq : system.equations) {
    if (!CheckAtom(eq, a)) return false;
  }
  return true;
}

bool HasSolution(const NSystem& system, int lo, int hi) {
  bool found = false;
  ForEachAssignment(VarsOf(system), lo, hi, [&](const Assignment& a) {
    found = Holds(system, a);
    return !found;
  });
  return found;
}

TEST(CaseSplitTest, DoubleIsSquare) {
  const auto cases = CaseSplit(ParseN("domain N\nx + x = x * x"), 1);
  ASSERT_EQ(cases.size(), 3u);
  EXPECT_EQ(cases[0].substitution, (Assignment{{Var("x"), 0}}));
  EXPECT_EQ(cases[0].status, CaseStatus::kTriviallyTrue);
  EXPECT_EQ(cases[1].substitution, (Assignment{{Var("x"), 1}}));
  EXPECT_EQ(cases[1].status, CaseStatus::kTriviallyFalse);
  EXPECT_TRUE(cases[2].substitution.empty());
  EXPECT_EQ(cases[2].status, CaseStatus::kOpen);
  EXPECT_EQ(cases[2].residual.domain, Domain::GreaterThan(1));
  EXPECT_TRUE(Holds(cases[2].residual, {{Var("x"), 2}}));
  EXPECT_TRUE(cases[0].residual.equations.empty());
  EXPECT_TRUE(cases[1].residual.equations.empty());
  EXPECT_EQ(DescribeSubstitution(cases[0].substitution), "x=0");
  EXPECT_EQ(DescribeSubstitution(cases[2].substitution), "-");
  EXPECT_STREQ(CaseStatusName(cases[1].status), "trivially-false");
}

TEST(CaseSplitTest, CountIsPowerOfKPlusTwo) {
  const NSystem s = ParseN("domain N\nx * y = z + w\n");
  for (std::uint64_t k = 0; k <= 3; ++k) {
    EXPECT_EQ(CaseSplit(s, k).size(),
              static_cast<std::size_t>(std::pow(k + 2, 4)));
  }
  EXPECT_EQ(CaseSplit(ParseN("domain N\n2 = 2"), 2).size(), 1u);
}

TEST(CaseSplitTest, OrderIsLexicographic) {
  const auto cases = CaseSplit(ParseN("domain N\nx = y"), 0);
  std::vector<std::string> described;
  for (const SplitCase& c : cases) {
    described.push_back(DescribeSubstitution(c.substitution));
  }
  EXPECT_EQ(described,
            (std::vector<std::string>{"x=0, y=0", "x=0", "y=0", "-"}));
}

TEST(CaseSplitTest, FoldingDoesNoRangeReasoning) {
  const auto cases = CaseSplit(ParseN("domain N\nx = y + 1"), 0);
  ASSERT_EQ(cases.size(), 4u);
  const SplitCase& x_zero = cases[1];
  EXPECT_EQ(x_zero.substitution, (Assignment{{Var("x"), 0}}));
  EXPECT_EQ(x_zero.status, CaseStatus::kOpen);
  ASSERT_EQ(x_zero.residual.equations.size(), 1u);
  EXPECT_EQ(PrintAtom(x_zero.residual.equations[0]), "0 = y + 1");
  EXPECT_FALSE(HasSolution(x_zero.residual, 1, 8));
}

TEST(CaseSplitTest, ResidualsDropSubstitutedVariables) {
  testing::RandomSystems gen(5);
  for (int i = 0; i < 30; ++i) {
    const NSystem s = gen.Next(Domain::AllNaturals());
    for (const SplitCase& c : CaseSplit(s, i % 3)) {
      for (const Var& v : VarsOf(c.residual)) {
        EXPECT_FALSE(c.substitution.contains(v));
      }
    }
  }
}

TEST(CaseSplitTest, FoldingPreservesSemantics) {
  testing::RandomSystems gen(11);
  for (int i = 0; i < 40; ++i) {
    const NSystem s = gen.Next(Domain::AllNaturals());
    const std::set<Var> all = VarsOf(s);
    for (const SplitCase& c : CaseSplit(s, i % 3)) {
      std::set<Var> rest;
      for (const Var& v : all) {
        if (!c.substitution.contains(v)) rest.insert(v);
      }
      ForEachAssignment(rest, 0, 4, [&](const Assignment& a) {
        Assignment full = a;
        full.insert(c.substitution.begin(), c.substitution.end());
        const bool original = Holds(s, full);
        switch (c.status) {
          case CaseStatus::kTriviallyTrue:
            EXPECT_TRUE(original) << PrintSystem(s);
            break;
          case CaseStatus::kTriviallyFalse:
            EXPECT_FALSE(original) << PrintSystem(s);
            break;
          case CaseStatus::kOpen:
            EXPECT_EQ(Holds(c.residual, a), original) << PrintSystem(s);
            break;
        }
        return true;
      });
    }
  }
}

TEST(SplitEquivalenceCheckTest, Examples) {
  EXPECT_TRUE(SplitEquivalenceCheck(ParseN("domain N\nx + x = x * x"), 1, 8));
  for (std::uint64_t k = 0; k <= 2; ++k) {
    EXPECT_TRUE(SplitEquivalenceCheck(ParseN("domain N\nx = x + 1"), k, 8));
  }
}

TEST(SplitEquivalenceCheckTest, RandomSystemsAgreeWithNestedLoops) {
  testing::RandomSystems gen(123);
  constexpr int kBound = 6;
  for (int i = 0; i < 25; ++i) {
    const NSystem s = gen.Next(Domain::AllNaturals());
    const bool whole = HasSolution(s, 0, kBound);
    for (std::uint64_t k = 0; k <= 2; ++k) {
      bool some_case = false;
      for (const SplitCase& c : CaseSplit(s, k)) {
        some_case = some_case || c.status == CaseStatus::kTriviallyTrue ||
                    (c.status == CaseStatus::kOpen &&
                     HasSolution(c.residual, k + 1, kBound));
      }
      EXPECT_EQ(whole, some_case) << PrintSystem(s) << "k=" << k;
      EXPECT_TRUE(SplitEquivalenceCheck(s, k, kBound)) << PrintSystem(s);
    }
  }
}

TEST(RestrictToAboveOneTest, ShiftsVariables) {
  const NSystem s = ParseN("domain N>3\nx = y + 1");
  FreshVars fresh;
  std::map<Var, Var> offsets;
  const NSystem shifted = RestrictToAboveOne(s, &fresh, &offsets);
  EXPECT_EQ(shifted.domain, Domain::GreaterThan(1));
  ASSERT_EQ(offsets.size(), 2u);
  // x = 5, y = 4 over N>3 corresponds to t_x = 3, t_y = 2 over N>1.
  Assignment a = {{offsets.at(Var("x")), 3}, {offsets.at(Var("y")), 2},
                  {Var("x"), 5}, {Var("y"), 4}};
  EXPECT_TRUE(Holds(shifted, a));
  bool any_wrong = false;
  ForEachAssignment(VarsOf(shifted), 2, 7, [&](const Assignment& b) {
    if (Holds(shifted, b)) {
      any_wrong = any_wrong || b.at(Var("x")) != b.at(Var("y")) + 1 ||
                  b.at(Var("y")) <= 3;
    }
    return true;
  });
  EXPECT_FALSE(any_wrong);
}

}  // namespace
}  // namespace ntilde
