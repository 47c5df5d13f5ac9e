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

#include "ntilde/term.h"

#include <gtest/gtest.h>

#include <random>

#include "ntilde/errors.h"
#include "ntilde/system.h"

namespace ntilde {
namespace {

TTerm T(const char* name) { return TTerm::Variable(Var(name)); }
NTerm N(const char* name) { return NTerm::Variable(Var(name)); }
TTerm Unary(int n) {
  TTerm t = TTerm::One();
  for (int i = 1; i < n; ++i) t = t + TTerm::One();
  return t;
}

TEST(EvaluateTest, Exp2MultipliesByPowerOfTwo) {
  EXPECT_EQ(Evaluate(TTerm::Exp2(Unary(3), Unary(4)), {}), 48);
}

TEST(EvaluateTest, SuccessorOfVariable) {
  EXPECT_EQ(Evaluate(T("x") + TTerm::One(), {{Var("x"), 7}}), 8);
}

TEST(EvaluateTest, Exp2OfVariableWithItself) {
  EXPECT_EQ(Evaluate(TTerm::Exp2(T("x"), T("x")), {{Var("x"), 5}}), 160);
}

TEST(EvaluateTest, PolynomialSide) {
  const NTerm t = NTerm::Constant(3) * N("x") * N("x") + NTerm::Constant(1);
  EXPECT_EQ(Evaluate(t, {{Var("x"), 4}}), 49);
}

TEST(EvaluateTest, HugeExactValues) {
  const Natural big("123456789012345678901234567890123456789", 10);
  const NTerm t = N("x") * N("x");
  EXPECT_EQ(Evaluate(t, {{Var("x"), big}}), big * big);
}

TEST(EvaluateTest, MissingVariableThrows) {
  EXPECT_THROW(Evaluate(T("x"), {}), MissingVariable);
}

TEST(EvaluateTest, SizeGuardTripsOnLargeShift) {
  const TTerm t = TTerm::Exp2(TTerm::One(), T("x"));
  EXPECT_EQ(BitLength(Evaluate(t, {{Var("x"), 63}}, 64)), 64u);
  EXPECT_THROW(Evaluate(t, {{Var("x"), 64}}, 64), SizeGuardExceeded);
}

TEST(EvaluateTest, SizeGuardTripsOnExponentTower) {
  // E(1, E(1, E(1, x))) at x = 5 is 2^(2^32).
  const TTerm tower =
      TTerm::Exp2(TTerm::One(),
                  TTerm::Exp2(TTerm::One(), TTerm::Exp2(TTerm::One(), T("x"))));
  EXPECT_THROW(Evaluate(tower, {{Var("x"), 5}}), SizeGuardExceeded);
}

TEST(EvaluateTest, SizeGuardTripsOnProduct) {
  const NTerm t = N("x") * N("x");
  EXPECT_THROW(Evaluate(t, {{Var("x"), Pow2(40)}}, 64), SizeGuardExceeded);
}

TEST(CheckAtomTest, Examples) {
  EXPECT_TRUE(CheckAtom(TAtom{Relation::kLeq, T("x"), T("x")},
                        {{Var("x"), 3}}));
  const TAtom divides{Relation::kEq,
                      TTerm::Exp2(TTerm::One(), T("y")) + T("z"),
                      TTerm::Exp2(T("z"), T("x")) + TTerm::One()};
  EXPECT_TRUE(
      CheckAtom(divides, {{Var("x"), 2}, {Var("y"), 4}, {Var("z"), 5}}));
  EXPECT_FALSE(CheckAtom(TAtom{Relation::kEq, T("x"), T("x") + TTerm::One()},
                         {{Var("x"), 9}}));
  EXPECT_FALSE(CheckAtom(NEquation{N("x"), N("x") + NTerm::Constant(1)},
                         {{Var("x"), 9}}));
}

TEST(FreshVarsTest, CountsFromZero) {
  FreshVars fresh;
  EXPECT_EQ(fresh.Next().name(), "$0");
  EXPECT_EQ(fresh.Next().name(), "$1");
}

TEST(FreshVarsTest, AvoidingSkipsExistingGeneratedNames) {
  FreshVars fresh = FreshVars::Avoiding({Var("x"), Var("$4"), Var("$2")});
  EXPECT_EQ(fresh.Next().name(), "$5");
  EXPECT_EQ(FreshVars::Avoiding({Var("x")}).Next().name(), "$0");
}

TEST(VarTest, IdentifierClasses) {
  EXPECT_TRUE(IsUserIdentifier("x1"));
  EXPECT_TRUE(IsUserIdentifier("_tmp"));
  EXPECT_FALSE(IsUserIdentifier("E"));
  EXPECT_FALSE(IsUserIdentifier("$0"));
  EXPECT_FALSE(IsUserIdentifier("1x"));
  EXPECT_TRUE(IsFreshIdentifier("$17"));
  EXPECT_FALSE(IsFreshIdentifier("$"));
}

TEST(VarTest, UserNamesSortBeforeGeneratedOnesInCounterOrder) {
  EXPECT_LT(Var("z"), Var("$0"));
  EXPECT_LT(Var("$2"), Var("$10"));
  EXPECT_LT(Var("a"), Var("b"));
}

TEST(FoldConstantsTest, Rules) {
  const NTerm x = N("x");
  const NTerm zero = NTerm::Constant(0);
  const NTerm one = NTerm::Constant(1);
  EXPECT_EQ(FoldConstants(x + zero), x);
  EXPECT_EQ(FoldConstants(zero + x), x);
  EXPECT_EQ(FoldConstants(x * zero), zero);
  EXPECT_EQ(FoldConstants(one * x), x);
  EXPECT_EQ(FoldConstants(NTerm::Constant(2) * NTerm::Constant(3) + one),
            NTerm::Constant(7));
  EXPECT_EQ(FoldConstants(x * (zero + one)), x);
}

// --- properties -------------------------------------------------------------

class RandomTerms {
 public:
  explicit RandomTerms(std::uint64_t seed) : rng_(seed) {}

  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  // Exponents are built without Exp2 so values stay small.
  TTerm Tilde(int depth, bool allow_exp = true) {
    const int pick = depth == 0 ? Uniform(0, 1) : Uniform(0, allow_exp ? 3 : 2);
    switch (pick) {
      case 0:
        return TTerm::One();
      case 1:
        return TTerm::Variable(Var(kNames[Uniform(0, 2)]));
      case 2:
        return Tilde(depth - 1, allow_exp) + Tilde(depth - 1, allow_exp);
      default:
        return TTerm::Exp2(Tilde(depth - 1, allow_exp),
                           Tilde(depth - 1, false));
    }
  }

  NTerm Poly(int depth) {
    const int pick = depth == 0 ? Uniform(0, 1) : Uniform(0, 3);
    switch (pick) {
      case 0:
        return NTerm::Constant(Uniform(0, 3));
      case 1:
        return NTerm::Variable(Var(kNames[Uniform(0, 2)]));
      case 2:
        return Poly(depth - 1) + Poly(depth - 1);
      default:
        return Poly(depth - 1) * Poly(depth - 1);
    }
  }

  Assignment Values(int lo, int hi) {
    Assignment a;
    for (const char* name : kNames) a[Var(name)] = Uniform(lo, hi);
    return a;
  }

 private:
  static constexpr const char* kNames[] = {"x", "y", "z"};
  std::mt19937_64 rng_;
};

TEST(TermPropertyTest, PositivityClosureAndDeterminism) {
  RandomTerms gen(7);
  for (int i = 0; i < 500; ++i) {
    const TTerm t = gen.Tilde(4);
    const Assignment a = gen.Values(1, 6);
    const Natural first = Evaluate(t, a);
    EXPECT_GE(first, 1);
    EXPECT_EQ(first, Evaluate(t, a));
  }
}

TEST(TermPropertyTest, TildeTermsAreMonotone) {
  RandomTerms gen(11);
  for (int i = 0; i < 500; ++i) {
    const TTerm t = gen.Tilde(4);
    Assignment a = gen.Values(1, 6);
    const Natural before = Evaluate(t, a);
    const Var bumped(i % 2 == 0 ? "x" : "y");
    a[bumped] += gen.Uniform(1, 3);
    EXPECT_GE(Evaluate(t, a), before);
  }
}

TEST(TermPropertyTest, FoldingPreservesValue) {
  RandomTerms gen(13);
  for (int i = 0; i < 500; ++i) {
    const NTerm t = gen.Poly(4);
    const Assignment a = gen.Values(0, 5);
    EXPECT_EQ(Evaluate(FoldConstants(t), a), Evaluate(t, a));
  }
}

TEST(TermPropertyTest, SubstitutionThenFoldMatchesEvaluation) {
  RandomTerms gen(17);
  for (int i = 0; i < 300; ++i) {
    const NTerm t = gen.Poly(4);
    const Assignment a = gen.Values(0, 5);
    const NTerm ground = FoldConstants(Substitute(t, a));
    ASSERT_TRUE(ground.is_const());
    EXPECT_EQ(ground.constant(), Evaluate(t, a));
  }
}

}  // namespace
}  // namespace ntilde
