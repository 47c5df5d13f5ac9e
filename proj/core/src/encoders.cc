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

#include "ntilde/encoders.h"

#include <utility>

#include "ntilde/errors.h"
#include "ntilde/textio.h"

namespace ntilde {
namespace {

TTerm V(const Var& v) { return TTerm::Variable(v); }
TTerm Pow2Of(const TTerm& exponent) {
  return TTerm::Exp2(TTerm::One(), exponent);
}

void Append(EncodedRelation* into, EncodedRelation&& part) {
  into->aux.insert(into->aux.end(), part.aux.begin(), part.aux.end());
  for (PlanStep& step : part.plan.steps) {
    into->plan.steps.push_back(std::move(step));
  }
  for (TAtom& atom : part.plan.atoms) {
    into->plan.atoms.push_back(std::move(atom));
  }
}

std::string DescribeStep(const PlanStep& step) {
  std::string out = step.target.name() + " <- " + RuleName(step.rule) + "(";
  for (std::size_t i = 0; i < step.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += PrintTerm(step.args[i]);
  }
  return out + ")";
}

// nullopt when the rule has no value in N>0 for these arguments.
std::optional<Natural> ApplyRule(const PlanStep& step,
                                 const Assignment& values,
                                 std::uint64_t guard) {
  std::vector<Natural> args;
  args.reserve(step.args.size());
  for (const TTerm& arg : step.args) {
    args.push_back(Evaluate(arg, values, guard));
  }
  switch (step.rule) {
    case WitnessRule::kMersenneDiv: {
      const auto d = ToUint64(args[0]);
      const auto n = ToUint64(args[1]);
      if (!d || !n || *n > guard || *d > guard) throw SizeGuardExceeded(guard);
      if (*d == 0) return std::nullopt;
      const Natural numerator = Pow2(*n) - 1;
      const Natural denominator = Pow2(*d) - 1;
      Natural quotient;
      Natural remainder;
      mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(),
                  numerator.get_mpz_t(), denominator.get_mpz_t());
      if (sgn(remainder) != 0 || sgn(quotient) <= 0) return std::nullopt;
      return quotient;
    }
    case WitnessRule::kSub: {
      Natural diff = args[1] - args[0];
      if (sgn(diff) <= 0) return std::nullopt;
      return diff;
    }
    case WitnessRule::kFloorLog: {
      if (sgn(args[0]) <= 0) return std::nullopt;
      const std::uint64_t log = FloorLog2(args[0]);
      if (log == 0) return std::nullopt;
      return Natural(static_cast<unsigned long>(log));
    }
    case WitnessRule::kBitcapSub: {
      const auto y = ToUint64(args[1]);
      if (!y || *y + 1 > guard) throw SizeGuardExceeded(guard);
      Natural diff = Pow2(*y + 1) - args[0];
      if (sgn(diff) <= 0) return std::nullopt;
      return diff;
    }
    case WitnessRule::kSquare: {
      if (2 * BitLength(args[0]) > guard + 1) throw SizeGuardExceeded(guard);
      return args[0] * args[0];
    }
  }
  return std::nullopt;
}

}  // namespace

const char* RuleName(WitnessRule rule) {
  switch (rule) {
    case WitnessRule::kMersenneDiv:
      return "mersenne_div";
    case WitnessRule::kSub:
      return "sub";
    case WitnessRule::kFloorLog:
      return "floorlog";
    case WitnessRule::kBitcapSub:
      return "bitcap_sub";
    case WitnessRule::kSquare:
      return "square";
  }
  return "?";
}

EncodedRelation EncodeLess(const TTerm& s, const TTerm& t, FreshVars* fresh) {
  const Var z = fresh->Next();
  EncodedRelation rel;
  rel.interface = {s, t};
  rel.aux = {z};
  rel.plan.steps.push_back({z, WitnessRule::kSub, {s, t}});
  rel.plan.atoms.push_back({Relation::kEq, s + V(z), t});
  return rel;
}

EncodedRelation EncodeDivides(const TTerm& d, const TTerm& n,
                              FreshVars* fresh) {
  const Var z = fresh->Next();
  EncodedRelation rel;
  rel.interface = {d, n};
  rel.aux = {z};
  rel.plan.steps.push_back({z, WitnessRule::kMersenneDiv, {d, n}});
  rel.plan.atoms.push_back({Relation::kEq, Pow2Of(n) + V(z),
                            TTerm::Exp2(V(z), d) + TTerm::One()});
  return rel;
}

EncodedRelation EncodeFloorLog2(const TTerm& s, const Var& y,
                                FreshVars* fresh) {
  const Var z = fresh->Next();
  EncodedRelation rel;
  rel.interface = {s, V(y)};
  rel.aux = {z};
  rel.plan.steps.push_back({z, WitnessRule::kBitcapSub, {s, V(y)}});
  rel.plan.atoms.push_back({Relation::kLeq, Pow2Of(V(y)), s});
  rel.plan.atoms.push_back(
      {Relation::kEq, s + V(z), Pow2Of(V(y) + TTerm::One())});
  return rel;
}

EncodedRelation EncodeSquare(const TTerm& x, const Var& y, FreshVars* fresh) {
  const TTerm one = TTerm::One();
  const TTerm yv = V(y);
  EncodedRelation rel;
  rel.interface = {x, yv};

  // y + x is a common multiple of x and x + 1.
  Append(&rel, EncodeDivides(x, yv + x, fresh));
  Append(&rel, EncodeDivides(x + one, yv + x, fresh));

  // floor(log2 y) <= 2 floor(log2 x) + 1
  const Var lx = fresh->Next();
  rel.aux.push_back(lx);
  rel.plan.steps.push_back({lx, WitnessRule::kFloorLog, {x}});
  Append(&rel, EncodeFloorLog2(x, lx, fresh));
  const Var ly = fresh->Next();
  rel.aux.push_back(ly);
  rel.plan.steps.push_back({ly, WitnessRule::kFloorLog, {yv}});
  Append(&rel, EncodeFloorLog2(yv, ly, fresh));
  rel.plan.atoms.push_back({Relation::kLeq, V(ly), V(lx) + V(lx) + one});

  // Filter out 2x^2 + x and 3x^2 + 2x.
  Append(&rel, EncodeDivides(x + one + one, yv + x + x, fresh));
  Append(&rel, EncodeDivides(x + one + one + one, yv + x + x + x, fresh));
  return rel;
}

EncodedRelation EncodeMult(const TTerm& x, const TTerm& y, const TTerm& z,
                           FreshVars* fresh) {
  const Var u = fresh->Next();
  const Var v = fresh->Next();
  const Var w = fresh->Next();
  const TTerm sum = x + y;
  EncodedRelation rel;
  rel.interface = {x, y, z};
  rel.aux = {u, v, w};
  const std::pair<const TTerm*, const Var*> squares[] = {
      {&x, &u}, {&y, &v}, {&sum, &w}};
  for (const auto& [base, target] : squares) {
    rel.plan.steps.push_back({*target, WitnessRule::kSquare, {*base}});
    Append(&rel, EncodeSquare(*base, *target, fresh));
  }
  rel.plan.atoms.push_back({Relation::kEq, z + z + V(u) + V(v), V(w)});
  return rel;
}

std::vector<std::uint64_t> EnumerateSPrime(std::uint64_t xv) {
  if (xv < 2 || xv > (std::uint64_t{1} << 20)) {
    throw Error("S' enumeration needs 2 <= x <= 2^20");
  }
  const auto floor_log = [](std::uint64_t v) {
    std::uint64_t log = 0;
    while (v >>= 1) ++log;
    return log;
  };
  const std::uint64_t cap = 2 * floor_log(xv) + 1;
  const std::uint64_t upper = (std::uint64_t{1} << (cap + 1)) - 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 1; y <= upper; ++y) {
    const std::uint64_t shifted = y + xv;
    if (shifted % xv == 0 && shifted % (xv + 1) == 0 && floor_log(y) <= cap) {
      out.push_back(y);
    }
  }
  return out;
}

CompiledSystem CompileSystem(const SkolemSystem& system, FreshVars* fresh) {
  CompiledSystem out;
  out.interface = VarsOf(system);
  std::set<Var> in_product;
  std::set<Var> in_linear;
  const auto push_atom = [&](TAtom atom) {
    out.plan.atoms.push_back(atom);
  };
  for (const SkolemEq& eq : system.equations) {
    if (const auto* mul = std::get_if<MulEq>(&eq)) {
      in_product.insert({mul->result, mul->lhs, mul->rhs});
      EncodedRelation rel =
          EncodeMult(V(mul->lhs), V(mul->rhs), V(mul->result), fresh);
      for (PlanStep& step : rel.plan.steps) {
        out.plan.steps.push_back(std::move(step));
      }
      for (TAtom& atom : rel.plan.atoms) push_atom(std::move(atom));
    } else if (const auto* add = std::get_if<AddEq>(&eq)) {
      in_linear.insert({add->result, add->lhs, add->rhs});
      push_atom({Relation::kEq, V(add->result), V(add->lhs) + V(add->rhs)});
    } else {
      const auto& inc = std::get<IncEq>(eq);
      in_linear.insert({inc.result, inc.operand});
      push_atom({Relation::kEq, V(inc.result), V(inc.operand) + TTerm::One()});
    }
  }
  for (const Var& v : in_linear) {
    if (in_product.contains(v)) continue;
    EncodedRelation rel = EncodeLess(TTerm::One(), V(v), fresh);
    for (PlanStep& step : rel.plan.steps) {
      out.plan.steps.push_back(std::move(step));
    }
    for (TAtom& atom : rel.plan.atoms) push_atom(std::move(atom));
  }
  out.system.atoms = out.plan.atoms;
  return out;
}

std::optional<std::string> ApplyPlanSteps(const WitnessPlan& plan,
                                          Assignment* values,
                                          std::uint64_t guard_bits) {
  for (const PlanStep& step : plan.steps) {
    std::optional<Natural> value = ApplyRule(step, *values, guard_bits);
    if (!value) return DescribeStep(step) + " has no value in N>0";
    (*values)[step.target] = std::move(*value);
  }
  return std::nullopt;
}

std::optional<std::size_t> FirstFailingAtom(const WitnessPlan& plan,
                                            const Assignment& values,
                                            std::uint64_t guard_bits) {
  for (std::size_t i = 0; i < plan.atoms.size(); ++i) {
    if (!CheckAtom(plan.atoms[i], values, guard_bits)) return i;
  }
  return std::nullopt;
}

Assignment LiftWitness(const WitnessPlan& plan, const Assignment& originals,
                       std::uint64_t guard_bits) {
  for (const auto& [var, value] : originals) {
    if (value < 2) {
      throw WitnessLiftFailure("value of " + var.name() +
                               " is outside N>1: " + ToDecimal(value));
    }
  }
  Assignment values = originals;
  if (auto failure = ApplyPlanSteps(plan, &values, guard_bits)) {
    throw WitnessLiftFailure("step " + *failure);
  }
  if (auto index = FirstFailingAtom(plan, values, guard_bits)) {
    throw WitnessLiftFailure("atom " + std::to_string(*index + 1) + " '" +
                             PrintAtom(plan.atoms[*index]) +
                             "' does not hold");
  }
  return values;
}

std::string PrintPlan(const WitnessPlan& plan) {
  std::string out;
  for (const PlanStep& step : plan.steps) out += DescribeStep(step) + "\n";
  return out;
}

}  // namespace ntilde
