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

#include <utility>

#include "ntilde/errors.h"

namespace ntilde {
namespace {

class Flattener {
 public:
  explicit Flattener(FreshVars* fresh) : fresh_(fresh) {}

  void AddAtom(const NEquation& equation) {
    const NTerm lhs = FoldConstants(equation.lhs);
    const NTerm rhs = FoldConstants(equation.rhs);
    if (lhs.is_const() && rhs.is_const()) {
      if (lhs.constant() != rhs.constant()) EmitUnsatGadget();
      return;
    }
    // A non-constant folded term is at least 2 over N>1.
    for (const NTerm* side : {&lhs, &rhs}) {
      if (side->is_const() && side->constant() < 2) {
        EmitUnsatGadget();
        return;
      }
    }
    if (lhs.kind() == NTerm::Kind::kVar) {
      Flatten(rhs, lhs.var());
    } else if (rhs.kind() == NTerm::Kind::kVar) {
      Flatten(lhs, rhs.var());
    } else {
      const Var root = Flatten(lhs, std::nullopt);
      Flatten(rhs, root);
    }
  }

  SkolemResult Finish(const std::set<Var>& inputs) && {
    SkolemResult result;
    for (const Var& v : inputs) {
      const Var rep = Find(v);
      result.back_map.emplace(v, rep);
      result.system.originals.insert(rep);
    }
    for (SkolemEq& eq : equations_) {
      std::visit(
          [&](auto& e) {
            using T = std::decay_t<decltype(e)>;
            e.result = Find(e.result);
            if constexpr (std::is_same_v<T, IncEq>) {
              e.operand = Find(e.operand);
            } else {
              e.lhs = Find(e.lhs);
              e.rhs = Find(e.rhs);
            }
          },
          eq);
    }
    for (auto& [var, value] : forced_) {
      result.forced_values.emplace(Find(var), value);
    }
    result.system.equations = std::move(equations_);
    result.emitted_unsat_gadget = unsat_;
    return result;
  }

 private:
  Var Flatten(const NTerm& term, const std::optional<Var>& target) {
    switch (term.kind()) {
      case NTerm::Kind::kVar:
        if (target) Union(*target, term.var());
        return term.var();
      case NTerm::Kind::kConst: {
        auto [var, eqs] = BuildConstant(term.constant(), fresh_);
        RecordGadget(term.constant(), var, eqs);
        equations_.insert(equations_.end(), eqs.begin(), eqs.end());
        if (target) Union(*target, var);
        return var;
      }
      case NTerm::Kind::kAdd: {
        const NTerm& a = term.lhs();
        const NTerm& b = term.rhs();
        const auto is_one = [](const NTerm& t) {
          return t.is_const() && t.constant() == 1;
        };
        if (is_one(b) || is_one(a)) {
          const Var operand = Flatten(is_one(b) ? a : b, std::nullopt);
          const Var result = target ? *target : fresh_->Next();
          equations_.push_back(IncEq{result, operand});
          return result;
        }
        const Var l = Flatten(a, std::nullopt);
        const Var r = Flatten(b, std::nullopt);
        const Var result = target ? *target : fresh_->Next();
        equations_.push_back(AddEq{result, l, r});
        return result;
      }
      case NTerm::Kind::kMul: {
        const Var l = Flatten(term.lhs(), std::nullopt);
        const Var r = Flatten(term.rhs(), std::nullopt);
        const Var result = target ? *target : fresh_->Next();
        equations_.push_back(MulEq{result, l, r});
        return result;
      }
    }
    return Var();
  }

  // Gadget variables hold known values: the 2-gadget's u and v, then the
  // running prefix of the binary expansion.
  void RecordGadget(const Natural& c, const Var& top,
                    const std::vector<SkolemEq>& eqs) {
    Assignment values;
    for (const SkolemEq& eq : eqs) {
      if (const auto* mul = std::get_if<MulEq>(&eq)) {
        values[mul->lhs] = 2;
        values[mul->result] = 4;
      } else if (const auto* add = std::get_if<AddEq>(&eq)) {
        if (!values.contains(add->result)) {
          values[add->result] = values.at(add->lhs) + values.at(add->rhs);
        }
      } else {
        const auto& inc = std::get<IncEq>(eq);
        values[inc.result] = values.at(inc.operand) + 1;
      }
    }
    values[top] = c;
    for (auto& [var, value] : values) forced_[var] = value;
  }

  void EmitUnsatGadget() {
    const Var a = fresh_->Next();
    equations_.push_back(IncEq{a, a});
    unsat_ = true;
  }

  Var Find(const Var& v) {
    auto it = parent_.find(v);
    if (it == parent_.end() || it->second == v) return v;
    Var root = Find(it->second);
    it->second = root;
    return root;
  }

  // User-named variables win over generated ones; otherwise the smaller name.
  void Union(const Var& a, const Var& b) {
    const Var ra = Find(a);
    const Var rb = Find(b);
    if (ra == rb) return;
    const bool a_first = ra.is_fresh() == rb.is_fresh() ? ra < rb
                                                        : !ra.is_fresh();
    if (a_first) {
      parent_[rb] = ra;
    } else {
      parent_[ra] = rb;
    }
  }

  FreshVars* fresh_;
  std::vector<SkolemEq> equations_;
  std::map<Var, Var> parent_;
  std::map<Var, Natural> forced_;
  bool unsat_ = false;
};

template <typename Fn>
void ForEachVar(const SkolemEq& eq, Fn&& fn) {
  std::visit(
      [&](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        fn(e.result);
        if constexpr (std::is_same_v<T, IncEq>) {
          fn(e.operand);
        } else {
          fn(e.lhs);
          fn(e.rhs);
        }
      },
      eq);
}

}  // namespace

SkolemResult Skolemize(const NSystem& system, FreshVars* fresh) {
  if (system.domain != Domain::GreaterThan(1)) {
    throw Error("Skolem conversion expects a system over N>1, got " +
                system.domain.ToString());
  }
  Flattener flattener(fresh);
  for (const NEquation& eq : system.equations) flattener.AddAtom(eq);
  return std::move(flattener).Finish(VarsOf(system));
}

std::pair<Var, std::vector<SkolemEq>> BuildConstant(const Natural& c,
                                                    FreshVars* fresh) {
  if (c < 2) throw Error("constant gadgets need a value >= 2");
  std::vector<SkolemEq> eqs;
  const Var u = fresh->Next();
  const Var v = fresh->Next();
  eqs.push_back(MulEq{v, u, u});
  eqs.push_back(AddEq{v, u, u});
  // u holds the leading "1" shifted once; walk the remaining digits.
  const std::string bits = c.get_str(2);
  Var current = u;
  for (std::size_t i = 1; i < bits.size(); ++i) {
    if (i > 1) {
      const Var doubled = fresh->Next();
      eqs.push_back(AddEq{doubled, current, current});
      current = doubled;
    }
    if (bits[i] == '1') {
      const Var incremented = fresh->Next();
      eqs.push_back(IncEq{incremented, current});
      current = incremented;
    }
  }
  return {current, std::move(eqs)};
}

std::optional<SkolemSystem> AsSkolemSystem(const NSystem& system) {
  if (system.domain != Domain::GreaterThan(1)) return std::nullopt;
  using K = NTerm::Kind;
  SkolemSystem result;
  for (const NEquation& eq : system.equations) {
    if (eq.lhs.kind() != K::kVar) return std::nullopt;
    const Var& x = eq.lhs.var();
    const NTerm& rhs = eq.rhs;
    if (rhs.kind() != K::kAdd && rhs.kind() != K::kMul) return std::nullopt;
    const NTerm& a = rhs.lhs();
    const NTerm& b = rhs.rhs();
    if (a.kind() != K::kVar) return std::nullopt;
    if (rhs.kind() == K::kMul) {
      if (b.kind() != K::kVar) return std::nullopt;
      result.equations.push_back(MulEq{x, a.var(), b.var()});
    } else if (b.kind() == K::kVar) {
      result.equations.push_back(AddEq{x, a.var(), b.var()});
    } else if (b.is_const() && b.constant() == 1) {
      result.equations.push_back(IncEq{x, a.var()});
    } else {
      return std::nullopt;
    }
  }
  for (const Var& v : VarsOf(system)) {
    if (!v.is_fresh()) result.originals.insert(v);
  }
  return result;
}

NSystem ToNSystem(const SkolemSystem& system) {
  NSystem out;
  out.domain = system.domain();
  for (const SkolemEq& eq : system.equations) {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          NTerm result = NTerm::Variable(e.result);
          if constexpr (std::is_same_v<T, MulEq>) {
            out.equations.push_back(
                {result, NTerm::Variable(e.lhs) * NTerm::Variable(e.rhs)});
          } else if constexpr (std::is_same_v<T, AddEq>) {
            out.equations.push_back(
                {result, NTerm::Variable(e.lhs) + NTerm::Variable(e.rhs)});
          } else {
            out.equations.push_back(
                {result, NTerm::Variable(e.operand) + NTerm::Constant(1)});
          }
        },
        eq);
  }
  return out;
}

std::set<Var> VarsOf(const SkolemSystem& system) {
  std::set<Var> vars;
  for (const SkolemEq& eq : system.equations) {
    ForEachVar(eq, [&](const Var& v) { vars.insert(v); });
  }
  return vars;
}

bool CheckSkolemEq(const SkolemEq& equation, const Assignment& assignment) {
  const auto value = [&](const Var& v) -> const Natural& {
    const auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw MissingVariable("no value for variable " + v.name());
    }
    return it->second;
  };
  return std::visit(
      [&](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, MulEq>) {
          return value(e.result) == value(e.lhs) * value(e.rhs);
        } else if constexpr (std::is_same_v<T, AddEq>) {
          return value(e.result) == value(e.lhs) + value(e.rhs);
        } else {
          return value(e.result) == value(e.operand) + 1;
        }
      },
      equation);
}

std::string PrintSkolemEq(const SkolemEq& equation) {
  return std::visit(
      [](const auto& e) -> std::string {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, MulEq>) {
          return e.result.name() + " = " + e.lhs.name() + " * " + e.rhs.name();
        } else if constexpr (std::is_same_v<T, AddEq>) {
          return e.result.name() + " = " + e.lhs.name() + " + " + e.rhs.name();
        } else {
          return e.result.name() + " = " + e.operand.name() + " + 1";
        }
      },
      equation);
}

std::optional<Assignment> ExtendWitness(const SkolemResult& result,
                                        const Assignment& input_values) {
  Assignment values = result.forced_values;
  for (const auto& [input, skolem] : result.back_map) {
    const auto it = input_values.find(input);
    if (it == input_values.end()) {
      throw MissingVariable("no value for variable " + input.name());
    }
    const auto [slot, inserted] = values.emplace(skolem, it->second);
    if (!inserted && slot->second != it->second) return std::nullopt;
  }
  return CompleteBottomUp(result.system, std::move(values));
}

std::optional<Assignment> CompleteBottomUp(const SkolemSystem& system,
                                           Assignment values) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (const SkolemEq& eq : system.equations) {
      std::visit(
          [&](const auto& e) {
            using T = std::decay_t<decltype(e)>;
            if (values.contains(e.result)) return;
            if constexpr (std::is_same_v<T, IncEq>) {
              const auto it = values.find(e.operand);
              if (it == values.end()) return;
              values[e.result] = it->second + 1;
            } else {
              const auto l = values.find(e.lhs);
              const auto r = values.find(e.rhs);
              if (l == values.end() || r == values.end()) return;
              if constexpr (std::is_same_v<T, MulEq>) {
                values[e.result] = l->second * r->second;
              } else {
                values[e.result] = l->second + r->second;
              }
            }
            progress = true;
          },
          eq);
    }
  }
  for (const Var& v : VarsOf(system)) {
    if (!values.contains(v)) return std::nullopt;
  }
  return values;
}

}  // namespace ntilde
