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

#ifndef NTILDE_SYSTEM_H_
#define NTILDE_SYSTEM_H_

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ntilde/natural.h"
#include "ntilde/term.h"

namespace ntilde {

// Carrier a system is interpreted in: all of N, N>k, or N>0 under the
// power-circuit signature ("tilde").
class Domain {
 public:
  enum class Kind { kAllNaturals, kGreaterThan, kTilde };

  static Domain AllNaturals() { return Domain(Kind::kAllNaturals, 0); }
  static Domain GreaterThan(std::uint64_t k) {
    return Domain(Kind::kGreaterThan, k);
  }
  static Domain Tilde() { return Domain(Kind::kTilde, 0); }

  Kind kind() const { return kind_; }
  // Exclusive lower bound; meaningful for kGreaterThan only.
  std::uint64_t k() const { return k_; }
  // Smallest element of the carrier.
  std::uint64_t lowest() const;
  bool Contains(const Natural& value) const { return value >= lowest(); }

  // "N", "N>k" or "tilde".
  std::string ToString() const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(Kind kind, std::uint64_t k) : kind_(kind), k_(k) {}
  Kind kind_;
  std::uint64_t k_;
};

// Polynomial equation lhs = rhs.
struct NEquation {
  NTerm lhs;
  NTerm rhs;
  friend bool operator==(const NEquation&, const NEquation&) = default;
};

enum class Relation { kEq, kLeq };

// Atomic formula over the tilde signature.
struct TAtom {
  Relation relation = Relation::kEq;
  TTerm lhs;
  TTerm rhs;
  friend bool operator==(const TAtom&, const TAtom&) = default;
};

// Conjunction of polynomial equations interpreted in N or N>k.
struct NSystem {
  Domain domain = Domain::AllNaturals();
  std::vector<NEquation> equations;
  friend bool operator==(const NSystem&, const NSystem&) = default;
};

// Conjunction of tilde atoms; the domain is always N>0.
struct TSystem {
  std::vector<TAtom> atoms;
  Domain domain() const { return Domain::Tilde(); }
  friend bool operator==(const TSystem&, const TSystem&) = default;
};

using System = std::variant<NSystem, TSystem>;

Domain DomainOf(const System& system);
std::size_t AtomCount(const System& system);

std::set<Var> VarsOf(const NEquation& equation);
std::set<Var> VarsOf(const TAtom& atom);
std::set<Var> VarsOf(const NSystem& system);
std::set<Var> VarsOf(const TSystem& system);
std::set<Var> VarsOf(const System& system);

// True iff the atom holds under `assignment`. Propagates SizeGuardExceeded
// and MissingVariable from evaluation.
bool CheckAtom(const NEquation& equation, const Assignment& assignment,
               std::uint64_t guard_bits = kDefaultGuardBits);
bool CheckAtom(const TAtom& atom, const Assignment& assignment,
               std::uint64_t guard_bits = kDefaultGuardBits);

}  // namespace ntilde

#endif  // NTILDE_SYSTEM_H_
