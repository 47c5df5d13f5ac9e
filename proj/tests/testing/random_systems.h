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

#ifndef NTILDE_TESTS_TESTING_RANDOM_SYSTEMS_H_
#define NTILDE_TESTS_TESTING_RANDOM_SYSTEMS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ntilde/system.h"
#include "ntilde/term.h"

namespace ntilde::testing {

struct RandomSystemShape {
  int max_vars = 3;
  int max_coefficient = 3;
  int max_degree = 2;
  int max_equations = 2;
  int max_monomials = 2;
};

// Seeded generator of small polynomial systems: every side is a sum of
// monomials c * v1 * ... * vd with d <= max_degree and c <= max_coefficient
// (c may be 0 only for a bare constant).
class RandomSystems {
 public:
  explicit RandomSystems(std::uint64_t seed, RandomSystemShape shape = {})
      : rng_(seed), shape_(shape) {}

  NSystem Next(Domain domain) {
    const int vars = Uniform(1, shape_.max_vars);
    std::vector<Var> names;
    for (int i = 0; i < vars; ++i) {
      names.emplace_back(std::string(1, static_cast<char>('x' + i)));
    }
    NSystem system;
    system.domain = domain;
    const int equations = Uniform(1, shape_.max_equations);
    for (int i = 0; i < equations; ++i) {
      system.equations.push_back({Side(names), Side(names)});
    }
    return system;
  }

 private:
  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  NTerm Monomial(const std::vector<Var>& names) {
    const int degree = Uniform(0, shape_.max_degree);
    if (degree == 0) return NTerm::Constant(Uniform(0, shape_.max_coefficient));
    const int coefficient = Uniform(1, shape_.max_coefficient);
    NTerm term = NTerm::Variable(names[Uniform(0, names.size() - 1)]);
    for (int i = 1; i < degree; ++i) {
      term = term * NTerm::Variable(names[Uniform(0, names.size() - 1)]);
    }
    if (coefficient == 1) return term;
    return NTerm::Constant(coefficient) * term;
  }

  NTerm Side(const std::vector<Var>& names) {
    NTerm side = Monomial(names);
    const int monomials = Uniform(1, shape_.max_monomials);
    for (int i = 1; i < monomials; ++i) side = side + Monomial(names);
    return side;
  }

  std::mt19937_64 rng_;
  RandomSystemShape shape_;
};

}  // namespace ntilde::testing

#endif  // NTILDE_TESTS_TESTING_RANDOM_SYSTEMS_H_
