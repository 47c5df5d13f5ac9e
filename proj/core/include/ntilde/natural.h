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

#ifndef NTILDE_NATURAL_H_
#define NTILDE_NATURAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ntilde {

// Exact arbitrary-precision natural number. Negative values never arise from
// the term languages; helpers below assume a non-negative argument.
using Natural = mpz_class;

// Number of significant bits; 0 for the value 0.
std::uint64_t BitLength(const Natural& value);

// floor(log2(value)) for value >= 1.
std::uint64_t FloorLog2(const Natural& value);

// 2^exponent.
Natural Pow2(std::uint64_t exponent);

std::string ToDecimal(const Natural& value);

// Accepts a non-empty string of ASCII digits only.
std::optional<Natural> ParseDecimal(std::string_view digits);

// Narrowing conversion; nullopt when the value does not fit.
std::optional<std::uint64_t> ToUint64(const Natural& value);

}  // namespace ntilde

#endif  // NTILDE_NATURAL_H_
