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

#include "ntilde/natural.h"

#include <limits>

namespace ntilde {

std::uint64_t BitLength(const Natural& value) {
  if (sgn(value) == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

std::uint64_t FloorLog2(const Natural& value) { return BitLength(value) - 1; }

Natural Pow2(std::uint64_t exponent) {
  Natural result;
  mpz_setbit(result.get_mpz_t(), exponent);
  return result;
}

std::string ToDecimal(const Natural& value) { return value.get_str(10); }

std::optional<Natural> ParseDecimal(std::string_view digits) {
  if (digits.empty()) return std::nullopt;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  return Natural(std::string(digits), 10);
}

std::optional<std::uint64_t> ToUint64(const Natural& value) {
  if (sgn(value) < 0 || BitLength(value) > 64) return std::nullopt;
  // mpz_get_ui is only 64 bits wide on LP64 targets.
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return static_cast<std::uint64_t>(mpz_get_ui(value.get_mpz_t()));
}

}  // namespace ntilde
