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

#ifndef NTILDE_TEXTIO_H_
#define NTILDE_TEXTIO_H_

#include <string>
#include <string_view>

#include "ntilde/system.h"
#include "ntilde/term.h"

namespace ntilde {

// Source files start with a header line "domain N", "domain N>k" or
// "domain tilde", followed by one atom per line. "#" starts a comment that
// runs to the end of the line; blank lines are ignored.
//
// Polynomial side (N, N>k):
//   atom   := poly "=" poly
//   poly   := term ("+" term)*
//   term   := factor ("*" factor)*
//   factor := decimal | ident | ident "^" decimal | "(" poly ")"
// Tilde side:
//   atom    := tterm ("=" | "<=") tterm
//   tterm   := tfactor ("+" tfactor)*
//   tfactor := "1" | ident | "E" "(" tterm "," tterm ")" | "(" tterm ")"
//
// Throws ParseError (with position and expected tokens) and DomainMismatch
// when an operator is used outside its language.
System ParseSystem(std::string_view text);

// Canonical form: one space around binary operators, minimal parentheses,
// trailing newline. ParseSystem(PrintSystem(s)) == s.
std::string PrintSystem(const System& system);
std::string PrintSystem(const NSystem& system);
std::string PrintSystem(const TSystem& system);

std::string PrintTerm(const NTerm& term);
std::string PrintTerm(const TTerm& term);
std::string PrintAtom(const NEquation& equation);
std::string PrintAtom(const TAtom& atom);

// Lines "ident = decimal". Throws ParseError and DuplicateVariable.
Assignment ParseAssignment(std::string_view text);
std::string PrintAssignment(const Assignment& assignment);

}  // namespace ntilde

#endif  // NTILDE_TEXTIO_H_
