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

#include "ntilde/textio.h"

#include <cctype>
#include <cstddef>
#include <utility>
#include <vector>

#include "ntilde/errors.h"

namespace ntilde {
namespace {

enum class Tok {
  kIdent,
  kNumber,
  kPlus,
  kStar,
  kCaret,
  kEq,
  kLeq,
  kLParen,
  kRParen,
  kComma,
  kEnd
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

std::string Describe(const Token& token) {
  switch (token.kind) {
    case Tok::kEnd:
      return "end of line";
    case Tok::kIdent:
      return "identifier '" + token.text + "'";
    case Tok::kNumber:
      return "number '" + token.text + "'";
    default:
      return "'" + token.text + "'";
  }
}

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return IsIdentStart(c) || std::isdigit(static_cast<unsigned char>(c));
}
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> Tokenize(std::string_view text, std::size_t line,
                            std::size_t column_offset) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t column = column_offset + i + 1;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (IsIdentStart(c)) {
      std::size_t j = i;
      while (j < text.size() && IsIdentChar(text[j])) ++j;
      tokens.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), column});
      i = j;
      continue;
    }
    if (c == '$') {
      std::size_t j = i + 1;
      while (j < text.size() && IsDigit(text[j])) ++j;
      if (j == i + 1) {
        throw ParseError(line, column, "'$' must be followed by digits");
      }
      tokens.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), column});
      i = j;
      continue;
    }
    if (IsDigit(c)) {
      std::size_t j = i;
      while (j < text.size() && IsDigit(text[j])) ++j;
      if (j < text.size() && IsIdentStart(text[j])) {
        throw ParseError(line, column_offset + j + 1,
                         "identifier cannot start with a digit");
      }
      tokens.push_back({Tok::kNumber, std::string(text.substr(i, j - i)), column});
      i = j;
      continue;
    }
    if (c == '<' && i + 1 < text.size() && text[i + 1] == '=') {
      tokens.push_back({Tok::kLeq, "<=", column});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::kPlus; break;
      case '*': kind = Tok::kStar; break;
      case '^': kind = Tok::kCaret; break;
      case '=': kind = Tok::kEq; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case ',': kind = Tok::kComma; break;
      default:
        throw ParseError(line, column,
                         std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({kind, std::string(1, c), column});
    ++i;
  }
  tokens.push_back({Tok::kEnd, "", column_offset + text.size() + 1});
  return tokens;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line)
      : tokens_(std::move(tokens)), line_(line) {}

  NEquation ParseNAtom() {
    NTerm lhs = ParsePoly();
    if (Peek().kind == Tok::kLeq) {
      throw DomainMismatch(line_, Peek().column,
                           "'<=' is only available under 'domain tilde'");
    }
    Expect(Tok::kEq, {"'+'", "'*'", "'='"});
    NTerm rhs = ParsePoly();
    Expect(Tok::kEnd, {"'+'", "'*'", "end of line"});
    return {std::move(lhs), std::move(rhs)};
  }

  TAtom ParseTAtom() {
    TTerm lhs = ParseTSum();
    Relation relation;
    if (Peek().kind == Tok::kEq) {
      relation = Relation::kEq;
    } else if (Peek().kind == Tok::kLeq) {
      relation = Relation::kLeq;
    } else {
      Fail({"'+'", "'='", "'<='"});
    }
    Advance();
    TTerm rhs = ParseTSum();
    Expect(Tok::kEnd, {"'+'", "end of line"});
    return {relation, std::move(lhs), std::move(rhs)};
  }

  std::pair<Var, Natural> ParseBinding() {
    const Token& name = Peek();
    if (name.kind != Tok::kIdent) Fail({"identifier"});
    Var var = CheckIdentifier(name);
    Advance();
    Expect(Tok::kEq, {"'='"});
    const Token& value = Peek();
    if (value.kind != Tok::kNumber) Fail({"decimal value"});
    Natural number = *ParseDecimal(value.text);
    Advance();
    Expect(Tok::kEnd, {"end of line"});
    return {std::move(var), std::move(number)};
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  void Advance() {
    if (pos_ + 1 < tokens_.size()) ++pos_;
  }

  [[noreturn]] void Fail(std::vector<std::string> expected) const {
    throw ParseError(line_, Peek().column, "unexpected " + Describe(Peek()),
                     std::move(expected));
  }

  void Expect(Tok kind, std::vector<std::string> expected) {
    if (Peek().kind != kind) Fail(std::move(expected));
    Advance();
  }

  Var CheckIdentifier(const Token& token) const {
    if (IsUserIdentifier(token.text) || IsFreshIdentifier(token.text)) {
      return Var(token.text);
    }
    throw ParseError(line_, token.column,
                     "'" + token.text + "' is not a valid variable name");
  }

  // --- polynomial side -----------------------------------------------------

  NTerm ParsePoly() {
    NTerm term = ParseProduct();
    while (Peek().kind == Tok::kPlus) {
      Advance();
      term = NTerm::Sum(std::move(term), ParseProduct());
    }
    return term;
  }

  NTerm ParseProduct() {
    NTerm term = ParseNFactor();
    while (Peek().kind == Tok::kStar) {
      Advance();
      term = NTerm::Product(std::move(term), ParseNFactor());
    }
    return term;
  }

  NTerm ParseNFactor() {
    const Token token = Peek();
    switch (token.kind) {
      case Tok::kNumber:
        Advance();
        return NTerm::Constant(*ParseDecimal(token.text));
      case Tok::kIdent: {
        if (token.text == "E") {
          throw DomainMismatch(line_, token.column,
                               "'E' is only available under 'domain tilde'");
        }
        NTerm var = NTerm::Variable(CheckIdentifier(token));
        Advance();
        if (Peek().kind != Tok::kCaret) return var;
        Advance();
        const Token exponent = Peek();
        if (exponent.kind != Tok::kNumber) Fail({"decimal exponent"});
        Advance();
        const auto n = ToUint64(*ParseDecimal(exponent.text));
        if (!n || *n > 4096) {
          throw ParseError(line_, exponent.column, "exponent too large");
        }
        if (*n == 0) return NTerm::Constant(1);
        NTerm power = var;
        for (std::uint64_t i = 1; i < *n; ++i) power = power * var;
        return power;
      }
      case Tok::kLParen: {
        Advance();
        NTerm inner = ParsePoly();
        Expect(Tok::kRParen, {"'+'", "'*'", "')'"});
        return inner;
      }
      default:
        Fail({"number", "identifier", "'('"});
    }
  }

  // --- tilde side ----------------------------------------------------------

  TTerm ParseTSum() {
    TTerm term = ParseTFactor();
    while (true) {
      const Token& next = Peek();
      if (next.kind == Tok::kStar || next.kind == Tok::kCaret) {
        throw DomainMismatch(line_, next.column,
                             "'" + next.text +
                                 "' is not available under 'domain tilde'");
      }
      if (next.kind != Tok::kPlus) break;
      Advance();
      term = TTerm::Sum(std::move(term), ParseTFactor());
    }
    return term;
  }

  TTerm ParseTFactor() {
    const Token token = Peek();
    switch (token.kind) {
      case Tok::kNumber:
        if (token.text != "1") {
          throw DomainMismatch(
              line_, token.column,
              "the only constant under 'domain tilde' is 1");
        }
        Advance();
        return TTerm::One();
      case Tok::kIdent: {
        Advance();
        if (token.text != "E") {
          return TTerm::Variable(CheckIdentifier(token));
        }
        Expect(Tok::kLParen, {"'('"});
        TTerm base = ParseTSum();
        Expect(Tok::kComma, {"'+'", "','"});
        TTerm exponent = ParseTSum();
        Expect(Tok::kRParen, {"'+'", "')'"});
        return TTerm::Exp2(std::move(base), std::move(exponent));
      }
      case Tok::kLParen: {
        Advance();
        TTerm inner = ParseTSum();
        Expect(Tok::kRParen, {"'+'", "')'"});
        return inner;
      }
      default:
        Fail({"'1'", "identifier", "'E'", "'('"});
    }
  }

  std::vector<Token> tokens_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// Strips a trailing comment. Returns the remaining text.
std::string_view StripComment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool IsBlank(std::string_view text) {
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

// Iterates over the lines of `text`, invoking fn(line_no, content) on every
// line that is not blank after comment removal.
template <typename Fn>
void ForEachContentLine(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const std::string_view line = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos
                                             : end - start);
    ++line_no;
    const std::string_view content = StripComment(line);
    if (!IsBlank(content)) fn(line_no, content);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
}

Domain ParseHeader(std::size_t line_no, std::string_view content) {
  std::size_t i = 0;
  const auto skip_space = [&] {
    while (i < content.size() && (content[i] == ' ' || content[i] == '\t' ||
                                  content[i] == '\r')) {
      ++i;
    }
  };
  const std::vector<std::string> specs = {"'N'", "'N>k'", "'tilde'"};
  skip_space();
  if (content.substr(i, 6) != "domain" ||
      (i + 6 < content.size() && IsIdentChar(content[i + 6]))) {
    throw ParseError(line_no, i + 1, "missing domain header",
                     {"'domain'"});
  }
  i += 6;
  skip_space();
  const std::size_t spec_column = i + 1;
  std::size_t j = i;
  while (j < content.size() && IsIdentChar(content[j])) ++j;
  const std::string_view word = content.substr(i, j - i);
  i = j;
  Domain domain = Domain::AllNaturals();
  if (word == "tilde") {
    domain = Domain::Tilde();
  } else if (word == "N") {
    skip_space();
    if (i < content.size() && content[i] == '>') {
      ++i;
      skip_space();
      std::size_t k_end = i;
      while (k_end < content.size() && IsDigit(content[k_end])) ++k_end;
      const auto k = ParseDecimal(content.substr(i, k_end - i));
      const auto k64 = k ? ToUint64(*k) : std::nullopt;
      if (!k64) {
        throw ParseError(line_no, i + 1, "bad domain bound",
                         {"decimal bound"});
      }
      i = k_end;
      domain = Domain::GreaterThan(*k64);
    }
  } else {
    throw ParseError(line_no, spec_column, "unknown domain", specs);
  }
  skip_space();
  if (i != content.size()) {
    throw ParseError(line_no, i + 1, "trailing text after domain header",
                     {"end of line"});
  }
  return domain;
}

// --- printing --------------------------------------------------------------

void Print(const NTerm& term, std::string* out) {
  switch (term.kind()) {
    case NTerm::Kind::kConst:
      *out += ToDecimal(term.constant());
      return;
    case NTerm::Kind::kVar:
      *out += term.var().name();
      return;
    case NTerm::Kind::kAdd: {
      Print(term.lhs(), out);
      *out += " + ";
      const bool paren = term.rhs().kind() == NTerm::Kind::kAdd;
      if (paren) *out += '(';
      Print(term.rhs(), out);
      if (paren) *out += ')';
      return;
    }
    case NTerm::Kind::kMul: {
      const bool lparen = term.lhs().kind() == NTerm::Kind::kAdd;
      const bool rparen = term.rhs().kind() == NTerm::Kind::kAdd ||
                          term.rhs().kind() == NTerm::Kind::kMul;
      if (lparen) *out += '(';
      Print(term.lhs(), out);
      if (lparen) *out += ')';
      *out += " * ";
      if (rparen) *out += '(';
      Print(term.rhs(), out);
      if (rparen) *out += ')';
      return;
    }
  }
}

void Print(const TTerm& term, std::string* out) {
  switch (term.kind()) {
    case TTerm::Kind::kOne:
      *out += '1';
      return;
    case TTerm::Kind::kVar:
      *out += term.var().name();
      return;
    case TTerm::Kind::kAdd: {
      Print(term.lhs(), out);
      *out += " + ";
      const bool paren = term.rhs().kind() == TTerm::Kind::kAdd;
      if (paren) *out += '(';
      Print(term.rhs(), out);
      if (paren) *out += ')';
      return;
    }
    case TTerm::Kind::kExp2:
      *out += "E(";
      Print(term.lhs(), out);
      *out += ", ";
      Print(term.rhs(), out);
      *out += ')';
      return;
  }
}

}  // namespace

System ParseSystem(std::string_view text) {
  std::optional<Domain> domain;
  NSystem nsystem;
  TSystem tsystem;
  ForEachContentLine(text, [&](std::size_t line_no, std::string_view content) {
    if (!domain) {
      domain = ParseHeader(line_no, content);
      nsystem.domain = *domain;
      return;
    }
    LineParser parser(Tokenize(content, line_no, 0), line_no);
    if (domain->kind() == Domain::Kind::kTilde) {
      tsystem.atoms.push_back(parser.ParseTAtom());
    } else {
      nsystem.equations.push_back(parser.ParseNAtom());
    }
  });
  if (!domain) throw ParseError(1, 1, "missing domain header", {"'domain'"});
  if (domain->kind() == Domain::Kind::kTilde) return tsystem;
  return nsystem;
}

std::string PrintTerm(const NTerm& term) {
  std::string out;
  Print(term, &out);
  return out;
}

std::string PrintTerm(const TTerm& term) {
  std::string out;
  Print(term, &out);
  return out;
}

std::string PrintAtom(const NEquation& equation) {
  return PrintTerm(equation.lhs) + " = " + PrintTerm(equation.rhs);
}

std::string PrintAtom(const TAtom& atom) {
  return PrintTerm(atom.lhs) +
         (atom.relation == Relation::kEq ? " = " : " <= ") +
         PrintTerm(atom.rhs);
}

std::string PrintSystem(const NSystem& system) {
  std::string out = "domain " + system.domain.ToString() + "\n";
  for (const NEquation& eq : system.equations) out += PrintAtom(eq) + "\n";
  return out;
}

std::string PrintSystem(const TSystem& system) {
  std::string out = "domain tilde\n";
  for (const TAtom& atom : system.atoms) out += PrintAtom(atom) + "\n";
  return out;
}

std::string PrintSystem(const System& system) {
  return std::visit([](const auto& s) { return PrintSystem(s); }, system);
}

Assignment ParseAssignment(std::string_view text) {
  Assignment assignment;
  ForEachContentLine(text, [&](std::size_t line_no, std::string_view content) {
    LineParser parser(Tokenize(content, line_no, 0), line_no);
    auto [var, value] = parser.ParseBinding();
    if (assignment.contains(var)) {
      throw DuplicateVariable(line_no, 1,
                              "duplicate variable '" + var.name() + "'");
    }
    assignment.emplace(std::move(var), std::move(value));
  });
  return assignment;
}

std::string PrintAssignment(const Assignment& assignment) {
  std::string out;
  for (const auto& [var, value] : assignment) {
    out += var.name() + " = " + ToDecimal(value) + "\n";
  }
  return out;
}

}  // namespace ntilde
