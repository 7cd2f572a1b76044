// Copyright 2026 The rittdyn Authors
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

#ifndef RITTDYN_EXPR_HPP_
#define RITTDYN_EXPR_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rittdyn/error.hpp"
#include "rittdyn/ratfunc.hpp"

namespace rittdyn {

// Parse failure at a byte offset of the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::kSyntax, "byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Expression tree over z, i, integers, + - * / ^, T(n), D(s), pow(n) and
// corpus labels. Exponents are folded to integers while parsing.
struct Expr {
  enum class Kind { kNumber, kVar, kImag, kAdd, kSub, kMul, kDiv, kNeg, kPow, kFamily, kName };

  Kind kind = Kind::kNumber;
  std::string text;  // digits, family name or corpus label
  long value = 0;    // exponent or family parameter
  std::vector<Expr> args;
  std::size_t offset = 0;

  // Structural equality; offsets are ignored.
  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.text == b.text && a.value == b.value && a.args == b.args;
  }
};

// Precedence ^ > unary minus > * / > + -, with ^ right associative.
// Throws SyntaxError.
Expr ParseExpr(std::string_view text);
// Fully parenthesis-minimal text that parses back to the same tree.
std::string RenderExpr(const Expr& e);
// Throws SyntaxError on a zero denominator and kPrecondition when a degree
// exceeds the guard.
RatFunc EvaluateExpr(const Expr& e, int degree_guard = kDefaultDegreeGuard);
RatFunc ParseFunction(std::string_view text, int degree_guard = kDefaultDegreeGuard);

struct CorpusEntry {
  std::string name;
  std::string expr;
};

// "label expression" lines; blank lines and '#' comments are skipped.
std::vector<CorpusEntry> ParseCorpus(std::string_view text);
// The corpus shipped in data/corpus.txt, compiled into the library.
const std::vector<CorpusEntry>& BuiltinCorpus();
std::string_view BuiltinCorpusText();
std::optional<CorpusEntry> FindCorpusEntry(std::string_view name);

// Exact point of Q(i) u {inf}: "inf" or an expression with a constant value.
ExactPoint ParsePoint(std::string_view text);

}  // namespace rittdyn

#endif  // RITTDYN_EXPR_HPP_
