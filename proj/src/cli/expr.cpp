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

#include "rittdyn/expr.hpp"

#include <cctype>
#include <sstream>

#include "rittdyn/dynamics.hpp"

namespace rittdyn {
namespace {

using Kind = Expr::Kind;

constexpr long kMaxExponent = 1 << 16;
constexpr int kMaxNameDepth = 16;

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool IsIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr Parse() {
    Expr e = ParseSum();
    Skip();
    if (pos_ < s_.size()) Fail(std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) { Fail(what, pos_); }
  [[noreturn]] void Fail(const std::string& what, std::size_t at) { throw SyntaxError(at, what); }

  void Skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool Accept(char c) {
    Skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void Expect(char c) {
    if (!Accept(c)) Fail(std::string("expected '") + c + "'");
  }

  static Expr Node(Kind k, std::size_t at, std::vector<Expr> args) {
    Expr e;
    e.kind = k;
    e.offset = at;
    e.args = std::move(args);
    return e;
  }

  Expr ParseSum() {
    Expr lhs = ParseProduct();
    for (;;) {
      Skip();
      std::size_t at = pos_;
      if (Accept('+')) {
        lhs = Node(Kind::kAdd, at, {std::move(lhs), ParseProduct()});
      } else if (Accept('-')) {
        lhs = Node(Kind::kSub, at, {std::move(lhs), ParseProduct()});
      } else {
        return lhs;
      }
    }
  }

  Expr ParseProduct() {
    Expr lhs = ParseUnary();
    for (;;) {
      Skip();
      std::size_t at = pos_;
      if (Accept('*')) {
        lhs = Node(Kind::kMul, at, {std::move(lhs), ParseUnary()});
      } else if (Accept('/')) {
        lhs = Node(Kind::kDiv, at, {std::move(lhs), ParseUnary()});
      } else {
        return lhs;
      }
    }
  }

  Expr ParseUnary() {
    Skip();
    std::size_t at = pos_;
    if (Accept('-')) return Node(Kind::kNeg, at, {ParseUnary()});
    if (Accept('+')) return ParseUnary();
    return ParsePower();
  }

  Expr ParsePower() {
    Expr base = ParsePrimary();
    Skip();
    std::size_t at = pos_;
    if (!Accept('^')) return base;
    Expr e = Node(Kind::kPow, at, {std::move(base)});
    e.value = ParseExponent();
    return e;
  }

  long ParseExponent() {
    Skip();
    std::size_t at = pos_;
    bool negative = false;
    if (Accept('-')) {
      negative = true;
    } else {
      Accept('+');
    }
    Expr e = ParsePower();
    RatFunc v;
    try {
      v = EvaluateExpr(e);
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error&) {
      Fail("exponent out of range", at);
    }
    if (!v.is_constant()) Fail("exponent must be an integer constant", at);
    GaussianRational c = v.num().is_zero() ? GaussianRational(0) : v.num().lead();
    if (!c.is_real() || c.re().get_den() != 1) Fail("exponent must be an integer", at);
    mpz_class n = c.re().get_num();
    if (abs(n) > kMaxExponent) Fail("exponent out of range", at);
    long k = n.get_si();
    return negative ? -k : k;
  }

  long ParseSignedInt() {
    Skip();
    std::size_t at = pos_;
    bool negative = Accept('-');
    Skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) Fail("expected an integer", at);
    if (pos_ - start > 6) Fail("integer parameter out of range", start);
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return negative ? -v : v;
  }

  Expr ParsePrimary() {
    Skip();
    if (pos_ >= s_.size()) Fail("unexpected end of input");
    std::size_t at = pos_;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = ParseSum();
      Expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Expr e = Node(Kind::kNumber, at, {});
      e.text = std::string(s_.substr(at, pos_ - at));
      return e;
    }
    if (!IsIdentStart(c)) Fail(std::string("unexpected '") + c + "'");
    while (pos_ < s_.size() && IsIdentChar(s_[pos_])) ++pos_;
    std::string id(s_.substr(at, pos_ - at));
    if (id == "z") return Node(Kind::kVar, at, {});
    if (id == "i") return Node(Kind::kImag, at, {});
    if (id == "T" || id == "D" || id == "pow") {
      Skip();
      if (pos_ < s_.size() && s_[pos_] == '(') {
        ++pos_;
        std::size_t param_at = pos_;
        Expr e = Node(Kind::kFamily, at, {});
        e.text = id;
        e.value = ParseSignedInt();
        Expect(')');
        if (id == "pow" ? e.value == 0 : e.value < 1) {
          Fail(id == "pow" ? "pow needs a nonzero exponent" : id + " needs a parameter >= 1", param_at);
        }
        return e;
      }
    }
    if (!FindCorpusEntry(id)) Fail("unknown name '" + id + "'", at);
    Expr e = Node(Kind::kName, at, {});
    e.text = id;
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

int Height(const RatFunc& f) { return std::max(f.num().is_zero() ? 0 : f.num().degree(), f.den().degree()); }

[[noreturn]] void GuardFail(int guard, std::size_t at) {
  ThrowPrecondition("byte " + std::to_string(at) + ": degree exceeds the guard of " +
                    std::to_string(guard));
}

RatFunc Checked(RatFunc f, int guard, std::size_t at) {
  if (Height(f) > guard) GuardFail(guard, at);
  return f;
}

RatFunc Eval(const Expr& e, int guard, int depth) {
  auto arg = [&](int k) { return Eval(e.args[k], guard, depth); };
  switch (e.kind) {
    case Kind::kNumber:
      return RatFunc::Constant(GaussianRational(mpq_class(mpz_class(e.text))));
    case Kind::kVar:
      return RatFunc::Identity();
    case Kind::kImag:
      return RatFunc::Constant(GaussianRational::I());
    case Kind::kNeg: {
      RatFunc a = arg(0);
      return RatFunc(-a.num(), a.den());
    }
    case Kind::kAdd:
    case Kind::kSub: {
      RatFunc a = arg(0), b = arg(1);
      Poly bn = e.kind == Kind::kAdd ? b.num() : -b.num();
      return Checked(RatFunc(a.num() * b.den() + bn * a.den(), a.den() * b.den()), guard, e.offset);
    }
    case Kind::kMul: {
      RatFunc a = arg(0), b = arg(1);
      return Checked(RatFunc(a.num() * b.num(), a.den() * b.den()), guard, e.offset);
    }
    case Kind::kDiv: {
      RatFunc a = arg(0), b = arg(1);
      if (b.num().is_zero()) throw SyntaxError(e.offset, "division by zero");
      return Checked(RatFunc(a.num() * b.den(), a.den() * b.num()), guard, e.offset);
    }
    case Kind::kPow: {
      RatFunc a = arg(0);
      long k = e.value;
      if (std::abs(k) * static_cast<long>(Height(a)) > guard) GuardFail(guard, e.offset);
      if (k >= 0) return RatFunc(a.num().pow(k), a.den().pow(k));
      if (a.num().is_zero()) throw SyntaxError(e.offset, "zero raised to a negative power");
      return RatFunc(a.den().pow(-k), a.num().pow(-k));
    }
    case Kind::kFamily: {
      int n = static_cast<int>(e.value);
      if (std::abs(e.value) * (e.text == "D" ? 2 : 1) > guard) GuardFail(guard, e.offset);
      if (e.text == "T") return Chebyshev(n);
      if (e.text == "D") return DMap(n);
      return PowerMap(n);
    }
    case Kind::kName: {
      if (depth >= kMaxNameDepth) throw SyntaxError(e.offset, "corpus labels nest too deeply");
      auto entry = FindCorpusEntry(e.text);
      if (!entry) throw SyntaxError(e.offset, "unknown name '" + e.text + "'");
      return Eval(ParseExpr(entry->expr), guard, depth + 1);
    }
  }
  ThrowInternal("unknown expression node");
}

int Precedence(const Expr& e) {
  switch (e.kind) {
    case Kind::kAdd:
    case Kind::kSub: return 1;
    case Kind::kMul:
    case Kind::kDiv: return 2;
    case Kind::kNeg: return 3;
    case Kind::kPow: return 4;
    default: return 5;
  }
}

void Render(const Expr& e, int min_prec, std::ostringstream& out) {
  bool paren = Precedence(e) < min_prec;
  if (paren) out << '(';
  switch (e.kind) {
    case Kind::kNumber: out << e.text; break;
    case Kind::kVar: out << 'z'; break;
    case Kind::kImag: out << 'i'; break;
    case Kind::kName: out << e.text; break;
    case Kind::kFamily: out << e.text << '(' << e.value << ')'; break;
    case Kind::kNeg:
      out << '-';
      Render(e.args[0], 3, out);
      break;
    case Kind::kPow:
      Render(e.args[0], 5, out);
      out << '^' << e.value;
      break;
    case Kind::kAdd:
    case Kind::kSub:
      Render(e.args[0], 1, out);
      out << (e.kind == Kind::kAdd ? " + " : " - ");
      Render(e.args[1], 2, out);
      break;
    case Kind::kMul:
    case Kind::kDiv:
      Render(e.args[0], 2, out);
      out << (e.kind == Kind::kMul ? '*' : '/');
      Render(e.args[1], 3, out);
      break;
  }
  if (paren) out << ')';
}

}  // namespace

Expr ParseExpr(std::string_view text) { return Parser(text).Parse(); }

std::string RenderExpr(const Expr& e) {
  std::ostringstream out;
  Render(e, 0, out);
  return out.str();
}

RatFunc EvaluateExpr(const Expr& e, int degree_guard) { return Eval(e, degree_guard, 0); }

RatFunc ParseFunction(std::string_view text, int degree_guard) {
  return EvaluateExpr(ParseExpr(text), degree_guard);
}

std::vector<CorpusEntry> ParseCorpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    CorpusEntry e;
    if (!(ls >> e.name)) continue;
    std::getline(ls, e.expr);
    auto first = e.expr.find_first_not_of(" \t");
    auto last = e.expr.find_last_not_of(" \t\r");
    if (first == std::string::npos) ThrowPrecondition("corpus entry '" + e.name + "' has no expression");
    e.expr = e.expr.substr(first, last - first + 1);
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<CorpusEntry>& BuiltinCorpus() {
  static const std::vector<CorpusEntry> corpus = ParseCorpus(BuiltinCorpusText());
  return corpus;
}

std::optional<CorpusEntry> FindCorpusEntry(std::string_view name) {
  for (const auto& e : BuiltinCorpus()) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

ExactPoint ParsePoint(std::string_view text) {
  std::string t(text);
  t.erase(0, t.find_first_not_of(" \t"));
  t.erase(t.find_last_not_of(" \t") + 1);
  if (t == "inf" || t == "infinity") return ExactPoint::Infinity();
  RatFunc v = ParseFunction(t);
  if (!v.is_constant()) ThrowPrecondition("point '" + t + "' is not a constant");
  return {false, v.num().is_zero() ? GaussianRational(0) : v.num().lead() / v.den().lead()};
}

}  // namespace rittdyn
