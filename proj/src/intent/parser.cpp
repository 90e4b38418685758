// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/intent/parser.hpp"

#include <array>
#include <algorithm>

#include "fast/csv.hpp"
#include "fast/errors.hpp"
#include "fast/intent/lexer.hpp"
#include "fast/numfmt.hpp"

namespace fast {

namespace {

constexpr std::array kKeywords = {"intent", "min",       "max", "such", "that", "measures",
                                  "knobs",  "reference", "and", "or",   "not"};

bool isKeyword(std::string_view s) {
  return std::find(kKeywords.begin(), kKeywords.end(), s) != kKeywords.end();
}

std::string quote(std::string_view s) { return "'" + std::string(s) + "'"; }

class Parser {
 public:
  explicit Parser(std::string_view source) : tokens_(tokenize(source)) {}

  IntentSpec intent() {
    IntentSpec spec;
    expectKeyword("intent");
    spec.name = name("intent name");
    if (atKeyword("min")) {
      spec.optimization = OptimizationType::Min;
    } else if (atKeyword("max")) {
      spec.optimization = OptimizationType::Max;
    } else {
      fail({quote("min"), quote("max")});
    }
    ++pos_;
    expect(TokenKind::LParen);
    identifierKind_ = Expr::Kind::MeasureRef;
    spec.objective = expression();
    expect(TokenKind::RParen);

    std::vector<std::string> beforeMeasures = {quote("such")};
    if (atKeyword("such")) {
      ++pos_;
      expectKeyword("that");
      spec.constraintMeasure = name("measure name");
      expect(TokenKind::EqualEqual);
      spec.constraintGoal = signedNumber();
      beforeMeasures.clear();
    }

    expectKeyword("measures", std::move(beforeMeasures));
    do {
      MeasureDecl m;
      m.name = name("measure name");
      expect(TokenKind::Colon);
      m.typeName = name("type name");
      spec.measures.push_back(std::move(m));
    } while (!atKeyword("knobs") && at(TokenKind::Identifier) && !isKeyword(peek().text));

    expectKeyword("knobs", {"measure name"});
    do {
      KnobDecl k;
      k.name = name("knob name");
      expect(TokenKind::Assign);
      expect(TokenKind::LBracket);
      k.range.push_back(signedNumber());
      while (at(TokenKind::Comma)) {
        ++pos_;
        k.range.push_back(signedNumber());
      }
      expect(TokenKind::RBracket);
      if (atKeyword("reference")) {
        ++pos_;
        k.reference = signedNumber();
      }
      spec.knobs.push_back(std::move(k));
    } while (at(TokenKind::Identifier) && !isKeyword(peek().text));

    if (atKeyword("such")) {
      ++pos_;
      expectKeyword("that");
      identifierKind_ = Expr::Kind::KnobRef;
      spec.knobConstraint = expression();
    }
    if (!at(TokenKind::End)) {
      fail({"knob name", quote("such"), std::string(describe(TokenKind::End))});
    }
    validateIntent(spec);
    return spec;
  }

  Expr standaloneObjective() {
    identifierKind_ = Expr::Kind::MeasureRef;
    Expr e = expression();
    if (!at(TokenKind::End)) fail({std::string(describe(TokenKind::End))});
    return e;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return tokens_[std::min(pos_ + k, tokens_.size() - 1)]; }
  bool at(TokenKind k) const { return peek().kind == k; }
  bool atKeyword(std::string_view kw) const { return at(TokenKind::Identifier) && peek().text == kw; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End ? std::string(describe(TokenKind::End)) : quote(t.text);
    throw SyntaxError(t.pos, std::move(expected), std::move(found));
  }

  void expect(TokenKind k) {
    if (!at(k)) fail({std::string(describe(k))});
    ++pos_;
  }

  void expectKeyword(std::string_view kw, std::vector<std::string> alternatives = {}) {
    if (!atKeyword(kw)) {
      alternatives.insert(alternatives.begin(), quote(kw));
      fail(std::move(alternatives));
    }
    ++pos_;
  }

  std::string name(std::string_view what) {
    if (!at(TokenKind::Identifier) || isKeyword(peek().text)) fail({std::string(what)});
    return tokens_[pos_++].text;
  }

  Number literal() {
    if (!at(TokenKind::Number)) fail({"number"});
    const Token& t = tokens_[pos_++];
    auto v = parseDouble(t.text);
    if (!v) throw SyntaxError(t.pos, {"number"}, quote(t.text));
    const bool integral = t.text.find_first_of(".eE") == std::string::npos;
    return Number{*v, integral};
  }

  Number signedNumber() {
    if (at(TokenKind::Minus)) {
      ++pos_;
      Number n = literal();
      n.value = -n.value;
      return n;
    }
    return literal();
  }

  // or < and < not < comparison < additive < multiplicative < unary minus
  Expr expression() { return disjunction(); }

  Expr disjunction() {
    Expr lhs = conjunction();
    while (at(TokenKind::OrOr) || atKeyword("or")) {
      ++pos_;
      lhs = Expr::apply(Op::Or, {std::move(lhs), conjunction()});
    }
    return lhs;
  }

  Expr conjunction() {
    Expr lhs = negation();
    while (at(TokenKind::AndAnd) || atKeyword("and")) {
      ++pos_;
      lhs = Expr::apply(Op::And, {std::move(lhs), negation()});
    }
    return lhs;
  }

  Expr negation() {
    if (at(TokenKind::Bang) || atKeyword("not")) {
      ++pos_;
      return Expr::apply(Op::Not, {negation()});
    }
    return comparison();
  }

  Expr comparison() {
    Expr lhs = additive();
    Op op;
    switch (peek().kind) {
      case TokenKind::Less: op = Op::Lt; break;
      case TokenKind::LessEqual: op = Op::Le; break;
      case TokenKind::Greater: op = Op::Gt; break;
      case TokenKind::GreaterEqual: op = Op::Ge; break;
      case TokenKind::EqualEqual: op = Op::Eq; break;
      case TokenKind::NotEqual: op = Op::Ne; break;
      default: return lhs;
    }
    ++pos_;
    return Expr::apply(op, {std::move(lhs), additive()});
  }

  Expr additive() {
    Expr lhs = multiplicative();
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      const Op op = at(TokenKind::Plus) ? Op::Add : Op::Sub;
      ++pos_;
      lhs = Expr::apply(op, {std::move(lhs), multiplicative()});
    }
    return lhs;
  }

  Expr multiplicative() {
    Expr lhs = unary();
    while (at(TokenKind::Star) || at(TokenKind::Slash)) {
      const Op op = at(TokenKind::Star) ? Op::Mul : Op::Div;
      ++pos_;
      lhs = Expr::apply(op, {std::move(lhs), unary()});
    }
    return lhs;
  }

  Expr unary() {
    if (at(TokenKind::Minus)) {
      // A minus directly in front of a literal is part of the literal.
      if (peek(1).kind == TokenKind::Number) return Expr::number(signedNumber());
      ++pos_;
      return Expr::apply(Op::Neg, {unary()});
    }
    return primary();
  }

  Expr primary() {
    if (at(TokenKind::Number)) return Expr::number(literal());
    if (at(TokenKind::LParen)) {
      ++pos_;
      Expr inner = expression();
      expect(TokenKind::RParen);
      return inner;
    }
    if (at(TokenKind::Identifier) && !isKeyword(peek().text)) {
      const Token& t = tokens_[pos_++];
      if (at(TokenKind::LParen)) throw ValidationError("unknown function '" + t.text + "'");
      Expr e;
      e.kind = identifierKind_;
      e.name = t.text;
      return e;
    }
    fail({"number", "identifier", std::string(describe(TokenKind::LParen)), std::string(describe(TokenKind::Minus))});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Expr::Kind identifierKind_ = Expr::Kind::MeasureRef;
};

}  // namespace

IntentSpec parseIntent(std::string_view source) { return Parser(source).intent(); }

IntentSpec loadIntentFile(const std::filesystem::path& path) { return parseIntent(readTextFile(path)); }

Expr parseObjectiveExpression(std::string_view source) { return Parser(source).standaloneObjective(); }

}  // namespace fast
