// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/intent/lexer.hpp"

#include <cctype>

namespace fast {

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Comma: return "','";
    case TokenKind::Colon: return "':'";
    case TokenKind::Assign: return "'='";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Less: return "'<'";
    case TokenKind::LessEqual: return "'<='";
    case TokenKind::Greater: return "'>'";
    case TokenKind::GreaterEqual: return "'>='";
    case TokenKind::EqualEqual: return "'=='";
    case TokenKind::NotEqual: return "'!='";
    case TokenKind::AndAnd: return "'&&'";
    case TokenKind::OrOr: return "'||'";
    case TokenKind::Bang: return "'!'";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skipTrivia();
      Token t;
      t.pos = pos_;
      if (atEnd()) {
        t.kind = TokenKind::End;
        out.push_back(std::move(t));
        return out;
      }
      const char c = peek();
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = TokenKind::Identifier;
        while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && std::isdigit(static_cast<unsigned char>(peekAt(1))))) {
        t.kind = TokenKind::Number;
        lexNumber(t.text);
      } else {
        t.kind = punct(t.text);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  bool atEnd() const { return pos_.offset >= src_.size(); }
  char peek() const { return src_[pos_.offset]; }
  char peekAt(std::size_t k) const { return pos_.offset + k < src_.size() ? src_[pos_.offset + k] : '\0'; }

  char advance() {
    const char c = src_[pos_.offset++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  void skipTrivia() {
    while (!atEnd()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peekAt(1) == '/') {
        while (!atEnd() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  void digits(std::string& out) {
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) out += advance();
  }

  void lexNumber(std::string& out) {
    digits(out);
    if (!atEnd() && peek() == '.' && std::isdigit(static_cast<unsigned char>(peekAt(1)))) {
      out += advance();
      digits(out);
    }
    if (!atEnd() && (peek() == 'e' || peek() == 'E')) {
      const char sign = peekAt(1);
      const bool signed_ = sign == '+' || sign == '-';
      if (std::isdigit(static_cast<unsigned char>(peekAt(signed_ ? 2 : 1)))) {
        out += advance();
        if (signed_) out += advance();
        digits(out);
      }
    }
  }

  TokenKind punct(std::string& text) {
    const char c = advance();
    text = std::string(1, c);
    auto two = [&](char next, TokenKind yes, TokenKind no) {
      if (!atEnd() && peek() == next) {
        text += advance();
        return yes;
      }
      return no;
    };
    switch (c) {
      case '(': return TokenKind::LParen;
      case ')': return TokenKind::RParen;
      case '[': return TokenKind::LBracket;
      case ']': return TokenKind::RBracket;
      case ',': return TokenKind::Comma;
      case ':': return TokenKind::Colon;
      case '+': return TokenKind::Plus;
      case '-': return TokenKind::Minus;
      case '*': return TokenKind::Star;
      case '/': return TokenKind::Slash;
      case '<': return two('=', TokenKind::LessEqual, TokenKind::Less);
      case '>': return two('=', TokenKind::GreaterEqual, TokenKind::Greater);
      case '=': return two('=', TokenKind::EqualEqual, TokenKind::Assign);
      case '!': return two('=', TokenKind::NotEqual, TokenKind::Bang);
      case '&':
        if (!atEnd() && peek() == '&') {
          text += advance();
          return TokenKind::AndAnd;
        }
        break;
      case '|':
        if (!atEnd() && peek() == '|') {
          text += advance();
          return TokenKind::OrOr;
        }
        break;
      default: break;
    }
    SourcePosition at = pos_;
    at.offset -= 1;
    at.column -= 1;
    throw SyntaxError(at, {"token"}, "unexpected character '" + text + "'");
  }

  std::string_view src_;
  SourcePosition pos_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace fast
