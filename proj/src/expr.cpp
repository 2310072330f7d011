#include "mutalg/expr.hpp"

#include <cctype>
#include <limits>

#include "mutalg/error.hpp"

namespace mutalg {

namespace {

enum class TokenKind { Number, Identifier, Symbol, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t offset;  // 1-based
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      tokens.push_back({TokenKind::Number, std::string(text.substr(start, i - start)), start + 1});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      tokens.push_back({TokenKind::Identifier, std::string(text.substr(start, i - start)), start + 1});
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      tokens.push_back({TokenKind::Symbol, std::string(1, c), start + 1});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start + 1);
    }
  }
  tokens.push_back({TokenKind::End, "", text.size() + 1});
  return tokens;
}

class Parser {
 public:
  Parser(std::string_view text, const VariableContext& ctx) : tokens_(tokenize(text)), ctx_(ctx) {}

  RationalFunction parse() {
    RationalFunction value = expression();
    if (peek().kind != TokenKind::End) throw ParseError("unexpected '" + peek().text + "'", peek().offset);
    return value;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_symbol(char c) const { return peek().kind == TokenKind::Symbol && peek().text[0] == c; }
  const Token& advance() { return tokens_[pos_++]; }

  void expect_symbol(char c) {
    if (!at_symbol(c)) throw ParseError(std::string("expected '") + c + "'", peek().offset);
    advance();
  }

  RationalFunction expression() {
    RationalFunction value = term();
    while (at_symbol('+') || at_symbol('-')) {
      bool plus = advance().text[0] == '+';
      RationalFunction rhs = term();
      value = plus ? value + rhs : value - rhs;
    }
    return value;
  }

  RationalFunction term() {
    RationalFunction value = unary();
    while (at_symbol('*') || at_symbol('/')) {
      const Token& op = advance();
      std::size_t offset = peek().offset;
      RationalFunction rhs = unary();
      if (op.text[0] == '*') {
        value = value * rhs;
      } else {
        if (rhs.is_zero()) throw ParseError("division by zero", offset);
        value = value / rhs;
      }
    }
    return value;
  }

  RationalFunction unary() {
    if (at_symbol('-')) {
      advance();
      return -unary();
    }
    if (at_symbol('+')) {
      advance();
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    std::size_t offset = peek().offset;
    RationalFunction base = primary();
    if (!at_symbol('^')) return base;
    advance();
    long n = exponent();
    if (n < 0 && base.is_zero()) throw ParseError("negative power of zero", offset);
    return base.pow(n);
  }

  long exponent() {
    bool negative = false;
    bool parenthesized = false;
    if (at_symbol('(')) {
      advance();
      parenthesized = true;
      if (at_symbol('-') || at_symbol('+')) negative = advance().text[0] == '-';
    }
    if (peek().kind != TokenKind::Number) throw ParseError("expected integer exponent", peek().offset);
    const Token& tok = advance();
    mpz_class value(tok.text);
    if (value > std::numeric_limits<int>::max()) throw ParseError("exponent too large", tok.offset);
    long n = value.get_si();
    if (parenthesized) expect_symbol(')');
    return negative ? -n : n;
  }

  RationalFunction primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::Number:
        advance();
        return RationalFunction(LaurentPolynomial::constant(ctx_, Rational(mpz_class(tok.text))));
      case TokenKind::Identifier: {
        advance();
        auto index = ctx_.index_of(tok.text);
        if (!index) throw ParseError("unknown variable '" + tok.text + "'", tok.offset);
        return RationalFunction(LaurentPolynomial::variable(ctx_, *index));
      }
      case TokenKind::Symbol:
        if (tok.text[0] == '(') {
          advance();
          RationalFunction inner = expression();
          expect_symbol(')');
          return inner;
        }
        break;
      case TokenKind::End:
        break;
    }
    throw ParseError("expected a number, variable or '('", tok.offset);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const VariableContext& ctx_;
};

}  // namespace

RationalFunction parse_expr(std::string_view text, const VariableContext& ctx) {
  return Parser(text, ctx).parse();
}

LaurentPolynomial parse_laurent(std::string_view text, const VariableContext& ctx) {
  auto value = parse_expr(text, ctx).as_laurent();
  if (!value) throw Error("expression '" + std::string(text) + "' is not a Laurent polynomial");
  return *value;
}

std::string format_expr(const RationalFunction& f) { return to_string(f); }

std::string format_expr(const LaurentPolynomial& f) { return to_string(f); }

}  // namespace mutalg
