#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "realdim/mpoly.hpp"

namespace realdim {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                           ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

namespace parse_detail {

enum class Tok { integer, ident, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  Lexer(std::string_view src, int line) : src_(src), line_(line) {}

  Token next() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    int col = static_cast<int>(pos_) + col_base_;
    if (pos_ >= src_.size()) return {Tok::end, "", line_, col};
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return {Tok::integer, std::string(src_.substr(start, pos_ - start)), line_, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      return {Tok::ident, std::string(src_.substr(start, pos_ - start)), line_, col};
    }
    ++pos_;
    switch (c) {
      case '+':
        return {Tok::plus, "+", line_, col};
      case '-':
        return {Tok::minus, "-", line_, col};
      case '*':
        return {Tok::star, "*", line_, col};
      case '^':
        return {Tok::caret, "^", line_, col};
      case '/':
        return {Tok::slash, "/", line_, col};
      case '(':
        return {Tok::lparen, "(", line_, col};
      case ')':
        return {Tok::rparen, ")", line_, col};
      default:
        throw ParseError(line_, col, std::string("unexpected character '") + c + "'");
    }
  }

  void set_col_base(int base) { col_base_ = base; }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int line_;
  int col_base_ = 1;
};

class PolyParser {
 public:
  PolyParser(std::string_view src, RingPtr ring, int line, int col_base) : lexer_(src, line), ring_(std::move(ring)) {
    lexer_.set_col_base(col_base);
    advance();
  }

  MPoly parse() {
    MPoly p = parse_expr();
    expect(Tok::end, "end of expression");
    return p;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  void expect(Tok k, const char* what) {
    if (cur_.kind != k)
      throw ParseError(cur_.line, cur_.col, std::string("expected ") + what + ", got '" + cur_.text + "'");
  }

  MPoly parse_expr() {
    MPoly acc = parse_term();
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      bool neg = cur_.kind == Tok::minus;
      advance();
      MPoly rhs = parse_term();
      acc = neg ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  MPoly parse_term() {
    MPoly acc = parse_factor();
    while (cur_.kind == Tok::star) {
      advance();
      acc = acc * parse_factor();
    }
    return acc;
  }

  MPoly parse_factor() {
    int sign = 1;
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      if (cur_.kind == Tok::minus) sign = -sign;
      advance();
    }
    MPoly p = parse_power();
    return sign < 0 ? -p : p;
  }

  MPoly parse_power() {
    MPoly base = parse_primary();
    if (cur_.kind == Tok::caret) {
      advance();
      expect(Tok::integer, "a non-negative integer exponent");
      unsigned long e = std::stoul(cur_.text);
      advance();
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MPoly parse_primary() {
    if (cur_.kind == Tok::integer) {
      Integer num(cur_.text);
      Token num_tok = cur_;
      advance();
      if (cur_.kind == Tok::slash) {
        advance();
        if (cur_.kind != Tok::integer)
          throw ParseError(cur_.line, cur_.col, "malformed rational: expected denominator digits");
        Integer den(cur_.text);
        if (sgn(den) == 0) throw ParseError(cur_.line, cur_.col, "malformed rational: zero denominator");
        advance();
        return MPoly::constant(ring_, make_rational(num, den));
      }
      (void)num_tok;
      return MPoly::constant(ring_, Rational(num));
    }
    if (cur_.kind == Tok::ident) {
      int idx = ring_->index_of(cur_.text);
      if (idx < 0)
        throw ParseError(cur_.line, cur_.col, "undeclared variable " + cur_.text);
      advance();
      return MPoly::variable(ring_, idx);
    }
    if (cur_.kind == Tok::lparen) {
      advance();
      MPoly p = parse_expr();
      expect(Tok::rparen, "')'");
      advance();
      return p;
    }
    if (cur_.kind == Tok::slash)
      throw ParseError(cur_.line, cur_.col, "'/' is only allowed inside rational literals a/b");
    throw ParseError(cur_.line, cur_.col, "expected a number, variable, or '('");
  }

  Lexer lexer_;
  Token cur_;
  RingPtr ring_;
};

inline std::string trimmed(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace parse_detail

// Infix grammar with + - * ^, integer and a/b rational literals, and
// parentheses; implicit multiplication is a syntax error. Variables must be
// ring members.
inline MPoly parse_polynomial(std::string_view text, const RingPtr& ring, int line = 1, int col_base = 1) {
  parse_detail::PolyParser p(text, ring, line, col_base);
  return p.parse();
}

struct ProblemFile {
  std::vector<std::string> variables;
  std::vector<MPoly> polynomials;
  std::string name;  // optional metadata

  RingPtr ring() const {
    return polynomials.empty() ? make_ring(variables) : polynomials.front().ring();
  }
};

// Line-oriented problem format: '#' comment lines, one `vars:` line with
// space-separated identifiers, then one or more `NAME: EXPR` lines.
inline ProblemFile parse_problem(std::string_view text) {
  ProblemFile pf;
  RingPtr ring;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = parse_detail::trimmed(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(lineno, 1, "expected 'vars:' or 'NAME: EXPR'");
    std::string head = parse_detail::trimmed(line.substr(0, colon));
    std::string rest = line.substr(colon + 1);
    if (head == "vars") {
      if (ring) throw ParseError(lineno, 1, "duplicate vars: line");
      std::istringstream vs(rest);
      std::string v;
      while (vs >> v) {
        for (char c : v)
          if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            throw ParseError(lineno, 1, "invalid variable name " + v);
        if (std::find(pf.variables.begin(), pf.variables.end(), v) != pf.variables.end())
          throw ParseError(lineno, 1, "duplicate variable " + v);
        pf.variables.push_back(v);
      }
      if (pf.variables.empty()) throw ParseError(lineno, 1, "vars: line declares no variables");
      ring = make_ring(pf.variables);
      continue;
    }
    if (!ring) throw ParseError(lineno, 1, "polynomial line before vars: line");
    int col_base = static_cast<int>(colon) + 2;
    pf.polynomials.push_back(parse_polynomial(rest, ring, lineno, col_base));
  }
  if (!ring) throw ParseError(lineno ? lineno : 1, 1, "missing vars: line");
  if (pf.polynomials.empty()) throw ParseError(lineno, 1, "empty system: no polynomial lines");
  return pf;
}

inline std::string print_problem(const ProblemFile& pf) {
  std::ostringstream out;
  if (!pf.name.empty()) out << "# " << pf.name << "\n";
  out << "vars:";
  for (const auto& v : pf.variables) out << " " << v;
  out << "\n";
  for (std::size_t i = 0; i < pf.polynomials.size(); ++i)
    out << "f" << (i + 1) << ": " << pf.polynomials[i].to_string() << "\n";
  return out.str();
}

}  // namespace realdim
