#include "ptl/parser.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "ptl/errors.hpp"

namespace ptl {

namespace {

enum class Tok { Atom, T, F, Not, And, Or, Implies, Iff, Typ, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      int line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      out.push_back(next_token(line, col));
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
  }

  bool take(std::string_view s) {
    if (text_.substr(pos_).substr(0, s.size()) != s) return false;
    pos_ += s.size();
    ++col_;  // every alias counts as one column regardless of byte length
    return true;
  }

  Token next_token(int line, int col) {
    char c = text_[pos_];
    if (c == '(') return advance({Tok::LParen, "(", line, col});
    if (c == ')') return advance({Tok::RParen, ")", line, col});
    if (c == '!') return advance({Tok::Not, "!", line, col});
    if (c == '&') return advance({Tok::And, "&", line, col});
    if (c == '|') return advance({Tok::Or, "|", line, col});
    if (c == '*') return advance({Tok::Typ, "*", line, col});
    if (c == 'T') return advance({Tok::T, "T", line, col});
    if (c == 'F') return advance({Tok::F, "F", line, col});
    if (c == '<') {
      if (take("<->")) return {Tok::Iff, "<->", line, col};
      throw ParseError("unknown token starting with '<'", line, col);
    }
    if (c == '-') {
      if (take("->")) return {Tok::Implies, "->", line, col};
      throw ParseError("unknown token starting with '-'", line, col);
    }
    // unicode aliases
    if (take("¬")) return {Tok::Not, "!", line, col};        // ¬
    if (take("∧")) return {Tok::And, "&", line, col};        // ∧
    if (take("∨")) return {Tok::Or, "|", line, col};         // ∨
    if (take("→")) return {Tok::Implies, "->", line, col};   // →
    if (take("↔")) return {Tok::Iff, "<->", line, col};      // ↔
    if (take("•")) return {Tok::Typ, "*", line, col};        // •
    if (take("⊤")) return {Tok::T, "T", line, col};          // ⊤
    if (take("⊥")) return {Tok::F, "F", line, col};          // ⊥
    if (c >= 'a' && c <= 'z') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
              (text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      return {Tok::Atom, std::string(text_.substr(start, pos_ - start)), line, col};
    }
    throw ParseError("unknown token '" + printable(c) + "'", line, col);
  }

  Token advance(Token t) {
    ++pos_;
    ++col_;
    return t;
  }

  static std::string printable(char c) {
    if (static_cast<unsigned char>(c) >= 0x20 && static_cast<unsigned char>(c) < 0x7f)
      return std::string(1, c);
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\x%02x", static_cast<unsigned char>(c));
    return buf;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = parse_iff();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  Token pop() { return tokens_[pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  void expect(Tok kind, const char* what) {
    if (!accept(kind))
      throw ParseError(std::string("expected ") + what + ", got '" + peek().text + "'",
                       peek().line, peek().col);
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (accept(Tok::Iff)) f = iff(f, parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (accept(Tok::Implies)) return implies(f, parse_imp());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::Or)) f = disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Tok::And)) f = conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
        pop();
        return neg(parse_unary());
      case Tok::Typ:
        pop();
        return typ(parse_unary());
      case Tok::Atom:
        return atom(pop().text);
      case Tok::T:
        pop();
        return top();
      case Tok::F:
        pop();
        return bot();
      case Tok::LParen: {
        pop();
        Formula f = parse_iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        throw ParseError("expected a formula, got '" +
                             (t.kind == Tok::End ? std::string("end of input") : t.text) + "'",
                         t.line, t.col);
    }
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

}  // namespace ptl
