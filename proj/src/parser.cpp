#include "taylor/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace taylor {

namespace {

enum class Tok { Num, Var, Func, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line_, column_});
        return out;
      }
      const std::size_t line = line_;
      const std::size_t column = column_;
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        out.push_back({Tok::Num, number(), line, column});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string word;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
          word += text_[pos_];
          advance();
        }
        out.push_back(classify(word, line, column));
        continue;
      }
      Tok kind;
      switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", line, column);
      }
      advance();
      out.push_back({kind, std::string(1, c), line, column});
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool digit_here() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  std::string number() {
    const std::size_t line = line_;
    const std::size_t column = column_;
    std::string s;
    bool digits = false;
    while (digit_here()) { s += text_[pos_]; advance(); digits = true; }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      s += '.';
      advance();
      while (digit_here()) { s += text_[pos_]; advance(); digits = true; }
    }
    if (!digits) throw ParseError("malformed number", line, column);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      const std::size_t save_pos = pos_;
      const std::size_t save_col = column_;
      std::string exponent(1, text_[pos_]);
      advance();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        exponent += text_[pos_];
        advance();
      }
      if (!digit_here()) {
        pos_ = save_pos;
        column_ = save_col;
      } else {
        while (digit_here()) { exponent += text_[pos_]; advance(); }
        s += exponent;
      }
    }
    return s;
  }

  static Token classify(const std::string& word, std::size_t line, std::size_t column) {
    if (word == "sin" || word == "cos" || word == "exp" || word == "ln") return {Tok::Func, word, line, column};
    if (word.size() >= 2 && word[0] == 'x') {
      bool all_digits = true;
      for (std::size_t i = 1; i < word.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(word[i]))) all_digits = false;
      }
      if (all_digits) return {Tok::Var, word.substr(1), line, column};
    }
    throw ParseError("unknown identifier '" + word + "'", line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::vector<Expr> top() {
    std::vector<Expr> out;
    if (peek().kind == Tok::LParen && is_tuple()) {
      next();
      out.push_back(expr());
      while (peek().kind == Tok::Comma) {
        next();
        out.push_back(expr());
      }
      expect(Tok::RParen, "')'");
    } else {
      out.push_back(expr());
    }
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    if (t.kind == Tok::End) throw ParseError(message + " at end of input", t.line, t.column);
    throw ParseError(message, t.line, t.column);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    next();
  }

  // True when the parenthesis at the cursor encloses a comma at depth one
  // and closes the whole input.
  bool is_tuple() const {
    int depth = 0;
    bool comma = false;
    for (std::size_t i = pos_; i < tokens_.size(); ++i) {
      const Tok k = tokens_[i].kind;
      if (k == Tok::LParen) ++depth;
      if (k == Tok::RParen && --depth == 0) return comma && tokens_[i + 1].kind == Tok::End;
      if (k == Tok::Comma && depth == 1) comma = true;
    }
    return false;
  }

  Expr expr() {
    Expr e = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool plus = next().kind == Tok::Plus;
      Expr rhs = term();
      e = plus ? e + rhs : e - rhs;
    }
    return e;
  }

  Expr term() {
    Expr e = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = next();
      Expr rhs = factor();
      if (op.kind == Tok::Star) {
        e = e * rhs;
      } else {
        if (rhs.is_zero()) throw ParseError("division by the constant zero", op.line, op.column);
        e = e / rhs;
      }
    }
    return e;
  }

  Expr factor() {
    if (peek().kind == Tok::Minus) {
      next();
      return -factor();
    }
    Expr base = atom();
    if (peek().kind == Tok::Caret) {
      next();
      if (peek().kind != Tok::Num) fail("expected a natural exponent");
      const Token& t = next();
      unsigned long k = 0;
      for (char c : t.text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw ParseError("exponent must be a natural number", t.line, t.column);
        }
        k = k * 10 + static_cast<unsigned long>(c - '0');
        if (k > 1000000) throw ParseError("exponent too large", t.line, t.column);
      }
      return pow(base, static_cast<unsigned>(k));
    }
    return base;
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Num:
        next();
        return Expr::constant(Rational::parse(t.text));
      case Tok::Var: {
        next();
        if (t.text.size() > 9) throw ParseError("variable index too large", t.line, t.column);
        return Expr::var(std::stoul(t.text));
      }
      case Tok::Func: {
        const std::string name = next().text;
        expect(Tok::LParen, "'(' after function name");
        Expr arg = expr();
        expect(Tok::RParen, "')'");
        if (name == "sin") return sin(arg);
        if (name == "cos") return cos(arg);
        if (name == "exp") return exp(arg);
        return ln(arg);
      }
      case Tok::LParen: {
        next();
        Expr inner = expr();
        if (peek().kind == Tok::Comma) fail("tuples are only allowed at top level");
        expect(Tok::RParen, "')'");
        return inner;
      }
      default: fail(t.kind == Tok::End ? "expected an operand" : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

SmoothMap parse_map(std::string_view text, std::optional<std::size_t> arity) {
  std::vector<Expr> body = Parser(Lexer(text).run()).top();
  std::size_t bound = 0;
  for (const Expr& e : body) bound = std::max(bound, variable_bound(e));
  if (arity && bound > *arity) {
    throw ParseError("variable x" + std::to_string(bound - 1) + " exceeds declared arity " +
                         std::to_string(*arity),
                     1, 1);
  }
  return SmoothMap(arity.value_or(bound), std::move(body));
}

Expr parse_expr(std::string_view text) {
  SmoothMap m = parse_map(text);
  if (m.coarity() != 1) throw ParseError("expected a single expression, got a tuple", 1, 1);
  return m[0];
}

}  // namespace taylor
