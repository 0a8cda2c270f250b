#include <sstream>

#include "ctcg/control_expr.hpp"

namespace ctcg {

namespace {

struct Token {
  enum Type { name, literal, lbrack, rbrack, lparen, rparen, star, bar, end } type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip();
      Token t{Token::end, {}, line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      switch (c) {
        case '[': t.type = Token::lbrack; advance(); break;
        case ']': t.type = Token::rbrack; advance(); break;
        case '(': t.type = Token::lparen; advance(); break;
        case ')': t.type = Token::rparen; advance(); break;
        case '*': t.type = Token::star; advance(); break;
        case '|': t.type = Token::bar; advance(); break;
        case '"': {
          advance();
          t.type = Token::literal;
          while (pos_ < text_.size() && text_[pos_] != '"') {
            t.text += text_[pos_];
            advance();
          }
          if (pos_ >= text_.size()) throw ParseError(t.line, t.column, "unterminated word literal");
          advance();
          break;
        }
        default:
          t.type = Token::name;
          while (pos_ < text_.size() && !special(text_[pos_])) {
            t.text += text_[pos_];
            advance();
          }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  static bool space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
  static bool special(char c) { return space(c) || std::string_view("[]()*\"#|").find(c) != std::string_view::npos; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      if (space(text_[pos_])) {
        advance();
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::vector<ControlExpr> alternatives() {
    std::vector<ControlExpr> out{sequence()};
    while (peek().type == Token::bar) {
      ++pos_;
      out.push_back(sequence());
    }
    if (peek().type != Token::end) fail(peek(), "unexpected " + describe(peek()));
    return out;
  }

 private:
  [[noreturn]] static void fail(const Token& t, const std::string& message) {
    throw ParseError(t.line, t.column, message);
  }

  static std::string describe(const Token& t) {
    switch (t.type) {
      case Token::name: return "'" + t.text + "'";
      case Token::literal: return "word literal";
      case Token::lbrack: return "'['";
      case Token::rbrack: return "']'";
      case Token::lparen: return "'('";
      case Token::rparen: return "')'";
      case Token::star: return "'*'";
      case Token::bar: return "'|'";
      case Token::end: return "end of input";
    }
    return "token";
  }

  const Token& peek() const { return tokens_[pos_]; }

  static Symbol symbol(const Token& t) {
    if (!valid_symbol_name(t.text)) fail(t, "invalid symbol name '" + t.text + "'");
    return Symbol::named(t.text);
  }

  static bool starts_atom(const Token& t) {
    return t.type == Token::name || t.type == Token::literal || t.type == Token::lbrack ||
           t.type == Token::lparen;
  }

  ControlExpr sequence() {
    if (!starts_atom(peek())) fail(peek(), "expected an expression, found " + describe(peek()));
    std::vector<ControlExpr> factors;
    while (starts_atom(peek())) {
      const Token& t = peek();
      if (t.type == Token::literal) {
        ++pos_;
        Word w = parse_word(t.text);
        if (w.empty()) fail(t, "empty word literal");
        for (Symbol s : w)
          if (!valid_symbol_name(s.name())) fail(t, "invalid symbol name '" + s.name() + "'");
        if (peek().type == Token::star) {
          factors.push_back(postfix(ControlExpr::word(w)));
        } else {
          for (Symbol s : w) factors.push_back(ControlExpr::symbol(s));
        }
        continue;
      }
      factors.push_back(postfix(atom()));
    }
    return ControlExpr::sequence(factors);
  }

  ControlExpr postfix(ControlExpr e) {
    while (peek().type == Token::star) {
      ++pos_;
      e = ControlExpr::star(std::move(e));
    }
    return e;
  }

  ControlExpr atom() {
    const Token& t = tokens_[pos_++];
    switch (t.type) {
      case Token::name:
        if (t.text == "eps") return ControlExpr::epsilon();
        if (t.text == "empty") return ControlExpr::empty();
        return ControlExpr::symbol(symbol(t));
      case Token::lbrack: {
        SymbolSet set;
        while (peek().type == Token::name) set.insert(symbol(tokens_[pos_++]));
        if (peek().type != Token::rbrack) fail(peek(), "expected a symbol or ']', found " + describe(peek()));
        if (set.empty()) fail(peek(), "empty symbol set");
        ++pos_;
        return ControlExpr::symbols(std::move(set));
      }
      case Token::lparen: {
        ControlExpr inner = sequence();
        if (peek().type == Token::bar)
          fail(peek(), "'|' is only allowed between top-level alternatives");
        if (peek().type != Token::rparen) fail(peek(), "expected ')', found " + describe(peek()));
        ++pos_;
        return inner;
      }
      default: fail(t, "unexpected " + describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

bool atomic(const ControlExpr& e) { return e.kind() != ControlExpr::Kind::concat; }

void print(const ControlExpr& e, std::ostringstream& out) {
  switch (e.kind()) {
    case ControlExpr::Kind::empty: out << "empty"; return;
    case ControlExpr::Kind::epsilon: out << "eps"; return;
    case ControlExpr::Kind::symbols: {
      const auto& set = e.symbol_set();
      if (set.size() == 1) {
        out << set.begin()->name();
        return;
      }
      out << '[';
      bool first = true;
      for (Symbol s : sorted_by_name(set)) {
        if (!first) out << ' ';
        first = false;
        out << s.name();
      }
      out << ']';
      return;
    }
    case ControlExpr::Kind::star:
      if (atomic(e.inner())) {
        print(e.inner(), out);
      } else {
        out << '(';
        print(e.inner(), out);
        out << ')';
      }
      out << '*';
      return;
    case ControlExpr::Kind::concat:
      if (atomic(e.left())) {
        print(e.left(), out);
      } else {
        out << '(';
        print(e.left(), out);
        out << ')';
      }
      out << ' ';
      print(e.right(), out);
      return;
  }
}

}  // namespace

ControlExpr parse_expr(std::string_view text) {
  Parser p(Lexer(text).run());
  auto alts = p.alternatives();
  if (alts.size() != 1) throw ParseError(1, 1, "union is not part of the expression syntax");
  return alts.front();
}

std::string format_expr(const ControlExpr& e) {
  std::ostringstream out;
  print(e, out);
  return out.str();
}

ControlLanguage parse_control(std::string_view text) {
  Parser p(Lexer(text).run());
  return ControlLanguage(p.alternatives());
}

ControlLanguage load_control(const std::filesystem::path& path) {
  return parse_control(read_text_file(path));
}

std::string format_control(const ControlLanguage& c) {
  std::string out;
  for (std::size_t i = 0; i < c.alternatives.size(); ++i) {
    if (i) out += " | ";
    out += format_expr(c.alternatives[i]);
  }
  return out;
}

}  // namespace ctcg
