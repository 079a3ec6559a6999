#include <cctype>
#include <string>

#include "potmono/errors.hpp"
#include "potmono/presentation.hpp"

namespace potmono::presentation {
namespace {

// Nesting limit for inverse/compose.
constexpr int kMaxDepth = 200;

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token tok{Tok::End, "", line_, column_};
    if (pos_ >= text_.size()) return tok;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok.kind = Tok::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        tok.text += advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok.kind = Tok::Number;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        tok.text += advance();
      }
    } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      tok.kind = Tok::Punct;
      tok.text = "->";
      advance();
      advance();
    } else {
      tok.kind = Tok::Punct;
      tok.text = std::string(1, advance());
    }
    return tok;
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
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

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Number:
      return "number '" + tok.text + "'";
    case Tok::Ident:
      return "'" + tok.text + "'";
    case Tok::Punct:
      break;
  }
  unsigned char c = static_cast<unsigned char>(tok.text[0]);
  if (tok.text.size() == 1 && !std::isprint(c)) {
    static const char* hex = "0123456789abcdef";
    return std::string("byte 0x") + hex[c >> 4] + hex[c & 0xf];
  }
  return "'" + tok.text + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { current_ = lexer_.next(); }

  ExprPtr parse_document() {
    ExprPtr expr = parse_spec(0);
    if (current_.kind != Tok::End) fail("end of input");
    return expr;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(current_.line, current_.column, expected, describe(current_));
  }

  void advance() { current_ = lexer_.next(); }

  bool at_punct(std::string_view p) const { return current_.kind == Tok::Punct && current_.text == p; }

  void expect_punct(std::string_view p) {
    if (!at_punct(p)) fail("'" + std::string(p) + "'");
    advance();
  }

  void expect_ident(std::string_view word) {
    if (current_.kind != Tok::Ident || current_.text != word) fail("'" + std::string(word) + "'");
    advance();
  }

  Integer parse_int() {
    bool negative = false;
    if (at_punct("-")) {
      negative = true;
      advance();
    }
    if (current_.kind != Tok::Number) fail("integer");
    Integer value = *parse_integer(current_.text);
    advance();
    return negative ? Integer(-value) : value;
  }

  ExprPtr parse_spec(int depth) {
    if (depth > kMaxDepth) fail("at most " + std::to_string(kMaxDepth) + " levels of nesting");
    if (current_.kind != Tok::Ident) fail("'map', 'paired_shift', 'paired_shift_inv', 'inverse' or 'compose'");
    const std::string word = current_.text;
    if (word == "map") return parse_map();
    if (word == "paired_shift" || word == "paired_shift_inv") {
      advance();
      return std::make_shared<BijectionExpr>(
          BijectionExpr{PairedShiftPresentation{word == "paired_shift" ? 1 : -1}});
    }
    if (word == "inverse") {
      advance();
      expect_punct("(");
      ExprPtr operand = parse_spec(depth + 1);
      expect_punct(")");
      return std::make_shared<BijectionExpr>(BijectionExpr{InverseNode{std::move(operand)}});
    }
    if (word == "compose") {
      advance();
      expect_punct("(");
      ExprPtr outer = parse_spec(depth + 1);
      expect_punct(",");
      ExprPtr inner = parse_spec(depth + 1);
      expect_punct(")");
      return std::make_shared<BijectionExpr>(
          BijectionExpr{ComposeNode{std::move(outer), std::move(inner)}});
    }
    fail("'map', 'paired_shift', 'paired_shift_inv', 'inverse' or 'compose'");
  }

  ExprPtr parse_map() {
    expect_ident("map");
    expect_punct("{");
    MapAtom atom;
    expect_ident("tail");
    expect_punct("+");
    expect_punct("=");
    atom.tail_up = parse_int();
    expect_punct(";");
    expect_ident("tail");
    expect_punct("-");
    expect_punct("=");
    atom.tail_down = parse_int();
    expect_punct(";");
    expect_ident("patch");
    expect_punct("{");
    if (!at_punct("}")) {
      while (true) {
        Integer key = parse_int();
        expect_punct("->");
        Integer value = parse_int();
        atom.entries.emplace_back(std::move(key), std::move(value));
        if (!at_punct(",")) break;
        advance();
      }
    }
    expect_punct("}");
    expect_punct("}");
    return std::make_shared<BijectionExpr>(BijectionExpr{std::move(atom)});
  }

  Lexer lexer_;
  Token current_;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_document(); }

}  // namespace potmono::presentation
