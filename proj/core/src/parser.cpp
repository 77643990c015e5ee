#include "bluescheme/parser.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bluescheme {
namespace {

enum class TokenKind {
  kIdent,
  kNumber,
  kLBrace,
  kRBrace,
  kSemicolon,
  kColon,
  kStar,
  kPlus,
  kCaret,
  kEquals,  // ==
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    const std::size_t line = line_;
    const std::size_t column = column_;
    if (pos_ >= text_.size()) return {TokenKind::kEnd, "", line, column};

    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
        word.push_back(text_[pos_]);
        advance();
      }
      return {TokenKind::kIdent, std::move(word), line, column};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits.push_back(text_[pos_]);
        advance();
      }
      return {TokenKind::kNumber, std::move(digits), line, column};
    }
    switch (c) {
      case '{':
        advance();
        return {TokenKind::kLBrace, "{", line, column};
      case '}':
        advance();
        return {TokenKind::kRBrace, "}", line, column};
      case ';':
        advance();
        return {TokenKind::kSemicolon, ";", line, column};
      case ':':
        advance();
        return {TokenKind::kColon, ":", line, column};
      case '*':
        advance();
        return {TokenKind::kStar, "*", line, column};
      case '+':
        advance();
        return {TokenKind::kPlus, "+", line, column};
      case '^':
        advance();
        return {TokenKind::kCaret, "^", line, column};
      case '=':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
          advance();
          advance();
          return {TokenKind::kEquals, "==", line, column};
        }
        throw ParseError(line, column, "expected '=='");
      default:
        throw ParseError(line, column,
                         std::string("unexpected character '") + c + "'");
    }
  }

 private:
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
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

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  BlueprintPresentation parse_file() {
    expect_keyword("blueprint");
    const std::string name = expect(TokenKind::kIdent, "blueprint name").text;
    expect(TokenKind::kLBrace, "'{'");

    struct PendingRelation {
      std::vector<std::vector<std::pair<std::string, std::uint32_t>>> lhs;
      std::vector<std::vector<std::pair<std::string, std::uint32_t>>> rhs;
      std::size_t line;
      std::size_t column;
    };
    std::vector<std::string> names;
    std::vector<std::uint32_t> degrees;
    std::optional<bool> graded;
    std::vector<PendingRelation> pending;

    while (current_.kind != TokenKind::kRBrace) {
      const Token head = expect(TokenKind::kIdent, "'gens' or 'rel'");
      if (head.text == "gens") {
        std::vector<std::string> group;
        while (current_.kind == TokenKind::kIdent) {
          group.push_back(current_.text);
          shift();
        }
        std::uint32_t degree = 0;
        bool has_degree = false;
        if (current_.kind == TokenKind::kColon) {
          shift();
          const Token kw = expect(TokenKind::kIdent, "'deg'");
          if (kw.text != "deg") {
            throw ParseError(kw.line, kw.column, "expected 'deg'");
          }
          degree = expect_number("degree");
          has_degree = true;
        }
        expect(TokenKind::kSemicolon, "';'");
        if (graded.has_value() && *graded != has_degree) {
          throw ParseError(head.line, head.column,
                           "cannot mix graded and ungraded generator groups");
        }
        graded = has_degree;
        for (std::string& n : group) {
          names.push_back(std::move(n));
          degrees.push_back(degree);
        }
      } else if (head.text == "rel") {
        PendingRelation rel;
        rel.line = head.line;
        rel.column = head.column;
        rel.lhs = parse_symbolic_sum();
        expect(TokenKind::kEquals, "'=='");
        rel.rhs = parse_symbolic_sum();
        expect(TokenKind::kSemicolon, "';'");
        pending.push_back(std::move(rel));
      } else {
        throw ParseError(head.line, head.column,
                         "expected 'gens' or 'rel', got '" + head.text + "'");
      }
    }
    shift();  // consume '}'
    expect(TokenKind::kEnd, "end of input");

    BlueprintPresentation pres = make_free_blueprint(
        names,
        graded.value_or(false)
            ? std::optional<std::vector<std::uint32_t>>(degrees)
            : std::nullopt,
        name);

    std::vector<Relation> relations;
    for (const PendingRelation& rel : pending) {
      relations.emplace_back(
          resolve_sum(pres, rel.lhs, rel.line, rel.column),
          resolve_sum(pres, rel.rhs, rel.line, rel.column));
    }
    return quotient(pres, std::move(relations));
  }

  // Sums/relations against an existing presentation (used by the expression
  // entry points).
  FormalSum parse_sum_expression(const BlueprintPresentation& pres) {
    const Token at = current_;
    const auto symbolic = parse_symbolic_sum();
    expect(TokenKind::kEnd, "end of expression");
    return resolve_sum(pres, symbolic, at.line, at.column);
  }

  Relation parse_relation_expression(const BlueprintPresentation& pres) {
    const Token at = current_;
    const auto lhs = parse_symbolic_sum();
    expect(TokenKind::kEquals, "'=='");
    const auto rhs = parse_symbolic_sum();
    expect(TokenKind::kEnd, "end of expression");
    return Relation(resolve_sum(pres, lhs, at.line, at.column),
                    resolve_sum(pres, rhs, at.line, at.column));
  }

 private:
  using SymbolicProduct = std::vector<std::pair<std::string, std::uint32_t>>;

  void shift() { current_ = lexer_.next(); }

  Token expect(TokenKind kind, std::string_view what) {
    if (current_.kind != kind) {
      throw ParseError(current_.line, current_.column,
                       "expected " + std::string(what) + ", got '" +
                           (current_.kind == TokenKind::kEnd ? "<end>"
                                                             : current_.text) +
                           "'");
    }
    Token out = current_;
    shift();
    return out;
  }

  void expect_keyword(std::string_view word) {
    const Token t = expect(TokenKind::kIdent, "'" + std::string(word) + "'");
    if (t.text != word) {
      throw ParseError(t.line, t.column,
                       "expected '" + std::string(word) + "', got '" + t.text +
                           "'");
    }
  }

  std::uint32_t expect_number(std::string_view what) {
    const Token t = expect(TokenKind::kNumber, what);
    return static_cast<std::uint32_t>(std::stoul(t.text));
  }

  // product := factor ('*' factor)*; factor := IDENT ('^' NUM)? | '1'
  SymbolicProduct parse_symbolic_product() {
    SymbolicProduct product;
    while (true) {
      if (current_.kind == TokenKind::kNumber && current_.text == "1") {
        shift();  // the empty product
      } else {
        const Token name = expect(TokenKind::kIdent, "generator name or '1'");
        std::uint32_t exp = 1;
        if (current_.kind == TokenKind::kCaret) {
          shift();
          exp = expect_number("exponent");
        }
        product.emplace_back(name.text, exp);
      }
      if (current_.kind != TokenKind::kStar) break;
      shift();
    }
    return product;
  }

  // sum := '0' | product ('+' product)*
  std::vector<SymbolicProduct> parse_symbolic_sum() {
    if (current_.kind == TokenKind::kNumber && current_.text == "0") {
      shift();
      return {};
    }
    std::vector<SymbolicProduct> terms;
    terms.push_back(parse_symbolic_product());
    while (current_.kind == TokenKind::kPlus) {
      shift();
      terms.push_back(parse_symbolic_product());
    }
    return terms;
  }

  static FormalSum resolve_sum(const BlueprintPresentation& pres,
                               const std::vector<SymbolicProduct>& symbolic,
                               std::size_t line, std::size_t column) {
    FormalSum sum;
    for (const SymbolicProduct& product : symbolic) {
      Monomial m = Monomial::one();
      for (const auto& [name, exp] : product) {
        const auto idx = pres.find_generator(name);
        if (!idx) {
          throw ParseError(line, column,
                           "unknown generator '" + name + "'");
        }
        m *= Monomial::var(*idx, exp);
      }
      sum.add_term(m);
    }
    return sum;
  }

  Lexer lexer_;
  Token current_{TokenKind::kEnd, "", 1, 1};
};

}  // namespace

BlueprintPresentation parse_blueprint(std::string_view text) {
  return Parser(text).parse_file();
}

FormalSum parse_formal_sum(const BlueprintPresentation& pres,
                           std::string_view text) {
  return Parser(text).parse_sum_expression(pres);
}

Relation parse_relation(const BlueprintPresentation& pres,
                        std::string_view text) {
  return Parser(text).parse_relation_expression(pres);
}

}  // namespace bluescheme
