// Recursive-descent parser for the presentation DSL.

#include <cctype>
#include <charconv>
#include <optional>
#include <set>

#include "prop/error.hpp"
#include "prop/fp.hpp"
#include "prop/word.hpp"

namespace prop {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string_view text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const noexcept { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void advance() {
    skip_space();
    current_ = Token{Tok::End, {}, line_, column_};
    if (pos_ >= text_.size()) return;
    std::size_t start = pos_;
    char c = text_[pos_];
    auto is_ident_char = [](char ch) {
      return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) bump();
      current_.kind = Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        bump();
      if (pos_ < text_.size() && is_ident_char(text_[pos_]))
        throw ParseError("malformed token", line_, column_);
      current_.kind = Tok::Int;
    } else if (std::string_view("=:,;^()[]*-+").find(c) != std::string_view::npos) {
      bump();
      current_.kind = Tok::Punct;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }
    current_.text = text_.substr(start, pos_ - start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Presentation presentation() {
    expect_keyword("p");
    expect_punct("=");
    Token pt = lex_.peek();
    std::uint64_t p = parse_uint(expect(Tok::Int, "integer"));
    if (!is_prime(p) || p > kMaxPrime)
      throw ParseError("p = " + std::string(pt.text) + " is not a prime below 2^16", pt.line,
                       pt.column);

    expect_keyword("gens");
    expect_punct(":");
    std::set<std::string_view> seen;
    while (true) {
      Token t = expect(Tok::Ident, "generator name");
      if (!seen.insert(t.text).second)
        throw ParseError("duplicate generator '" + std::string(t.text) + "'", t.line, t.column);
      names_.emplace_back(t.text);
      if (!accept_punct(",")) break;
    }

    expect_keyword("rels");
    expect_punct(":");
    std::vector<GroupWord> relators;
    if (lex_.peek().kind != Tok::End) {
      while (true) {
        Token start = lex_.peek();
        GroupWord w = word();
        if (w.is_identity())
          throw ParseError("relator reduces to the identity", start.line, start.column);
        relators.push_back(std::move(w));
        if (!accept_punct(";")) break;
      }
    }
    expect_end();
    return Presentation(static_cast<std::uint32_t>(p), std::move(names_), std::move(relators));
  }

  GroupWord standalone_word(std::span<const std::string> names) {
    names_.assign(names.begin(), names.end());
    GroupWord w = word();
    expect_end();
    return w;
  }

 private:
  bool starts_atom() const {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Ident) return true;
    if (t.kind == Tok::Int) return t.text == "1";
    return t.kind == Tok::Punct && (t.text == "(" || t.text == "[");
  }

  GroupWord word() {
    if (!starts_atom()) fail("expected a word");
    GroupWord w = term();
    while (true) {
      if (accept_punct("*")) {
        w *= term();
      } else if (starts_atom()) {
        w *= term();
      } else {
        break;
      }
    }
    return w;
  }

  GroupWord term() {
    GroupWord base = atom();
    if (!accept_punct("^")) return base;
    bool negative = false;
    if (accept_punct("-"))
      negative = true;
    else
      accept_punct("+");
    Token t = expect(Tok::Int, "exponent");
    std::uint64_t magnitude = parse_uint(t);
    if (magnitude == 0) throw ParseError("zero exponent", t.line, t.column);
    if (magnitude > static_cast<std::uint64_t>(INT64_MAX))
      throw ParseError("exponent out of range", t.line, t.column);
    auto e = static_cast<std::int64_t>(magnitude);
    return base.pow(negative ? -e : e);
  }

  GroupWord atom() {
    Token t = lex_.next();
    if (t.kind == Tok::Ident) {
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == t.text) return GroupWord::generator(static_cast<std::uint32_t>(i));
      throw ParseError("unknown generator '" + std::string(t.text) + "'", t.line, t.column);
    }
    if (t.kind == Tok::Int) return GroupWord{};
    if (t.text == "(") {
      GroupWord w = word();
      expect_punct(")");
      return w;
    }
    // "["
    GroupWord u = word();
    expect_punct(",");
    GroupWord v = word();
    expect_punct("]");
    return commutator(u, v);
  }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = lex_.peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + std::string(t.text) + "'";
    throw ParseError(what + ", found " + found, t.line, t.column);
  }

  Token expect(Tok kind, const char* what) {
    if (lex_.peek().kind != kind) fail(std::string("expected ") + what);
    return lex_.next();
  }

  void expect_keyword(std::string_view kw) {
    const Token& t = lex_.peek();
    if (t.kind != Tok::Ident || t.text != kw) fail("expected '" + std::string(kw) + "'");
    lex_.next();
  }

  void expect_punct(std::string_view p) {
    if (!accept_punct(p)) fail("expected '" + std::string(p) + "'");
  }

  bool accept_punct(std::string_view p) {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Punct && t.text == p) {
      lex_.next();
      return true;
    }
    return false;
  }

  void expect_end() {
    if (lex_.peek().kind != Tok::End) fail("expected end of input");
  }

  static std::uint64_t parse_uint(const Token& t) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
      throw ParseError("integer out of range", t.line, t.column);
    return v;
  }

  Lexer lex_;
  std::vector<std::string> names_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

GroupWord parse_word(std::string_view text, std::span<const std::string> names) {
  return Parser(text).standalone_word(names);
}

}  // namespace prop
