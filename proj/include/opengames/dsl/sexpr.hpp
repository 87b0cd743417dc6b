#ifndef OPENGAMES_DSL_SEXPR_HPP_
#define OPENGAMES_DSL_SEXPR_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "opengames/core/errors.hpp"

namespace og::dsl {

struct Span {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t end_line = 1;
  std::size_t end_column = 1;

  std::string to_string() const { return std::to_string(line) + ":" + std::to_string(column); }
};

// Diagnostics carry the span they refer to.
class SourceError : public Error {
 public:
  SourceError(const std::string& kind, const std::string& message, Span span)
      : Error(span.to_string() + ": " + kind + ": " + message),
        kind_(kind),
        message_(message),
        span_(span) {}
  const std::string& kind() const { return kind_; }
  const std::string& message() const { return message_; }
  const Span& span() const { return span_; }

 private:
  std::string kind_;
  std::string message_;
  Span span_;
};

class ParseError : public SourceError {
 public:
  ParseError(const std::string& message, Span span, std::vector<std::string> expected = {})
      : SourceError("parse error", with_expected(message, expected), span),
        expected_(std::move(expected)) {}
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string with_expected(const std::string& message, const std::vector<std::string>& e) {
    if (e.empty()) return message;
    std::string out = message + " (expected ";
    for (std::size_t i = 0; i < e.size(); ++i) out += (i ? " or " : "") + e[i];
    return out + ")";
  }
  std::vector<std::string> expected_;
};

class NameError : public SourceError {
 public:
  NameError(const std::string& message, Span span) : SourceError("name error", message, span) {}
};

class TypeError : public SourceError {
 public:
  TypeError(const std::string& message, Span span) : SourceError("type error", message, span) {}
};

// An atom or a parenthesized list.
struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  Span span;

  bool is_atom() const { return !is_list; }
  bool is(std::string_view name) const { return !is_list && atom == name; }
  bool head_is(std::string_view name) const {
    return is_list && !items.empty() && items[0].is(name);
  }

  // Structural equality, ignoring spans.
  friend bool operator==(const SExpr& a, const SExpr& b) {
    return a.is_list == b.is_list && a.atom == b.atom && a.items == b.items;
  }

  std::string to_string() const {
    if (!is_list) return atom;
    std::string out = "(";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? " " : "") + items[i].to_string();
    return out + ")";
  }
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    skip();
    while (pos_ < text_.size()) {
      out.push_back(read());
      skip();
    }
    return out;
  }

 private:
  static bool delimiter(char c) {
    return c == '(' || c == ')' || c == ';' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }

  Span here() const { return {line_, column_, line_, column_}; }

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
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  SExpr read() {
    SExpr e;
    e.span = here();
    char c = text_[pos_];
    if (c == ')') throw ParseError("unexpected ')'", here(), {"an atom", "'('"});
    if (c == '(') {
      e.is_list = true;
      advance();
      skip();
      while (true) {
        if (pos_ >= text_.size())
          throw ParseError("unterminated list opened at " + e.span.to_string(), here(),
                           {"')'", "an atom", "'('"});
        if (text_[pos_] == ')') break;
        e.items.push_back(read());
        skip();
      }
      advance();
    } else {
      std::size_t start = pos_;
      while (pos_ < text_.size() && !delimiter(text_[pos_])) advance();
      e.atom = std::string(text_.substr(start, pos_ - start));
    }
    e.span.end_line = line_;
    e.span.end_column = column_;
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline std::vector<SExpr> read_sexprs(std::string_view text) { return Reader(text).read_all(); }

// Canonical layout: a list that fits in `width` columns stays on one line,
// otherwise its head stays with the first argument and the rest are indented.
inline void pretty(const SExpr& e, std::size_t indent, std::string& out, std::size_t width = 80) {
  std::string flat = e.to_string();
  if (!e.is_list || indent + flat.size() <= width || e.items.size() < 2) {
    out += flat;
    return;
  }
  out += "(";
  pretty(e.items[0], indent + 1, out, width);
  std::size_t i = 1;
  if (e.items[0].is_atom() && e.items[1].is_atom()) {
    out += " " + e.items[1].atom;
    i = 2;
  }
  for (; i < e.items.size(); ++i) {
    out += "\n" + std::string(indent + 2, ' ');
    pretty(e.items[i], indent + 2, out, width);
  }
  out += ")";
}

}  // namespace og::dsl

#endif  // OPENGAMES_DSL_SEXPR_HPP_
