#ifndef WORDMAP_POLY_PARSE_HPP
#define WORDMAP_POLY_PARSE_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wordmap/polynomial.hpp"

namespace wordmap {

class PolyParseError : public std::invalid_argument {
 public:
  PolyParseError(const std::string& msg, std::size_t position)
      : std::invalid_argument(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// expr := ['-'|'+'] prod (('+'|'-') prod)*
// prod := power (('*'|'/') power)*        division only by constants
// power := atom ('^' digits)?
// atom := integer | identifier | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, ContextPtr ctx) : text_(text), ctx_(std::move(ctx)) {}

  MPoly parse_all() {
    MPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  MPoly expr() {
    skip_ws();
    bool neg = false;
    if (peek('-') || peek('+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    MPoly acc = prod();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (peek('+')) {
        ++pos_;
        acc += prod();
      } else if (peek('-')) {
        ++pos_;
        acc -= prod();
      } else {
        return acc;
      }
    }
  }

  MPoly prod() {
    MPoly acc = power();
    for (;;) {
      skip_ws();
      if (peek('*')) {
        ++pos_;
        acc *= power();
      } else if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        MPoly d = power();
        if (!d.is_constant() || d.is_zero()) throw PolyParseError("division by a non-constant or zero", at);
        acc = acc / d.constant_term();
      } else {
        return acc;
      }
    }
  }

  MPoly power() {
    MPoly base = atom();
    skip_ws();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 0xFFFFu) throw PolyParseError("exponent too large", start);
      return pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  MPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      skip_ws();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MPoly::constant(ctx_, Rat(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto i = ctx_->find(name);
      if (!i) throw PolyParseError("unknown variable '" + name + "'", start);
      return MPoly::variable(ctx_, *i);
    }
    fail("unexpected character");
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw PolyParseError(msg, pos_); }

  std::string_view text_;
  ContextPtr ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the canonical text form (and ordinary arithmetic expressions over
/// the context's variables).
inline MPoly parse_polynomial(std::string_view text, const ContextPtr& ctx) {
  return detail::PolyParser(text, ctx).parse_all();
}

}  // namespace wordmap

#endif  // WORDMAP_POLY_PARSE_HPP
