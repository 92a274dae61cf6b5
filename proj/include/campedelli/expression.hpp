#pragma once

// Recursive-descent reader for the textual expression grammar shared by
// polynomials, cyclotomic literals and scenario files:
//
//   sum     := signed (('+' | '-') signed)*
//   signed  := ('-' | '+') signed | product
//   product := power ('*' power)*
//   power   := atom ('^' integer)?
//   atom    := rational-literal | identifier | '(' sum ')'
//
// so '^' binds tighter than '*', which binds tighter than unary '-', which
// binds tighter than binary '+'/'-'.  Rational literals are "p" or "p/q" with
// no whitespace around the slash.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace campedelli {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownSymbol : public std::runtime_error {
 public:
  explicit UnknownSymbol(const std::string& name)
      : std::runtime_error("unknown symbol '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

inline bool is_identifier_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
inline bool is_identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

/// `resolve(name)` maps an identifier to a value (throwing UnknownSymbol when
/// it cannot); `literal(text)` maps a rational literal such as "2/3" to a value.
template <class V, class Resolve, class Literal>
class ExpressionReader {
 public:
  ExpressionReader(std::string_view text, Resolve resolve, Literal literal)
      : text_(text), resolve_(std::move(resolve)), literal_(std::move(literal)) {}

  V read() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError("empty expression", pos_);
    V value = sum();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return value;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  V sum() {
    V value = signed_term();
    for (;;) {
      if (accept('+')) {
        value = value + signed_term();
      } else if (accept('-')) {
        value = value - signed_term();
      } else {
        return value;
      }
    }
  }

  V signed_term() {
    if (accept('-')) return -signed_term();
    if (accept('+')) return signed_term();
    return product();
  }

  V product() {
    V value = power();
    while (accept('*')) value = value * power();
    return value;
  }

  V power() {
    V base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (start == pos_) throw SyntaxError("expected integer exponent", pos_);
    unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    V result = base;
    if (e == 0) return unit_like(base);
    for (unsigned long i = 1; i < e; ++i) result = result * base;
    return result;
  }

  V atom() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      V value = sum();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t den = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
        if (den == pos_) throw SyntaxError("expected denominator", pos_);
      }
      return literal_(text_.substr(start, pos_ - start));
    }
    if (is_identifier_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_identifier_char(text_[pos_])) ++pos_;
      return resolve_(std::string(text_.substr(start, pos_ - start)));
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  Resolve resolve_;
  Literal literal_;
  std::size_t pos_ = 0;
};

template <class V, class Resolve, class Literal>
V read_expression(std::string_view text, Resolve resolve, Literal literal) {
  return ExpressionReader<V, Resolve, Literal>(text, std::move(resolve), std::move(literal)).read();
}

}  // namespace campedelli
