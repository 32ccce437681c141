#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "foliationlab/errors.hpp"
#include "foliationlab/exactfield.hpp"

namespace fl::detail {

/// Recursive-descent parser shared by field elements and polynomials.
///
/// Grammar: expr := term (('+'|'-') term)*, term := unary (('*'|'/'|juxtaposition) unary)*,
/// unary := ('+'|'-') unary | power, power := atom ('^' integer)?,
/// atom := number | 'i' | 'sqrt' '(' integer ')' | identifier | '(' expr ')'.
/// Traits supplies the value type and its constructors.
template <class Traits>
class ExprParser {
 public:
  using Value = typename Traits::Value;

  ExprParser(std::string_view text, Traits& traits) : text_(text), traits_(traits) {}

  Value parse() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty expression");
    Value v = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at column " + std::to_string(pos_ + 1));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool starts_atom() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(' || c == '.';
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Value den = unary();
        v = traits_.divide(v, den, at);
      } else if (starts_atom()) {
        v = v * unary();
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      return traits_.power(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return traits_.constant(number());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\'')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return traits_.constant(FieldElement::imaginary_unit());
      if (name == "sqrt") {
        if (!accept('(')) fail("expected '(' after sqrt");
        skip_ws();
        std::size_t ns = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (ns == pos_) fail("sqrt expects a non-negative integer");
        Integer n(std::string(text_.substr(ns, pos_ - ns)));
        if (!accept(')')) fail("expected ')'");
        return traits_.sqrt(n);
      }
      std::optional<Value> var = traits_.variable(name);
      if (!var) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      return *var;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    Integer den = 1;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t fs = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string frac(text_.substr(fs, pos_ - fs));
      digits += frac;
      for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    }
    if (digits.empty()) fail("malformed number");
    Rational q(Integer(digits), den);
    q.canonicalize();
    return q;
  }

  std::string_view text_;
  Traits& traits_;
  std::size_t pos_ = 0;
};

}  // namespace fl::detail
