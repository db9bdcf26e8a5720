#include "regula/expr.hpp"

#include <cctype>
#include <charconv>

#include "regula/errors.hpp"

namespace regula {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const std::string& var) : src_(src), var_(var) {}

  RatFunc parse() {
    skip_space();
    if (pos_ == src_.size()) throw ParseError("empty expression", pos_);
    RatFunc out = expr();
    skip_space();
    if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return out;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RatFunc rhs = unary();
        if (rhs.is_zero()) throw AlgebraError("division by zero at position " + std::to_string(at));
        acc /= rhs;
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    bool negative = false;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) negative = src_[pos_++] == '-';
    std::size_t end = pos_;
    while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
    int exponent = 0;
    const auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + end, exponent);
    if (end == pos_ || ec != std::errc() || ptr != src_.data() + end)
      throw ParseError("expected integer exponent", at);
    pos_ = end;
    if (negative) exponent = -exponent;
    if (exponent < 0 && base.is_zero()) throw AlgebraError("division by zero at position " + std::to_string(at));
    return base.pow(exponent);
  }

  RatFunc primary() {
    skip_space();
    if (pos_ == src_.size()) throw ParseError("unexpected end of expression", pos_);
    const char ch = src_[pos_];
    if (ch == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) ++pos_;
      try {
        return RatFunc(Rat::parse(src_.substr(start, pos_ - start)));
      } catch (const Error&) {
        throw ParseError("malformed number", start);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      const std::string_view name = src_.substr(start, pos_ - start);
      if (name != var_) throw ParseError("unknown identifier '" + std::string(name) + "'", start);
      return RatFunc::variable(var_);
    }
    throw ParseError(std::string("unexpected '") + ch + "'", pos_);
  }

  std::string_view src_;
  const std::string& var_;
  std::size_t pos_ = 0;
};

std::size_t term_count(const Poly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) ++n;
  return n;
}

}  // namespace

RatFunc parse_expr(std::string_view src, const std::string& variable) { return Parser(src, variable).parse(); }

std::string print_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto coeffs = p.coeffs();
  for (int k = p.degree(); k >= 0; --k) {
    const Rat& c = coeffs[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    const Rat mag = c.abs();
    std::string mono;
    if (k >= 1) mono = p.variable();
    if (k >= 2) mono += "^" + std::to_string(k);
    if (mono.empty())
      out += mag.to_string();
    else if (mag == Rat(1))
      out += mono;
    else
      out += mag.to_string() + "*" + mono;
  }
  return out;
}

std::string print_expr(const RatFunc& f) {
  std::string num = print_poly(f.num());
  if (f.is_polynomial()) return num;
  if (term_count(f.num()) > 1) num = "(" + num + ")";
  std::string den = print_poly(f.den());
  if (term_count(f.den()) > 1) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace regula
