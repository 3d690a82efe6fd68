#pragma once

#include <cctype>
#include <cstdio>
#include <regex>
#include <string>
#include <string_view>

#include "frob3/error.hpp"
#include "frob3/exactnum/big_rational.hpp"
#include "frob3/exactnum/quadratic_point.hpp"
#include "frob3/modform/eisenstein.hpp"

namespace frob3::cli {

/// A parsed modulus together with the text it came from.
struct ModulusExpr {
  std::string source;
  Point value;

  bool exact() const { return std::holds_alternative<QuadraticPoint>(value); }
};

namespace detail {

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

// x + y·sqrt(−D); D = 0 when no radical has been seen.
struct QuadValue {
  BigRational x, y;
  std::int64_t D = 0;
};

class ExactParser {
 public:
  explicit ExactParser(std::string s) : s_(std::move(s)) {}

  QuadValue parse() {
    QuadValue v = expr();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { raise(Errc::ParseError, "modulus '" + s_ + "': " + why); }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool peek(std::string_view w) const { return s_.compare(pos_, w.size(), w) == 0; }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  BigInt integer() {
    std::size_t start = pos_;
    if (peek('-') || peek('+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    std::string t = s_.substr(start, pos_ - start);
    if (t[0] == '+') t.erase(0, 1);
    return BigInt(t);
  }

  BigRational rational() {
    BigInt n = integer();
    if (peek('/') && !peek("/(")) {
      ++pos_;
      BigInt d = integer();
      if (d == 0) fail("zero denominator");
      return {n, d};
    }
    return BigRational(n);
  }

  std::int64_t radical() {
    if (!peek("sqrt(")) fail("expected sqrt(");
    pos_ += 5;
    expect('-');
    BigInt D = integer();
    if (D <= 0) fail("radicand must be a negative integer");
    if (D > BigInt(std::numeric_limits<std::int32_t>::max())) fail("radicand too large");
    expect(')');
    return static_cast<std::int64_t>(D);
  }

  QuadValue term() {
    if (peek('(')) {
      ++pos_;
      QuadValue v = expr();
      expect(')');
      expect('/');
      BigInt d = integer();
      if (d == 0) fail("zero denominator");
      BigRational r(BigInt(1), d);
      return {v.x * r, v.y * r, v.D};
    }
    BigRational coeff(1);
    if (peek("-sqrt(")) {
      ++pos_;
      coeff = BigRational(-1);
    } else if (peek("+sqrt(")) {
      ++pos_;
    } else if (!peek("sqrt(")) {
      coeff = rational();
      if (peek('*')) ++pos_;
      else if (!peek("sqrt(")) return {coeff, BigRational(0), 0};
    }
    std::int64_t D = radical();
    return {BigRational(0), coeff, D};
  }

  QuadValue expr() {
    QuadValue v = term();
    if (peek('+') || peek('-')) {
      bool minus = peek('-');
      if (!minus) ++pos_;
      QuadValue w = term();
      if (v.D != 0 && w.D != 0 && v.D != w.D) fail("mixed radicands");
      v.x += w.x;
      v.y += w.y;
      if (v.D == 0) v.D = w.D;
    }
    return v;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

inline const std::regex& decimal_pattern() {
  // x, yi, x+yi, x-yi
  static const std::regex re(
      R"(^([+-]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)??(?:([+-]?)((?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)?i)?$)");
  return re;
}

}  // namespace detail

/// Decimal complex number "x", "yi", "x+yi" or "x-yi".
inline ApproxComplex parse_decimal_complex(std::string_view text) {
  std::string s = detail::strip_spaces(text);
  std::smatch m;
  if (s.empty() || !std::regex_match(s, m, detail::decimal_pattern()))
    raise(Errc::ParseError, "bad complex number '" + std::string(text) + "'");
  double re = m[1].matched ? std::stod(m[1].str()) : 0.0;
  double im = 0.0;
  if (s.back() == 'i') {
    im = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (m[2].str() == "-") im = -im;
    if (!m[1].matched && !m[2].matched && !m[3].matched) im = 1.0;
  }
  return {re, im, 0.0};
}

/// Exact grammar
///   expr := term ('+' term)? ; term := rational | rational? '*'? 'sqrt(-' integer ')'
///         | '(' expr ')' '/' integer ; rational := integer ('/' integer)?
/// plus the aliases "i" and "rho", or a decimal "x+yi" for approximate input.
inline ModulusExpr parse_modulus(std::string_view text) {
  std::string s = detail::strip_spaces(text);
  if (s.empty()) raise(Errc::ParseError, "empty modulus");
  if (s == "i") return {std::string(text), QuadraticPoint::i()};
  if (s == "rho") return {std::string(text), QuadraticPoint::rho()};
  if (s.find("sqrt") != std::string::npos) {
    detail::QuadValue v = detail::ExactParser(s).parse();
    if (v.D == 0 || v.y.is_zero()) raise(Errc::NotUpperHalfPlane, "modulus '" + s + "' is real");
    return {std::string(text), QuadraticPoint(QuadraticElement(v.x, v.y, v.D))};
  }
  ApproxComplex z = parse_decimal_complex(s);
  if (!(z.im() > 0)) raise(Errc::NotUpperHalfPlane, "modulus '" + s + "' is not in the upper half plane");
  return {std::string(text), z};
}

/// Canonical spelling; exact points use the grammar form and approximate
/// points use 17 significant digits so that parsing gives the same value back.
inline std::string to_string(const Point& p) {
  if (auto* q = std::get_if<QuadraticPoint>(&p)) return q->to_string();
  const auto& z = std::get<ApproxComplex>(p);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.re(), z.im());
  return buf;
}

}  // namespace frob3::cli
