#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "frob3/error.hpp"

namespace frob3 {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over boost's cpp_rational; it adds the textual
/// "num/den" form used by the catalog and CLI, and conversions into the
/// floating types used for evaluation.
class BigRational {
 public:
  using backend_type = boost::multiprecision::cpp_rational;

  BigRational() = default;
  BigRational(int v) : v_(v) {}                    // NOLINT(google-explicit-constructor)
  BigRational(long v) : v_(v) {}                   // NOLINT(google-explicit-constructor)
  BigRational(long long v) : v_(v) {}              // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& v) : v_(v) {}          // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) raise(Errc::InvalidArgument, "zero denominator");
    v_ = den < 0 ? backend_type(-num, -den) : backend_type(num, den);
  }
  explicit BigRational(const backend_type& v) : v_(v) {}

  /// Exact value of a finite binary floating-point number.
  static BigRational from_double(double x) {
    if (!std::isfinite(x)) raise(Errc::InvalidArgument, "non-finite double");
    int exp = 0;
    double mant = std::frexp(x, &exp);
    // mant * 2^53 is an integer for every double
    auto m = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    BigInt num(m);
    BigInt den(1);
    if (exp >= 0) num <<= exp;
    else den <<= -exp;
    return {num, den};
  }

  /// Parses "n", "-n" or "n/d" (whitespace ignored).
  static BigRational parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (ch != ' ' && ch != '\t') s.push_back(ch);
    auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
      if (part.empty() || part == "-" || part == "+")
        raise(Errc::ParseError, "bad rational '" + std::string(text) + "'");
      std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9')
          raise(Errc::ParseError, "bad rational '" + std::string(text) + "'");
      return BigInt(part[0] == '+' ? part.substr(1) : part);
    };
    if (slash == std::string::npos) return BigRational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) raise(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    return {num, den};
  }

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }
  const backend_type& backend() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return den() == 1; }
  int sign() const { return v_.sign(); }

  /// Always "num/den", also for integers.
  std::string to_fraction_string() const { return num().str() + "/" + den().str(); }
  /// "num" for integers, "num/den" otherwise.
  std::string str() const { return is_integer() ? num().str() : to_fraction_string(); }

  double to_double() const { return v_.convert_to<double>(); }

  template <class Real>
  Real to() const {
    if constexpr (std::is_same_v<Real, double>) {
      return to_double();
    } else {
      return Real(num()) / Real(den());
    }
  }

  BigInt floor() const {
    BigInt n = num(), d = den();
    BigInt q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) q -= 1;
    return q;
  }

  BigRational abs() const { return BigRational(v_ < 0 ? backend_type(-v_) : v_); }

  BigRational pow(unsigned e) const {
    BigRational r(1), b(*this);
    while (e) {
      if (e & 1U) r *= b;
      b *= b;
      e >>= 1U;
    }
    return r;
  }

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) raise(Errc::PoleAtInput, "division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(backend_type(-a.v_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

 private:
  backend_type v_{0};
};

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace frob3
