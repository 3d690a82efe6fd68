#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "frob3/error.hpp"
#include "frob3/exactnum/approx_complex.hpp"
#include "frob3/exactnum/big_rational.hpp"

namespace frob3 {

/// Element x + y·√(−D) of the imaginary quadratic field Q(√−D).
class QuadraticElement {
 public:
  QuadraticElement(BigRational x, BigRational y, std::int64_t D) : x_(std::move(x)), y_(std::move(y)), D_(D) {
    if (D_ <= 0) raise(Errc::InvalidArgument, "D must be positive");
  }
  QuadraticElement(const BigRational& x, std::int64_t D) : QuadraticElement(x, BigRational(0), D) {}

  const BigRational& x() const { return x_; }
  const BigRational& y() const { return y_; }
  std::int64_t D() const { return D_; }

  /// x² + D·y², the field norm.
  BigRational norm() const { return x_ * x_ + BigRational(static_cast<long long>(D_)) * y_ * y_; }
  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  QuadraticElement conj() const { return {x_, -y_, D_}; }

  friend QuadraticElement operator+(const QuadraticElement& a, const QuadraticElement& b) {
    check_field(a, b);
    return {a.x_ + b.x_, a.y_ + b.y_, a.D_};
  }
  friend QuadraticElement operator-(const QuadraticElement& a, const QuadraticElement& b) {
    check_field(a, b);
    return {a.x_ - b.x_, a.y_ - b.y_, a.D_};
  }
  friend QuadraticElement operator*(const QuadraticElement& a, const QuadraticElement& b) {
    check_field(a, b);
    BigRational d(static_cast<long long>(a.D_));
    return {a.x_ * b.x_ - d * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_, a.D_};
  }
  friend QuadraticElement operator/(const QuadraticElement& a, const QuadraticElement& b) {
    check_field(a, b);
    if (b.is_zero()) raise(Errc::PoleAtInput, "division by zero in Q(sqrt(-D))");
    QuadraticElement n = a * b.conj();
    BigRational m = b.norm();
    return {n.x_ / m, n.y_ / m, a.D_};
  }
  friend bool operator==(const QuadraticElement& a, const QuadraticElement& b) {
    return a.D_ == b.D_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  static void check_field(const QuadraticElement& a, const QuadraticElement& b) {
    if (a.D_ != b.D_) raise(Errc::InvalidArgument, "mixing different quadratic fields");
  }

  BigRational x_, y_;
  std::int64_t D_;
};

/// Exact point τ = (p + q√(−D))/r of the upper half plane.
///
/// Always canonical: D squarefree, r > 0, q > 0, gcd(p, q, r) = 1.
class QuadraticPoint {
 public:
  QuadraticPoint(const BigInt& p, const BigInt& q, const BigInt& r, std::int64_t D)
      : QuadraticPoint(make_element(p, q, r, D)) {}

  explicit QuadraticPoint(const QuadraticElement& z) : x_(z.x()), y_(z.y()), D_(z.D()) { canonicalize(); }

  static QuadraticPoint i() { return {0, 1, 1, 1}; }
  static QuadraticPoint rho() { return {-1, 1, 2, 3}; }

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& r() const { return r_; }
  std::int64_t D() const { return D_; }

  /// Real part.
  const BigRational& re() const { return x_; }
  /// Coefficient y in τ = x + y√(−D).
  const BigRational& sqrt_coeff() const { return y_; }
  /// Im(τ)² = D·y².
  BigRational im_squared() const { return BigRational(static_cast<long long>(D_)) * y_ * y_; }
  /// |τ|².
  BigRational norm() const { return x_ * x_ + im_squared(); }

  QuadraticElement element() const { return {x_, y_, D_}; }

  /// Floating embedding; the radius is at most 2 ulp of |τ|.
  template <class Real = double>
  BasicApproxComplex<Real> embed() const {
    using std::abs;
    using std::sqrt;
    Real re = x_.template to<Real>();
    Real im = y_.template to<Real>() * sqrt(Real(D_));
    Real u = detail::unit_roundoff<Real>();
    Real e = u / 2 * abs(re) + 3 * u / 2 * abs(im);
    return {re, im, detail::round_up(e)};
  }

  /// Grammar form, e.g. "(-1+sqrt(-7))/2", "2*sqrt(-1)", "sqrt(-3)".
  std::string to_string() const {
    std::string s;
    if (p_ != 0) s += p_.str() + "+";
    if (q_ != 1) s += q_.str() + "*";
    s += "sqrt(-" + std::to_string(D_) + ")";
    if (r_ != 1) s = "(" + s + ")/" + r_.str();
    return s;
  }

  friend bool operator==(const QuadraticPoint& a, const QuadraticPoint& b) {
    return a.D_ == b.D_ && a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend std::ostream& operator<<(std::ostream& os, const QuadraticPoint& t) { return os << t.to_string(); }

 private:
  static QuadraticElement make_element(const BigInt& p, const BigInt& q, const BigInt& r, std::int64_t D) {
    if (r == 0) raise(Errc::InvalidArgument, "zero denominator in quadratic point");
    return {BigRational(p, r), BigRational(q, r), D};
  }

  void canonicalize() {
    if (D_ <= 0) raise(Errc::InvalidArgument, "D must be positive");
    // pull square factors of D into y
    std::int64_t d = D_;
    std::int64_t out = 1;
    for (std::int64_t f = 2; f * f <= d; ++f) {
      while (d % (f * f) == 0) {
        d /= f * f;
        out *= f;
      }
    }
    D_ = d;
    y_ *= BigRational(static_cast<long long>(out));
    if (y_.sign() <= 0) raise(Errc::NotUpperHalfPlane, "imaginary part must be positive");
    BigInt dx = x_.den(), dy = y_.den();
    r_ = dx / boost::multiprecision::gcd(dx, dy) * dy;
    p_ = x_.num() * (r_ / dx);
    q_ = y_.num() * (r_ / dy);
  }

  BigRational x_, y_;
  std::int64_t D_;
  BigInt p_, q_, r_;
};

}  // namespace frob3
