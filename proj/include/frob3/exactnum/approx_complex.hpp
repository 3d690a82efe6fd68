#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <ostream>
#include <type_traits>

#include "frob3/error.hpp"
#include "frob3/exactnum/big_rational.hpp"

namespace frob3 {

/// 113-bit working precision used for every modular-form evaluation.
using WideReal = boost::multiprecision::cpp_bin_float_quad;

template <class Real>
Real pi_v() {
  return boost::math::constants::pi<Real>();
}

namespace detail {

template <class Real>
Real unit_roundoff() {
  return std::numeric_limits<Real>::epsilon();
}

// Nudges a non-negative bound upward past the rounding of its own computation.
template <class Real>
Real round_up(const Real& bound) {
  return bound * (Real(1) + 4 * unit_roundoff<Real>()) + std::numeric_limits<Real>::denorm_min();
}

template <class Real>
Real real_cbrt(const Real& x) {
  using std::exp;
  using std::log;
  if (x == 0) return Real(0);
  if constexpr (std::is_same_v<Real, double>) {
    return std::cbrt(x);
  } else {
    Real r = exp(log(x < 0 ? Real(-x) : x) / 3);
    // one Newton step polishes the last bits
    r = r - (r * r * r - (x < 0 ? Real(-x) : x)) / (3 * r * r);
    return x < 0 ? Real(-r) : r;
  }
}

template <class Real>
Real hypot_abs(const Real& x, const Real& y) {
  using std::abs;
  using std::sqrt;
  Real ax = abs(x), ay = abs(y);
  if (ax < ay) std::swap(ax, ay);
  if (ax == 0) return Real(0);
  Real r = ay / ax;
  return ax * sqrt(1 + r * r);
}

}  // namespace detail

/// Complex value paired with an absolute error radius.
///
/// `err()` bounds the distance from (re, im) to the exact value the
/// computation stands for. Arithmetic widens the radius by the propagated
/// input radii plus a rounding term, so bounds compose through arbitrary
/// expression chains. Radii never shrink.
template <class Real>
class BasicApproxComplex {
 public:
  using real_type = Real;

  BasicApproxComplex() : re_(0), im_(0), err_(0) {}
  BasicApproxComplex(int re) : re_(re), im_(0), err_(0) {}  // NOLINT(google-explicit-constructor)
  BasicApproxComplex(Real re, Real im = Real(0), Real err = Real(0))  // NOLINT
      : re_(std::move(re)), im_(std::move(im)), err_(std::move(err)) {
    using std::isfinite;
    if (!(err_ >= 0) || !isfinite(err_)) raise(Errc::InvalidArgument, "error radius must be finite and >= 0");
  }

  /// Embeds an exact rational; the radius covers the conversion rounding.
  static BasicApproxComplex from_rational(const BigRational& r) {
    Real v = r.template to<Real>();
    using std::abs;
    return {v, Real(0), detail::round_up(2 * detail::unit_roundoff<Real>() * abs(v))};
  }

  static BasicApproxComplex i() { return {Real(0), Real(1)}; }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  const Real& err() const { return err_; }

  /// |center|
  Real mag() const { return detail::hypot_abs(re_, im_); }
  Real abs_upper() const { return detail::round_up(mag() + err_); }
  Real abs_lower() const {
    Real m = mag() * (1 - 4 * detail::unit_roundoff<Real>()) - err_;
    return m > 0 ? m : Real(0);
  }

  /// True when zero lies inside the error disc.
  bool contains_zero() const { return mag() <= err_; }
  bool contains(const Real& x, const Real& y) const {
    return detail::hypot_abs(Real(re_ - x), Real(im_ - y)) <= err_;
  }
  bool overlaps(const BasicApproxComplex& o) const {
    return detail::hypot_abs(Real(re_ - o.re_), Real(im_ - o.im_)) <= err_ + o.err_;
  }

  BasicApproxComplex with_extra_error(const Real& extra) const {
    return {re_, im_, detail::round_up(err_ + extra)};
  }

  BasicApproxComplex conj() const { return {re_, -im_, err_}; }

  BasicApproxComplex operator-() const { return {-re_, -im_, err_}; }

  friend BasicApproxComplex operator+(const BasicApproxComplex& x, const BasicApproxComplex& y) {
    Real re = x.re_ + y.re_;
    Real im = x.im_ + y.im_;
    using std::abs;
    Real e = x.err_ + y.err_ + detail::unit_roundoff<Real>() * (abs(re) + abs(im));
    return {re, im, detail::round_up(e)};
  }
  friend BasicApproxComplex operator-(const BasicApproxComplex& x, const BasicApproxComplex& y) {
    return x + (-y);
  }
  friend BasicApproxComplex operator*(const BasicApproxComplex& x, const BasicApproxComplex& y) {
    using std::abs;
    Real ac = x.re_ * y.re_, bd = x.im_ * y.im_, ad = x.re_ * y.im_, bc = x.im_ * y.re_;
    Real re = ac - bd;
    Real im = ad + bc;
    Real e = x.mag() * y.err_ + y.mag() * x.err_ + x.err_ * y.err_ +
             2 * detail::unit_roundoff<Real>() * (abs(ac) + abs(bd) + abs(ad) + abs(bc));
    return {re, im, detail::round_up(e)};
  }
  friend BasicApproxComplex operator/(const BasicApproxComplex& x, const BasicApproxComplex& y) {
    Real ym = y.mag();
    if (!(ym > y.err_)) raise(Errc::PoleAtInput, "division by a value whose error disc contains zero");
    Real n2 = y.re_ * y.re_ + y.im_ * y.im_;
    Real re = (x.re_ * y.re_ + x.im_ * y.im_) / n2;
    Real im = (x.im_ * y.re_ - x.re_ * y.im_) / n2;
    Real qm = detail::hypot_abs(re, im);
    Real e = (x.err_ + qm * y.err_) / (ym - y.err_) + 8 * detail::unit_roundoff<Real>() * qm;
    return {re, im, detail::round_up(e)};
  }

  BasicApproxComplex& operator+=(const BasicApproxComplex& o) { return *this = *this + o; }
  BasicApproxComplex& operator-=(const BasicApproxComplex& o) { return *this = *this - o; }
  BasicApproxComplex& operator*=(const BasicApproxComplex& o) { return *this = *this * o; }
  BasicApproxComplex& operator/=(const BasicApproxComplex& o) { return *this = *this / o; }

  friend std::ostream& operator<<(std::ostream& os, const BasicApproxComplex& z) {
    return os << "(" << z.re_ << (z.im_ < 0 ? " - " : " + ") << (z.im_ < 0 ? Real(-z.im_) : z.im_)
              << "i ± " << z.err_ << ")";
  }

 private:
  Real re_, im_, err_;
};

using ApproxComplex = BasicApproxComplex<double>;
using WideComplex = BasicApproxComplex<WideReal>;

template <class Real>
BasicApproxComplex<Real> pow(const BasicApproxComplex<Real>& z, unsigned n) {
  BasicApproxComplex<Real> r(1), b(z);
  while (n) {
    if (n & 1U) r *= b;
    n >>= 1U;
    if (n) b *= b;
  }
  return r;
}

/// Principal square root. The radius is valid as long as the error disc
/// does not straddle the negative real axis.
template <class Real>
BasicApproxComplex<Real> sqrt(const BasicApproxComplex<Real>& z) {
  using std::abs;
  using std::sqrt;
  Real m = z.mag();
  if (m == 0) return {Real(0), Real(0), detail::round_up(Real(sqrt(z.err())))};
  Real re = sqrt((m + abs(z.re())) / 2);
  Real im = z.im() / (2 * re);
  if (z.re() < 0) {
    Real t = re;
    re = abs(im);
    im = z.im() < 0 ? Real(-t) : t;
  }
  Real lower = m > z.err() ? Real(sqrt(m - z.err())) : Real(0);
  Real e = z.err() / (sqrt(m) + lower);
  if (lower == 0) e = sqrt(m + z.err()) + sqrt(m);
  return {re, im, detail::round_up(e + 8 * detail::unit_roundoff<Real>() * sqrt(m))};
}

/// Principal cube root, computed through the polar form.
template <class Real>
BasicApproxComplex<Real> cbrt(const BasicApproxComplex<Real>& z) {
  using std::atan2;
  using std::cos;
  using std::sin;
  using detail::real_cbrt;
  Real m = z.mag();
  if (m == 0) return {Real(0), Real(0), detail::round_up(real_cbrt(z.err()))};
  Real arg = atan2(z.im(), z.re()) / 3;
  Real r = real_cbrt(m);
  Real lower = m > z.err() ? real_cbrt(Real(m - z.err())) : Real(0);
  // |a^(1/3) - b^(1/3)| <= |a-b| / (|a|^(2/3) + |a b|^(1/3) + |b|^(2/3)) along the principal branch
  Real e = lower > 0 ? Real(z.err() / (r * r + r * lower + lower * lower)) : Real(real_cbrt(Real(m + z.err())) + r);
  return {r * cos(arg), r * sin(arg), detail::round_up(e + 16 * detail::unit_roundoff<Real>() * r)};
}

/// Rounds a wide value to a narrower precision, folding the rounding into the radius.
template <class To, class From>
BasicApproxComplex<To> narrow(const BasicApproxComplex<From>& z) {
  using std::abs;
  To re = static_cast<To>(z.re());
  To im = static_cast<To>(z.im());
  From lost = abs(From(z.re() - From(re))) + abs(From(z.im() - From(im)));
  To e = static_cast<To>(detail::round_up(From(z.err() + lost)));
  return {re, im, detail::round_up(e)};
}

/// Exact embedding of a narrower value into a wider type.
template <class To, class From>
BasicApproxComplex<To> widen(const BasicApproxComplex<From>& z) {
  return {To(z.re()), To(z.im()), To(z.err())};
}

}  // namespace frob3
