#pragma once

#include <ostream>
#include <type_traits>

#include "frob3/error.hpp"
#include "frob3/exactnum/approx_complex.hpp"
#include "frob3/exactnum/big_rational.hpp"
#include "frob3/exactnum/quadratic_point.hpp"

namespace frob3 {

/// 2×2 matrix [[a, b], [c, d]] with nonzero determinant.
///
/// Exact flavor uses BigRational entries; approximate flavor uses
/// error-bounded complex entries. Matrix product composes actions:
/// apply(A·B, z) = apply(A, apply(B, z)).
template <class Scalar>
class Moebius {
 public:
  using scalar_type = Scalar;

  Moebius(Scalar a, Scalar b, Scalar c, Scalar d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    Scalar det = a_ * d_ - b_ * c_;
    if constexpr (std::is_same_v<Scalar, BigRational>) {
      if (det.is_zero()) raise(Errc::SingularMatrix, "determinant is zero");
    } else {
      if (det.contains_zero()) raise(Errc::SingularMatrix, "determinant is not bounded away from zero");
    }
  }

  static Moebius identity() { return {Scalar(1), Scalar(0), Scalar(0), Scalar(1)}; }
  /// τ ↦ −1/τ
  static Moebius S() { return {Scalar(0), Scalar(-1), Scalar(1), Scalar(0)}; }
  /// τ ↦ τ + n
  static Moebius T(int n = 1) { return {Scalar(1), Scalar(n), Scalar(0), Scalar(1)}; }

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  const Scalar& d() const { return d_; }
  Scalar det() const { return a_ * d_ - b_ * c_; }

  /// Adjugate scaled by 1/det.
  Moebius inverse() const {
    Scalar dt = det();
    return {d_ / dt, -b_ / dt, -c_ / dt, a_ / dt};
  }

  /// (a z + b)/(c z + d) on the scalar type itself.
  Scalar apply(const Scalar& z) const {
    Scalar den = c_ * z + d_;
    if constexpr (std::is_same_v<Scalar, BigRational>) {
      if (den.is_zero()) raise(Errc::PoleAtInput, "c z + d = 0");
    } else {
      if (den.contains_zero()) raise(Errc::PoleAtInput, "c z + d is not bounded away from zero");
    }
    return (a_ * z + b_) / den;
  }

  /// Entries converted to an approximate flavor.
  template <class Real = double>
  Moebius<BasicApproxComplex<Real>> to_approx() const {
    if constexpr (std::is_same_v<Scalar, BigRational>) {
      using C = BasicApproxComplex<Real>;
      return {C::from_rational(a_), C::from_rational(b_), C::from_rational(c_), C::from_rational(d_)};
    } else {
      return *this;
    }
  }

  friend Moebius operator*(const Moebius& x, const Moebius& y) {
    return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
            x.c_ * y.b_ + x.d_ * y.d_};
  }

  friend bool operator==(const Moebius& x, const Moebius& y)
    requires std::is_same_v<Scalar, BigRational>
  {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Moebius& m) {
    return os << "[[" << m.a_ << ", " << m.b_ << "], [" << m.c_ << ", " << m.d_ << "]]";
  }

 private:
  Scalar a_, b_, c_, d_;
};

using ExactMoebius = Moebius<BigRational>;
using ApproxMoebius = Moebius<ApproxComplex>;

/// True when every entry of an exact matrix is an integer.
inline bool is_integral(const ExactMoebius& A) {
  return A.a().is_integer() && A.b().is_integer() && A.c().is_integer() && A.d().is_integer();
}

/// Exact action on a quadratic point. A negative determinant leaves the
/// upper half plane and raises NotUpperHalfPlane.
inline QuadraticPoint moebius_apply(const ExactMoebius& A, const QuadraticPoint& tau) {
  std::int64_t D = tau.D();
  QuadraticElement z = tau.element();
  QuadraticElement den = QuadraticElement(A.c(), D) * z + QuadraticElement(A.d(), D);
  if (den.is_zero()) raise(Errc::PoleAtInput, "c tau + d = 0");
  QuadraticElement num = QuadraticElement(A.a(), D) * z + QuadraticElement(A.b(), D);
  return QuadraticPoint(num / den);
}

/// Approximate matrices cannot act on exact points.
template <class Real>
QuadraticPoint moebius_apply(const Moebius<BasicApproxComplex<Real>>&, const QuadraticPoint&) = delete;

template <class Real>
BasicApproxComplex<Real> moebius_apply(const Moebius<BasicApproxComplex<Real>>& A, const BasicApproxComplex<Real>& z) {
  return A.apply(z);
}

template <class Real>
BasicApproxComplex<Real> moebius_apply(const ExactMoebius& A, const BasicApproxComplex<Real>& z) {
  return A.template to_approx<Real>().apply(z);
}

/// c z + d for the lower row of A.
template <class Real>
BasicApproxComplex<Real> automorphy_factor(const ExactMoebius& A, const BasicApproxComplex<Real>& z) {
  using C = BasicApproxComplex<Real>;
  return C::from_rational(A.c()) * z + C::from_rational(A.d());
}

}  // namespace frob3
