#pragma once

#include <cmath>

#include "frob3/error.hpp"
#include "frob3/exactnum/approx_complex.hpp"
#include "frob3/exactnum/moebius.hpp"
#include "frob3/exactnum/quadratic_point.hpp"

namespace frob3 {

template <class Point>
struct Reduction {
  Point tau;       // reduced representative, tau = A · input
  ExactMoebius A;  // integer entries, det 1
};

/// Standard SL(2,Z) reduction into |Re τ| ≤ 1/2, |τ| ≥ 1; boundary ties go to Re τ ≤ 0.
inline Reduction<QuadraticPoint> fundamental_domain_reduce(const QuadraticPoint& tau) {
  QuadraticPoint t = tau;
  ExactMoebius A = ExactMoebius::identity();
  const BigRational half(1, 2);
  for (;;) {
    BigInt n = (t.re() + half).floor();
    if (n != 0) {
      ExactMoebius Tn(1, BigRational(BigInt(-n)), 0, 1);
      t = moebius_apply(Tn, t);
      A = Tn * A;
    }
    BigRational N = t.norm();
    if (N < BigRational(1) || (N == BigRational(1) && t.re().sign() > 0)) {
      t = moebius_apply(ExactMoebius::S(), t);
      A = ExactMoebius::S() * A;
      continue;
    }
    return {t, A};
  }
}

/// Approximate reduction. Comparisons use a slack equal to the input radius
/// plus rounding, so points within that distance of the boundary land on the
/// Re τ ≤ 0 side. The returned point carries propagated error.
template <class Real>
Reduction<BasicApproxComplex<Real>> fundamental_domain_reduce(const BasicApproxComplex<Real>& tau) {
  using std::floor;
  using C = BasicApproxComplex<Real>;
  if (!(tau.im() > tau.err())) raise(Errc::NotUpperHalfPlane, "Im(tau) is not bounded away from zero");
  C t = tau;
  ExactMoebius A = ExactMoebius::identity();
  for (int iter = 0;; ++iter) {
    if (iter > 100000) raise(Errc::InvalidArgument, "reduction did not terminate");
    Real slack = t.err() + 64 * detail::unit_roundoff<Real>() * (1 + t.mag());
    Real nr = floor(Real(t.re() + Real(0.5) + slack));
    if (nr != 0) {
      long long n = static_cast<long long>(nr);
      t = t - C(Real(nr));
      A = ExactMoebius(1, BigRational(-n), 0, 1) * A;
    }
    Real N = t.re() * t.re() + t.im() * t.im();
    if (N < 1 - slack || (N < 1 + slack && t.re() > slack)) {
      t = C(-1) / t;
      A = ExactMoebius::S() * A;
      continue;
    }
    return {t, A};
  }
}

}  // namespace frob3
