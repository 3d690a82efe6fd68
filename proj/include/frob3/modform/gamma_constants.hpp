#pragma once

#include "frob3/exactnum/approx_complex.hpp"

namespace frob3 {

enum class GammaArg { Quarter, Third };

namespace detail {

template <class Real>
Real agm(Real a, Real b) {
  using std::abs;
  using std::sqrt;
  for (int i = 0; i < 64 && abs(Real(a - b)) > 4 * unit_roundoff<Real>() * abs(a); ++i) {
    Real m = (a + b) / 2;
    b = sqrt(a * b);
    a = m;
  }
  return (a + b) / 2;
}

}  // namespace detail

/// Γ(1/4) and Γ(1/3) from their AGM closed forms:
/// Γ(1/4)² = (2π)^{3/2}/AGM(1, √2),
/// Γ(1/3)³ = 2^{4/3} π² / (3^{1/4} AGM(1, (√6 + √2)/4)).
template <class Real = WideReal>
BasicApproxComplex<Real> gamma_constant_as(GammaArg which) {
  using std::cbrt;
  using std::pow;
  using std::sqrt;
  const Real pi = pi_v<Real>();
  Real v;
  if (which == GammaArg::Quarter) {
    Real two_pi = 2 * pi;
    v = sqrt(two_pi * sqrt(two_pi) / detail::agm(Real(1), Real(sqrt(Real(2)))));
  } else {
    Real m = detail::agm(Real(1), Real((sqrt(Real(6)) + sqrt(Real(2))) / 4));
    Real cube = pow(Real(2), Real(4) / 3) * pi * pi / (sqrt(sqrt(Real(3))) * m);
    v = detail::real_cbrt(cube);
  }
  return {v, Real(0), detail::round_up(Real(64 * detail::unit_roundoff<Real>() * v))};
}

inline ApproxComplex gamma_constant(GammaArg which) { return narrow<double>(gamma_constant_as<WideReal>(which)); }

}  // namespace frob3
