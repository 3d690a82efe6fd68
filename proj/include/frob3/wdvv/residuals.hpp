#pragma once

#include <algorithm>
#include <cmath>

#include "frob3/error.hpp"
#include "frob3/exactnum/approx_complex.hpp"
#include "frob3/wdvv/constant_orbit.hpp"
#include "frob3/wdvv/solution.hpp"

namespace frob3 {

namespace detail {

inline std::array<ApproxComplex, 4> derivatives_in_domain(const AnalyticSolution& f, const ApproxComplex& t) {
  try {
    return f.derivatives(t);
  } catch (const Error& e) {
    if (e.code() == Errc::PoleAtInput || e.code() == Errc::NotUpperHalfPlane)
      raise(Errc::OutsideDomain, e.what());
    throw;
  }
}

inline ApproxComplex pi_i() { return {0.0, M_PI, 2 * detail::unit_roundoff<double>() * M_PI}; }

}  // namespace detail

/// f‴ + 24 f f″ − 36 f′². For the τ-variable f∞ the τ-form
/// f‴ + 48πi f″ f − 72πi f′² is used instead.
inline ApproxComplex wdvv_residual(const AnalyticSolution& f, const ApproxComplex& t) {
  auto d = detail::derivatives_in_domain(f, t);
  if (f.kind() == SolutionKind::SpecialTau) {
    ApproxComplex pi_i = detail::pi_i();
    return d[3] + ApproxComplex(48) * pi_i * d[2] * d[0] - ApproxComplex(72) * pi_i * d[1] * d[1];
  }
  return d[3] + ApproxComplex(24) * d[0] * d[2] - ApproxComplex(36) * d[1] * d[1];
}

/// γ‴ − 6γ″γ + 9γ′² for γ = −4f. For the τ-variable f∞ the function
/// γ = (πi/3)·E2 = −8πi·f∞ is checked in τ.
inline ApproxComplex chazy_residual(const AnalyticSolution& f, const ApproxComplex& t) {
  auto d = detail::derivatives_in_domain(f, t);
  ApproxComplex scale = f.kind() == SolutionKind::SpecialTau ? ApproxComplex(-8) * detail::pi_i() : ApproxComplex(-4);
  ApproxComplex g0 = scale * d[0], g1 = scale * d[1], g2 = scale * d[2], g3 = scale * d[3];
  return g3 - ApproxComplex(6) * g2 * g0 + ApproxComplex(9) * g1 * g1;
}

struct HalphenCheck {
  double residual;     // max over the three equations
  ApproxComplex f_from_x;  // −(X2 + X3 + X4)/6
  ApproxComplex f_direct;  // constant-orbit solution at t
  bool f_consistent;
};

/// Closed-form Halphen triple X3 = X4 = −β/s, X2 = −β/s − 6α/s², s = 1 + βt,
/// checked against d(Xi + Xj)/dt = 2 Xi Xj for the three pairs.
template <class S>
HalphenCheck halphen_residual(const ConstantParams<S>& p, const S& t) {
  using J = Jet<S, 2>;
  J s = J::constant(S(1)) + p.beta * J::variable(t);
  bool pole;
  if constexpr (std::is_same_v<S, BigRational>) pole = s[0].is_zero();
  else pole = s[0].contains_zero();
  if (pole) raise(Errc::PoleAtInput, "t = -1/beta");
  J one = J::constant(S(1));
  J x3 = (S(0) - p.beta) * (one / s);
  J x4 = x3;
  J x2 = x3 - (S(6) * p.alpha) * (one / (s * s));
  auto mag = [](const S& v) -> double {
    if constexpr (std::is_same_v<S, BigRational>) return v.abs().to_double();
    else return static_cast<double>(v.abs_upper());
  };
  auto eq = [&](const J& a, const J& b) { return mag((a[1] + b[1]) - S(2) * a[0] * b[0]); };
  double r = std::max({eq(x2, x3), eq(x3, x4), eq(x4, x2)});
  S fx = (S(0) - (x2[0] + x3[0] + x4[0])) / S(6);
  S fd = constant_jet<S, 2>(p, t)[0];
  double gap;
  if constexpr (std::is_same_v<S, BigRational>) gap = mag(fx - fd);
  else gap = static_cast<double>((fx - fd).mag());
  HalphenCheck out{r, ApproxComplex(0), ApproxComplex(0), false};
  if constexpr (std::is_same_v<S, BigRational>) {
    out.f_from_x = ApproxComplex::from_rational(fx);
    out.f_direct = ApproxComplex::from_rational(fd);
    out.f_consistent = fx == fd;
  } else {
    out.f_from_x = narrow<double>(fx);
    out.f_direct = narrow<double>(fd);
    out.f_consistent = gap <= static_cast<double>(fx.err() + fd.err());
  }
  return out;
}

}  // namespace frob3
