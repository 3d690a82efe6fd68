#pragma once

#include <array>
#include <optional>
#include <vector>

#include "frob3/error.hpp"
#include "frob3/exactnum/moebius.hpp"
#include "frob3/exactnum/recognize.hpp"
#include "frob3/frobenius/point.hpp"
#include "frob3/modform/curve.hpp"
#include "frob3/modform/eisenstein.hpp"
#include "frob3/wdvv/dubrovin.hpp"
#include "frob3/wdvv/solution.hpp"

namespace frob3 {

namespace detail {

inline WideComplex wide_omega_sq(const FrobeniusPoint& P) {
  WideComplex w = widen<WideReal>(P.omega0());
  return w * w;
}

}  // namespace detail

/// A^(τ0,ω0) = [[τ̄0/(4πω0 Y), ω0τ0], [1/(4πω0 Y), ω0]], Y = Im τ0.
/// Its determinant is −i/(2π) for every point; this is checked on construction.
inline ApproxMoebius a_matrix(const FrobeniusPoint& P) {
  ApproxComplex tau = P.tau0_approx();
  ApproxComplex w = P.omega0();
  ApproxComplex y(tau.im(), 0.0, tau.err());
  ApproxComplex four_pi(4 * M_PI, 0.0, 4 * M_PI * detail::unit_roundoff<double>());
  ApproxComplex k = four_pi * w * y;
  ApproxMoebius A(tau.conj() / k, w * tau, ApproxComplex(1) / k, w);
  ApproxComplex expected(0.0, -1 / (2 * M_PI), detail::unit_roundoff<double>());
  if (!A.det().overlaps(expected)) raise(Errc::Inconsistent, "det A^(tau0,omega0) != -i/(2 pi)");
  return A;
}

/// |4π ω0² Im τ0|, the radius of the disc around t = 0 on which f^(τ0,ω0) is defined.
inline double domain_radius(const FrobeniusPoint& P) {
  ApproxComplex w = P.omega0();
  return 4 * M_PI * static_cast<double>((w * w).mag()) * P.tau0_approx().im();
}

/// f^(τ0,ω0) = gl2_apply(A^(τ0,ω0), 2πi·f∞).
inline AnalyticSolution frobenius_solution(const FrobeniusPoint& P) {
  return gl2_apply(a_matrix(P), AnalyticSolution::f_infinity_scaled());
}

inline ApproxComplex f_eval(const FrobeniusPoint& P, const ApproxComplex& t, unsigned order = 0) {
  return frobenius_solution(P).eval(t, order);
}

struct CoeffTriple {
  std::array<ApproxComplex, 3> c;
  std::array<std::optional<BigRational>, 3> recognized;
  // E2* = −24 c0 ω0², E4 = 288(c1 + 2c0²) ω0⁴, E6 = −864(c2 + 12c0c1 + 16c0³) ω0⁶
  ApproxComplex e2_star, e4, e6;
};

/// Closed forms c0 = −E2*/(24ω0²), c1 = −2c0² + E4/(288ω0⁴),
/// c2 = −E6/(864ω0⁶) − 12c0c1 − 16c0³.
inline std::array<WideComplex, 3> coefficients_from_triple(const EisensteinTriple& e, const WideComplex& w2) {
  WideComplex w4 = w2 * w2;
  WideComplex c0 = WideComplex(-1) * e.e2_star / (WideComplex(24) * w2);
  WideComplex c1 = WideComplex(-2) * c0 * c0 + e.e4 / (WideComplex(288) * w4);
  WideComplex c2 = WideComplex(-1) * e.e6 / (WideComplex(864) * w4 * w2) - WideComplex(12) * c0 * c1 -
                   WideComplex(16) * c0 * c0 * c0;
  return {c0, c1, c2};
}

inline std::array<WideComplex, 3> frob_coefficients_wide(const FrobeniusPoint& P, double tol = 1e-14) {
  return coefficients_from_triple(eisenstein_triple(P.tau0(), tol), detail::wide_omega_sq(P));
}

inline CoeffTriple frob_coefficients(const FrobeniusPoint& P, double tol = 1e-12,
                                     const BigInt& max_denominator = 1000000) {
  EisensteinTriple e = eisenstein_triple(P.tau0(), std::min(tol, 1e-14));
  auto cw = coefficients_from_triple(e, detail::wide_omega_sq(P));
  CoeffTriple out;
  for (int n = 0; n < 3; ++n) {
    out.c[n] = narrow<double>(cw[n]);
    out.recognized[n] = rational_recognize(out.c[n].with_extra_error(tol), max_denominator);
  }
  out.e2_star = narrow<double>(e.e2_star);
  out.e4 = narrow<double>(e.e4);
  out.e6 = narrow<double>(e.e6);
  return out;
}

/// ω0² solving the closed form for c_n = c at the given Eisenstein values,
/// n ∈ {0, 1, 2}. The roots for n = 1, 2 are principal:
/// c0ω² = −E2*/24, c1ω⁴ = (E4 − E2*²)/288, c2ω⁶ = −E6/864 − 12ab − 16a³
/// with a = c0ω², b = c1ω⁴.
inline WideComplex omega_sq_from_pin(const EisensteinTriple& e, unsigned n, const BigRational& c) {
  if (c.is_zero()) raise(Errc::InvalidArgument, "cannot pin omega from a zero coefficient");
  WideComplex cw = WideComplex::from_rational(c);
  WideComplex a = WideComplex(-1) * e.e2_star / WideComplex(24);
  WideComplex b = (e.e4 - e.e2_star * e.e2_star) / WideComplex(288);
  WideComplex v;
  switch (n) {
    case 0: v = a / cw; break;
    case 1: v = sqrt(b / cw); break;
    case 2:
      v = cbrt((WideComplex(-1) * e.e6 / WideComplex(864) - WideComplex(12) * a * b - WideComplex(16) * a * a * a) / cw);
      break;
    default: raise(Errc::InvalidArgument, "omega can be pinned from c0, c1 or c2 only");
  }
  if (v.contains_zero()) raise(Errc::InvalidArgument, "pinned omega^2 vanishes");
  return v;
}

/// t(τ) = −4π ω0² Im τ0 (τ0 − τ)/(τ̄0 − τ), the inverse of A^(τ0,ω0).
inline ApproxComplex tau_to_t(const FrobeniusPoint& P, const ApproxComplex& tau) {
  ApproxComplex t0 = P.tau0_approx();
  ApproxComplex den = t0.conj() - tau;
  if (den.contains_zero()) raise(Errc::PoleAtInput, "tau = conj(tau0)");
  ApproxComplex w = P.omega0();
  ApproxComplex k = ApproxComplex(-4 * M_PI, 0.0, 4 * M_PI * detail::unit_roundoff<double>()) * w * w *
                    ApproxComplex(t0.im(), 0.0, t0.err());
  return k * (t0 - tau) / den;
}

/// F = ½ t1² t + t1 t2² + t2⁴ f^(τ0,ω0)(t) for |t| below the domain radius.
inline ApproxComplex potential_eval(const FrobeniusPoint& P, const FlatPoint& pt) {
  if (!(pt.t.abs_upper() < domain_radius(P))) raise(Errc::OutsideDomain, "|t| must be below the domain radius");
  return potential_from(frobenius_solution(P), pt);
}

/// (τ0, ω0) ↦ (Aτ0, (cτ0 + d)ω0) for A with det 1.
inline FrobeniusPoint sl2_act(const ExactMoebius& A, const FrobeniusPoint& P) {
  if (A.det() != BigRational(1)) raise(Errc::InvalidArgument, "matrix must have determinant 1");
  ApproxComplex factor = automorphy_factor(A, P.tau0_approx());
  if (factor.contains_zero()) raise(Errc::PoleAtInput, "c tau0 + d = 0");
  Point tau1 = std::visit(
      [&](const auto& v) -> Point { return moebius_apply(A, v); }, P.tau0());
  return {tau1, factor * P.omega0()};
}

/// Candidates for ω0² = (aπ²)⁻¹ with a²·g2(τ0) = g2 and a³·g3(τ0) = g3, where
/// g2(τ) = (4π⁴/3)E4 and g3(τ) = (8π⁶/27)E6.
///
/// g3 = 0 leaves the sign of a free and returns both (principal root first);
/// g2 = 0 returns the principal cube root only.
inline std::vector<ApproxComplex> pin_omega(const Point& tau0, const CurveModel& curve, double tol = 1e-9) {
  EisensteinTriple e = eisenstein_triple(tau0, 1e-15);
  WideComplex pi = detail::wide_pi();
  WideComplex pi2 = pi * pi;
  WideComplex pi4 = pi2 * pi2;
  WideComplex G2 = WideComplex::from_rational(BigRational(4, 3)) * pi4 * e.e4;
  WideComplex G3 = WideComplex::from_rational(BigRational(8, 27)) * pi4 * pi2 * e.e6;
  WideComplex g2 = WideComplex::from_rational(curve.g2());
  WideComplex g3 = WideComplex::from_rational(curve.g3());

  std::vector<WideComplex> as;
  if (!curve.g2().is_zero() && !curve.g3().is_zero()) {
    if (G2.contains_zero() || G3.contains_zero()) raise(Errc::Inconsistent, "tau0 and curve disagree");
    as.push_back(g3 * G2 / (g2 * G3));
  } else if (curve.g3().is_zero()) {
    if (G2.contains_zero()) raise(Errc::Inconsistent, "tau0 and curve disagree");
    WideComplex a = sqrt(g2 / G2);
    as.push_back(a);
    as.push_back(WideComplex(-1) * a);
  } else {
    if (G3.contains_zero()) raise(Errc::Inconsistent, "tau0 and curve disagree");
    as.push_back(cbrt(g3 / G3));
  }

  auto scale2 = std::max(1.0, static_cast<double>(g2.mag()));
  auto scale3 = std::max(1.0, static_cast<double>(g3.mag()));
  std::vector<ApproxComplex> out;
  for (const auto& a : as) {
    double r2 = static_cast<double>((a * a * G2 - g2).mag());
    double r3 = static_cast<double>((a * a * a * G3 - g3).mag());
    if (r2 > tol * scale2 || r3 > tol * scale3) raise(Errc::Inconsistent, "no scaling a matches both g2 and g3");
    out.push_back(narrow<double>(WideComplex(1) / (a * pi2)));
  }
  return out;
}

}  // namespace frob3
