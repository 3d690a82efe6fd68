#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string_view>
#include <variant>

#include "frob3/error.hpp"
#include "frob3/exactnum/approx_complex.hpp"
#include "frob3/exactnum/moebius.hpp"
#include "frob3/exactnum/quadratic_point.hpp"
#include "frob3/exactnum/reduce.hpp"
#include "frob3/modform/q_series.hpp"

namespace frob3 {

/// Either an exact quadratic point or an approximate complex one.
using Point = std::variant<QuadraticPoint, ApproxComplex>;

inline ApproxComplex embed(const Point& p) {
  if (auto* q = std::get_if<QuadraticPoint>(&p)) return q->embed();
  return std::get<ApproxComplex>(p);
}

/// τ together with its fundamental-domain representative, in wide precision.
struct PreparedTau {
  WideComplex tau;      // original point
  WideComplex reduced;  // A·tau
  WideComplex im_reduced;
  ExactMoebius A = ExactMoebius::identity();
  WideComplex factor;   // c·tau + d

  static PreparedTau from(const QuadraticPoint& t) {
    auto red = fundamental_domain_reduce(t);
    PreparedTau p;
    p.tau = t.embed<WideReal>();
    p.reduced = red.tau.embed<WideReal>();
    WideReal y = red.tau.sqrt_coeff().to<WideReal>() * sqrt(WideReal(red.tau.D()));
    p.im_reduced = WideComplex(y, WideReal(0), detail::round_up(WideReal(2 * detail::unit_roundoff<WideReal>() * y)));
    p.A = red.A;
    p.factor = automorphy_factor(red.A, p.tau);
    return p;
  }

  static PreparedTau from(const ApproxComplex& t) {
    WideComplex w = widen<WideReal>(t);
    if (!(w.im() > w.err())) raise(Errc::NotUpperHalfPlane, "Im(tau) must be positive");
    auto red = fundamental_domain_reduce(w);
    PreparedTau p;
    p.tau = w;
    p.reduced = red.tau;
    p.im_reduced = WideComplex(red.tau.im(), WideReal(0), red.tau.err());
    p.A = red.A;
    p.factor = automorphy_factor(red.A, w);
    return p;
  }

  static PreparedTau from(const Point& t) {
    return std::visit([](const auto& v) { return from(v); }, t);
  }
};

/// E2, E4, E6 and E2* at one point, in wide precision.
struct EisensteinTriple {
  WideComplex e2, e4, e6, e2_star;
};

namespace detail {

inline WideComplex wide_pi() {
  WideReal p = pi_v<WideReal>();
  return {p, WideReal(0), round_up(WideReal(unit_roundoff<WideReal>() * p))};
}

// Series target for a weight-w value that is later divided by factor^w.
inline double series_target(double tol, const WideComplex& factor, int w) {
  double f = static_cast<double>(factor.abs_lower());
  double t = tol * std::pow(std::min(f, 1.0), w) / 16;
  return std::clamp(t, 1e-300, 1e-30);
}

}  // namespace detail

/// Values at the reduced point transported back through the weight laws,
/// including the anomaly term of E2.
inline EisensteinTriple eisenstein_triple(const PreparedTau& p, double tol = 1e-12) {
  WideComplex pi = detail::wide_pi();
  const WideComplex& j = p.factor;
  EisensteinTriple r;
  WideComplex e2r = q_series(2, 0, p.reduced, detail::series_target(tol, j, 2));
  WideComplex e4r = q_series(4, 0, p.reduced, detail::series_target(tol, j, 4));
  WideComplex e6r = q_series(6, 0, p.reduced, detail::series_target(tol, j, 6));
  WideComplex star_r = e2r - WideComplex(3) / (pi * p.im_reduced);
  WideComplex j2 = j * j;
  WideComplex c = WideComplex::from_rational(p.A.c());
  r.e2 = e2r / j2 + WideComplex(6) * WideComplex::i() * c / (pi * j);
  r.e4 = e4r / (j2 * j2);
  r.e6 = e6r / (j2 * j2 * j2);
  r.e2_star = star_r / j2;
  return r;
}

inline EisensteinTriple eisenstein_triple(const Point& tau, double tol = 1e-12) {
  return eisenstein_triple(PreparedTau::from(tau), tol);
}

struct EisensteinValue {
  int weight;
  ApproxComplex tau;
  ApproxComplex value;
};

/// E_k(τ) for k ∈ {2, 4, 6}.
inline EisensteinValue eisenstein(int k, const Point& tau, double tol = 1e-12) {
  detail::eisenstein_leading(k);
  EisensteinTriple t = eisenstein_triple(tau, tol);
  const WideComplex& v = k == 2 ? t.e2 : (k == 4 ? t.e4 : t.e6);
  return {k, embed(tau), narrow<double>(v)};
}

/// E2*(τ) = E2(τ) − 3/(π Im τ).
inline ApproxComplex e2_star(const Point& tau, double tol = 1e-12) {
  return narrow<double>(eisenstein_triple(tau, tol).e2_star);
}

/// Order 1: (E2*² − E4)/12. Order 2: (E6 − (3/2)E2*E4 + (1/2)E2*³)/36.
inline WideComplex ahd_e2_star_wide(unsigned order, const EisensteinTriple& t) {
  const WideComplex& s = t.e2_star;
  if (order == 1) return (s * s - t.e4) / WideComplex(12);
  if (order == 2) {
    WideComplex half = WideComplex::from_rational(BigRational(1, 2));
    WideComplex three_halves = WideComplex::from_rational(BigRational(3, 2));
    return (t.e6 - three_halves * s * t.e4 + half * s * s * s) / WideComplex(36);
  }
  raise(Errc::InvalidArgument, "order must be 1 or 2");
}

inline ApproxComplex ahd_e2_star(unsigned order, const Point& tau, double tol = 1e-12) {
  if (order != 1 && order != 2) raise(Errc::InvalidArgument, "order must be 1 or 2");
  return narrow<double>(ahd_e2_star_wide(order, eisenstein_triple(tau, tol)));
}

/// D^j E2 for j = 0..3 from E2, E4, E6 by the Ramanujan identities
/// D E2 = (E2² − E4)/12, D E4 = (E2E4 − E6)/3, D E6 = (E2E6 − E4²)/2.
template <class Scalar>
std::array<Scalar, 4> ramanujan_e2_derivatives(const Scalar& e2, const Scalar& e4, const Scalar& e6) {
  std::array<Scalar, 4> a{e2, Scalar(0), Scalar(0), Scalar(0)};
  std::array<Scalar, 4> b{e4, Scalar(0), Scalar(0), Scalar(0)};
  std::array<Scalar, 4> c{e6, Scalar(0), Scalar(0), Scalar(0)};
  const int binom[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
  for (int j = 0; j < 3; ++j) {
    Scalar aa(0), ab(0), ac(0), bb(0);
    for (int i = 0; i <= j; ++i) {
      Scalar w(binom[j][i]);
      aa += w * a[i] * a[j - i];
      ab += w * a[i] * b[j - i];
      ac += w * a[i] * c[j - i];
      bb += w * b[i] * b[j - i];
    }
    a[j + 1] = (aa - b[j]) / Scalar(12);
    b[j + 1] = (ab - c[j]) / Scalar(3);
    c[j + 1] = (ac - bb) / Scalar(2);
  }
  return a;
}

/// j(τ) = 1728 E4³/(E4³ − E6²), evaluated at the reduced point.
/// Series truncation is held below min(tol, 1e-33) so the cancellation in
/// the denominator near the cusp stays resolved.
inline ApproxComplex j_invariant(const Point& tau, double tol = 1e-12) {
  PreparedTau p = PreparedTau::from(tau);
  double target = std::min(tol, 1e-33);
  WideComplex e4 = q_series(4, 0, p.reduced, target);
  WideComplex e6 = q_series(6, 0, p.reduced, target);
  WideComplex e43 = e4 * e4 * e4;
  WideComplex den = e43 - e6 * e6;
  if (den.contains_zero()) raise(Errc::PoleAtInput, "E4^3 - E6^2 is not bounded away from zero");
  return narrow<double>(WideComplex(1728) * e43 / den);
}

enum class FormKind { E2, E4, E6, Star };

inline FormKind parse_form_kind(std::string_view s) {
  if (s == "2") return FormKind::E2;
  if (s == "4") return FormKind::E4;
  if (s == "6") return FormKind::E6;
  if (s == "star") return FormKind::Star;
  raise(Errc::ParseError, "form must be 2, 4, 6 or star");
}

/// |LHS − RHS| of the transformation law of the given form under an integer
/// matrix A with det 1. Both sides are evaluated independently.
inline double verify_transform(FormKind kind, const ExactMoebius& A, const Point& tau, double tol = 1e-12) {
  if (!is_integral(A) || A.det() != BigRational(1)) raise(Errc::InvalidArgument, "A must be in SL(2,Z)");
  WideComplex z = PreparedTau::from(tau).tau;
  WideComplex j = automorphy_factor(A, z);
  if (j.contains_zero()) raise(Errc::PoleAtInput, "c tau + d = 0");
  Point image = std::visit([&](const auto& v) -> Point { return moebius_apply(A, v); }, tau);
  EisensteinTriple lhs = eisenstein_triple(image, tol);
  EisensteinTriple rhs = eisenstein_triple(tau, tol);
  WideComplex j2 = j * j;
  WideComplex diff;
  switch (kind) {
    case FormKind::E2: {
      WideComplex c = WideComplex::from_rational(A.c());
      diff = lhs.e2 - (j2 * rhs.e2 - WideComplex(6) * WideComplex::i() * c * j / detail::wide_pi());
      break;
    }
    case FormKind::E4: diff = lhs.e4 - j2 * j2 * rhs.e4; break;
    case FormKind::E6: diff = lhs.e6 - j2 * j2 * j2 * rhs.e6; break;
    case FormKind::Star: diff = lhs.e2_star - j2 * rhs.e2_star; break;
  }
  return static_cast<double>(diff.mag());
}

}  // namespace frob3
