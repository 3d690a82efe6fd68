#pragma once

#include <cmath>
#include <limits>

#include "frob3/error.hpp"
#include "frob3/exactnum/approx_complex.hpp"
#include "frob3/modform/divisor.hpp"

namespace frob3 {

namespace detail {

inline int eisenstein_leading(int k) {
  switch (k) {
    case 2: return -24;
    case 4: return 240;
    case 6: return -504;
    default: raise(Errc::InvalidArgument, "weight must be 2, 4 or 6");
  }
}

struct TailPlan {
  unsigned terms;  // sum n = 1 .. terms
  double bound;    // bound on the discarded tail
};

// Picks N with |c|·Σ_{n>N} n^p x^n ≤ target, where log_x = log x < 0.
// Uses the ratio majorant (N+1)^p x^(N+1)/(1-ρ), ρ = ((N+2)/(N+1))^p x.
inline TailPlan plan_tail(double abs_c, unsigned p, double log_x, double target) {
  const double log_target = std::log(target);
  const double log_c = std::log(abs_c);
  for (unsigned n = 0; n < 2000000; ++n) {
    double n1 = n + 1.0;
    double log_rho = p * std::log1p(1.0 / n1) + log_x;
    if (log_rho >= -1e-3) continue;
    double log_bound = log_c + p * std::log(n1) + n1 * log_x - std::log(-std::expm1(log_rho));
    if (log_bound <= log_target) return {n, std::exp(log_bound) * 1.01};
  }
  raise(Errc::CeilingExceeded, "q-series needs too many terms; Im(tau) is too small");
}

// Σ_{n≥1} n^p x^n in double, rounded upward.
inline double power_majorant(unsigned p, double log_x) {
  TailPlan plan = plan_tail(1.0, p, log_x, 1e-300);
  double s = 0;
  for (unsigned n = 1; n <= plan.terms; ++n) s += std::exp(p * std::log(double(n)) + n * log_x);
  return (s + plan.bound) * 1.0001;
}

}  // namespace detail

/// D^m E_k(τ), D = (1/2πi) d/dτ, by direct summation of the q-expansion
/// (term-wise differentiated when m > 0).
///
/// The radius covers truncation (below `target`), floating rounding and the
/// radius of τ itself. Intended for points with moderate Im τ; callers
/// reduce to the fundamental domain first.
template <class Real>
BasicApproxComplex<Real> q_series(int k, unsigned m, const BasicApproxComplex<Real>& tau, double target) {
  using C = BasicApproxComplex<Real>;
  using std::cos;
  using std::exp;
  using std::sin;
  const int lead = detail::eisenstein_leading(k);
  if (!(tau.im() > tau.err())) raise(Errc::NotUpperHalfPlane, "Im(tau) is not bounded away from zero");
  const Real two_pi = 2 * pi_v<Real>();
  const double y = static_cast<double>(tau.im());
  const unsigned p = static_cast<unsigned>(k) + m;
  // σ_{k-1}(n) ≤ n^{k}, so n^m σ_{k-1}(n) ≤ n^{k+m}
  detail::TailPlan plan = detail::plan_tail(std::abs(lead), p, -2 * M_PI * y * (1 - 1e-15), target);

  Real mod = exp(Real(-two_pi * tau.im()));
  Real arg = two_pi * tau.re();
  Real u = detail::unit_roundoff<Real>();
  Real qerr = (16 + 8 * two_pi * tau.mag()) * u * mod;
  C q(mod * cos(arg), mod * sin(arg), detail::round_up(qerr));

  C acc(0);
  C qn(1);
  for (unsigned n = 1; n <= plan.terms; ++n) {
    qn *= q;
    BigInt coef = divisor_sum(static_cast<unsigned>(k - 1), n) * boost::multiprecision::pow(BigInt(n), m);
    acc += C::from_rational(BigRational(coef)) * qn;
  }
  C result = C::from_rational(BigRational(lead)) * acc;
  if (m == 0) result += C(1);

  Real extra = Real(plan.bound);
  if (tau.err() > 0) {
    // mean value bound over the input disc: |d/dτ| ≤ 2π |c| Σ n^{p+1} x_max^n
    double y_low = y - static_cast<double>(tau.err()) * (1 + 1e-12);
    if (!(y_low > 0)) raise(Errc::NotUpperHalfPlane, "input disc reaches the real axis");
    double deriv = 2 * M_PI * std::abs(lead) * detail::power_majorant(p + 1, -2 * M_PI * y_low * (1 - 1e-15));
    extra += Real(deriv) * tau.err();
  }
  return result.with_extra_error(extra);
}

}  // namespace frob3
