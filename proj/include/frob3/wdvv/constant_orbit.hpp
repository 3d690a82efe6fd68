#pragma once

#include <array>
#include <vector>

#include "frob3/error.hpp"
#include "frob3/exactnum/big_rational.hpp"
#include "frob3/exactnum/moebius.hpp"
#include "frob3/wdvv/jet.hpp"

namespace frob3 {

/// Parameters of f(t) = α/(1+βt)² + β/(2(1+βt)).
template <class S>
struct ConstantParams {
  S alpha;
  S beta;
};

using ConstantSolutionParams = ConstantParams<BigRational>;

template <class S>
bool operator==(const ConstantParams<S>& a, const ConstantParams<S>& b) {
  return a.alpha == b.alpha && a.beta == b.beta;
}

/// Jet of the constant-orbit solution at t. Raises PoleAtInput at t = −1/β.
template <class S, std::size_t N = 4>
Jet<S, N> constant_jet(const ConstantParams<S>& p, const S& t) {
  using J = Jet<S, N>;
  J s = J::constant(S(1)) + p.beta * J::variable(t);
  bool pole;
  if constexpr (std::is_same_v<S, BigRational>) pole = s[0].is_zero();
  else pole = s[0].contains_zero();
  if (pole) raise(Errc::PoleAtInput, "t = -1/beta");
  J one = J::constant(S(1));
  return p.alpha * (one / (s * s)) + (p.beta / S(2)) * (one / s);
}

/// (c0, c1, c2) of the constant-orbit solution.
inline std::array<BigRational, 3> constant_coefficients(const ConstantSolutionParams& p) {
  const BigRational& a = p.alpha;
  const BigRational& b = p.beta;
  return {a + b / BigRational(2), BigRational(-2) * a * b - b * b / BigRational(2),
          BigRational(6) * a * b * b + b * b * b};
}

/// c_n = (−β)ⁿ [α (n+1)! + n! β/2].
inline BigRational constant_coefficient(const ConstantSolutionParams& p, unsigned n) {
  BigInt fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact *= i;
  BigRational nf(fact);
  return (-p.beta).pow(n) * (p.alpha * nf * BigRational(static_cast<long long>(n) + 1) + nf * p.beta / BigRational(2));
}

/// Δ = 32(c1 + 2c0²)³ − (c2 + 12c1c0 + 16c0³)².
inline BigRational cubic_discriminant(const BigRational& c0, const BigRational& c1, const BigRational& c2) {
  BigRational u = c1 + BigRational(2) * c0 * c0;
  BigRational v = c2 + BigRational(12) * c1 * c0 + BigRational(16) * c0.pow(3);
  return BigRational(32) * u.pow(3) - v * v;
}

namespace detail {

using Poly = std::vector<BigRational>;  // ascending powers

inline void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    BigRational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

inline Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/// Inverts the coefficient map on the degenerate locus Δ = 0.
///
/// 4x³ − 12c0x² − 6c1x − c2/2 = ½(2x − 6α − β)(2x − β)²; the repeated root
/// β/2 is read off gcd(P, P′), which has rational coefficients, so the root
/// never leaves Q for rational input.
inline ConstantSolutionParams recover_alpha_beta(const BigRational& c0, const BigRational& c1, const BigRational& c2) {
  if (!cubic_discriminant(c0, c1, c2).is_zero()) raise(Errc::NotDegenerate, "cubic discriminant is nonzero");
  detail::Poly P{-c2 / BigRational(2), BigRational(-6) * c1, BigRational(-12) * c0, BigRational(4)};
  detail::Poly dP{P[1], BigRational(2) * P[2], BigRational(3) * P[3]};
  detail::Poly g = detail::poly_gcd(P, dP);
  BigRational root;
  if (g.size() == 2) {
    root = -g[0] / g[1];
  } else if (g.size() == 3) {
    // triple root: g ∝ (x − r)²
    root = -g[1] / (BigRational(2) * g[2]);
  } else {
    raise(Errc::IrrationalRoot, "repeated root not found over Q");
  }
  BigRational beta = BigRational(2) * root;
  ConstantSolutionParams p{c0 - beta / BigRational(2), beta};
  auto check = constant_coefficients(p);
  if (check[0] != c0 || check[1] != c1 || check[2] != c2) raise(Errc::Inconsistent, "round trip failed");
  return p;
}

/// Image of the constant-orbit parameters under t ↦ (at+b)/(ct+d):
/// β′ = (βa + c)/(βb + d), α′ = det·α/(βb + d)².
template <class S>
ConstantParams<S> transform_constant(const Moebius<S>& A, const ConstantParams<S>& p) {
  S C = p.beta * A.a() + A.c();
  S D = p.beta * A.b() + A.d();
  return {A.det() * p.alpha / (D * D), C / D};
}

}  // namespace frob3
