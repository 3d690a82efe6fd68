#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <variant>

#include "frob3/error.hpp"
#include "frob3/exactnum/approx_complex.hpp"
#include "frob3/exactnum/moebius.hpp"
#include "frob3/modform/eisenstein.hpp"
#include "frob3/wdvv/constant_orbit.hpp"
#include "frob3/wdvv/jet.hpp"
#include "frob3/wdvv/taylor.hpp"

namespace frob3 {

enum class SolutionKind { SpecialTau, SpecialT, SpecialScaled, Constant, Series, Transformed };

using SolutionJet = Jet<ApproxComplex, 4>;

/// Jet of f^A(t) = det(A)/(ct+d)²·f((at+b)/(ct+d)) + c/(2(ct+d)).
/// `inner(u0)` must return the jet of f around u0.
template <class S, class InnerJet>
Jet<S, 4> gl2_jet(const Moebius<S>& A, const S& t, InnerJet&& inner) {
  using J = Jet<S, 4>;
  J v = J::variable(t);
  J den = A.c() * v + J::constant(A.d());
  bool pole;
  if constexpr (std::is_same_v<S, BigRational>) pole = den[0].is_zero();
  else pole = den[0].contains_zero();
  if (pole) raise(Errc::PoleAtInput, "c t + d = 0");
  J u = (A.a() * v + J::constant(A.b())) / den;
  J fu = inner(u[0]).compose(u);
  return A.det() * (fu / (den * den)) + (A.c() / S(2)) * (J::constant(S(1)) / den);
}

/// A solution of the WDVV ODE that can be evaluated with derivatives up to order 3.
///
/// Special kinds wrap f∞(τ) = −E2(τ)/24: `SpecialTau` in the τ variable
/// (solves the τ-form of the ODE), `SpecialT` as f∞(t/(2πi)) (solves the
/// ODE in t, domain Re t < 0) and `SpecialScaled` as 2πi·f∞(τ) (solves the
/// ODE with t = τ). Their derivatives come from the Ramanujan identities.
class AnalyticSolution {
 public:
  static AnalyticSolution f_infinity_tau() { return AnalyticSolution(Node{SolutionKind::SpecialTau, {}}); }
  static AnalyticSolution f_infinity_t() { return AnalyticSolution(Node{SolutionKind::SpecialT, {}}); }
  static AnalyticSolution f_infinity_scaled() { return AnalyticSolution(Node{SolutionKind::SpecialScaled, {}}); }

  static AnalyticSolution constant(const ConstantParams<ApproxComplex>& p) {
    return AnalyticSolution(Node{SolutionKind::Constant, p});
  }
  /// Truncated series; evaluation is the polynomial itself, defined for |t| < radius.
  static AnalyticSolution series(RationalTaylor f, double radius) {
    if (!(radius > 0)) raise(Errc::InvalidArgument, "radius must be positive");
    return AnalyticSolution(Node{SolutionKind::Series, SeriesData{std::move(f), radius}});
  }
  static AnalyticSolution transformed(const ApproxMoebius& A, const AnalyticSolution& inner) {
    return AnalyticSolution(Node{SolutionKind::Transformed, TransformedData{A, inner.node_}});
  }

  SolutionKind kind() const { return node_->kind; }

  const ConstantParams<ApproxComplex>& params() const { return std::get<ConstantParams<ApproxComplex>>(node_->data); }
  const RationalTaylor& taylor() const { return std::get<SeriesData>(node_->data).f; }
  double radius() const { return std::get<SeriesData>(node_->data).radius; }
  const ApproxMoebius& matrix() const { return std::get<TransformedData>(node_->data).A; }
  AnalyticSolution inner() const { return AnalyticSolution(std::get<TransformedData>(node_->data).inner); }

  /// Jet (f, f′, f″/2, f‴/6) at t.
  SolutionJet jet(const ApproxComplex& t) const { return jet_of(*node_, t); }

  /// Derivative values f, f′, f″, f‴ at t.
  std::array<ApproxComplex, 4> derivatives(const ApproxComplex& t) const { return jet(t).derivatives(); }

  ApproxComplex eval(const ApproxComplex& t, unsigned order = 0) const {
    if (order > 3) raise(Errc::InvalidArgument, "derivative order must be <= 3");
    return jet(t).derivative(order);
  }

 private:
  struct Node;
  struct SeriesData {
    RationalTaylor f;
    double radius;
  };
  struct TransformedData {
    ApproxMoebius A;
    std::shared_ptr<const Node> inner;
  };
  struct Node {
    SolutionKind kind;
    std::variant<std::monostate, ConstantParams<ApproxComplex>, SeriesData, TransformedData> data;
  };

  explicit AnalyticSolution(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  explicit AnalyticSolution(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static SolutionJet special_jet(SolutionKind kind, const ApproxComplex& t) {
    WideComplex two_pi_i(WideReal(0), 2 * pi_v<WideReal>(),
                         detail::round_up(WideReal(2 * detail::unit_roundoff<WideReal>() * 2 * pi_v<WideReal>())));
    WideComplex tw = widen<WideReal>(t);
    WideComplex tau = kind == SolutionKind::SpecialT ? tw / two_pi_i : tw;
    if (!(tau.im() > tau.err())) raise(Errc::OutsideDomain, "f-infinity needs Im(tau) > 0");
    EisensteinTriple e = eisenstein_triple(PreparedTau::from(narrow<double>(tau)), 1e-15);
    auto d = ramanujan_e2_derivatives(e.e2, e.e4, e.e6);
    std::array<ApproxComplex, 4> vals;
    WideComplex scale = kind == SolutionKind::SpecialScaled ? two_pi_i : WideComplex(1);
    for (int m = 0; m < 4; ++m) {
      vals[m] = narrow<double>(scale * (WideComplex(-1) * d[m] / WideComplex(24)));
      if (kind != SolutionKind::SpecialT) scale = scale * two_pi_i;
    }
    return SolutionJet::from_derivatives(vals);
  }

  static SolutionJet series_jet(const SeriesData& s, const ApproxComplex& t) {
    if (!(t.abs_upper() < s.radius)) raise(Errc::OutsideDomain, "|t| must be below the series radius");
    const auto& c = s.f.coeffs();
    std::array<ApproxComplex, 4> vals;
    for (std::size_t k = 0; k < 4; ++k) {
      // Σ_{n≥k} c_n t^{n−k}/(n−k)!  by Horner from the top
      ApproxComplex acc(0);
      for (std::size_t n = c.size(); n-- > k;) {
        acc = acc * t / ApproxComplex(static_cast<int>(n - k + 1)) + ApproxComplex::from_rational(c[n]);
      }
      vals[k] = c.size() > k ? acc : ApproxComplex(0);
    }
    return SolutionJet::from_derivatives(vals);
  }

  static SolutionJet jet_of(const Node& n, const ApproxComplex& t) {
    switch (n.kind) {
      case SolutionKind::SpecialTau:
      case SolutionKind::SpecialT:
      case SolutionKind::SpecialScaled: return special_jet(n.kind, t);
      case SolutionKind::Constant: return constant_jet(std::get<ConstantParams<ApproxComplex>>(n.data), t);
      case SolutionKind::Series: return series_jet(std::get<SeriesData>(n.data), t);
      case SolutionKind::Transformed: {
        const auto& d = std::get<TransformedData>(n.data);
        return gl2_jet(d.A, t, [&](const ApproxComplex& u) { return jet_of(*d.inner, u); });
      }
    }
    raise(Errc::InvalidArgument, "unknown solution kind");
  }

  std::shared_ptr<const Node> node_;
};

inline AnalyticSolution constant_solution(const ConstantParams<ApproxComplex>& p) { return AnalyticSolution::constant(p); }

inline AnalyticSolution constant_solution(const ConstantSolutionParams& p) {
  return AnalyticSolution::constant({ApproxComplex::from_rational(p.alpha), ApproxComplex::from_rational(p.beta)});
}

/// Series solution; without an explicit radius the distance to the pole of
/// the closed form is used, which is only known on the constant orbit.
inline AnalyticSolution series_solution(const RationalTaylor& f, std::optional<double> radius = std::nullopt) {
  if (radius) return AnalyticSolution::series(f, *radius);
  if (f.size() < 3) raise(Errc::InvalidArgument, "need c0, c1, c2");
  if (!cubic_discriminant(f[0], f[1], f[2]).is_zero())
    raise(Errc::InvalidArgument, "radius unknown off the constant orbit; pass it explicitly");
  auto p = recover_alpha_beta(f[0], f[1], f[2]);
  double r = p.beta.is_zero() ? std::numeric_limits<double>::max() : 1.0 / std::abs(p.beta.to_double());
  return AnalyticSolution::series(f, r);
}

inline AnalyticSolution gl2_apply(const ApproxMoebius& A, const AnalyticSolution& f) {
  if (A.det().contains_zero()) raise(Errc::SingularMatrix, "det(A) = 0");
  return AnalyticSolution::transformed(A, f);
}

inline AnalyticSolution gl2_apply(const ExactMoebius& A, const AnalyticSolution& f) {
  return gl2_apply(A.to_approx(), f);
}

}  // namespace frob3
