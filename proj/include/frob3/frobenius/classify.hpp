#pragma once

#include <cmath>
#include <optional>

#include "frob3/catalog/catalog.hpp"
#include "frob3/exactnum/reduce.hpp"
#include "frob3/frobenius/construction.hpp"

namespace frob3 {

struct IsomorphismResult {
  bool isomorphic;
  // E2*/ω², E4/ω⁴, E6/ω⁶ at each point
  std::array<ApproxComplex, 3> invariants0, invariants1;
  std::optional<ExactMoebius> witness;  // integer A with A·τ0 = τ1, exact inputs only
  std::optional<int> k;                 // 4 on the i-orbit, 6 on the ρ-orbit, 2 otherwise
};

namespace detail {

inline std::array<ApproxComplex, 3> normalized_invariants(const FrobeniusPoint& P) {
  EisensteinTriple e = eisenstein_triple(P.tau0(), 1e-15);
  WideComplex w2 = wide_omega_sq(P);
  WideComplex w4 = w2 * w2;
  return {narrow<double>(e.e2_star / w2), narrow<double>(e.e4 / w4), narrow<double>(e.e6 / (w4 * w2))};
}

}  // namespace detail

/// Compares E2*/ω², E4/ω⁴ and E6/ω⁶ at both points.
inline IsomorphismResult are_isomorphic(const FrobeniusPoint& P0, const FrobeniusPoint& P1, double tol = 1e-9) {
  IsomorphismResult r{true, detail::normalized_invariants(P0), detail::normalized_invariants(P1), std::nullopt,
                      std::nullopt};
  for (int n = 0; n < 3; ++n) {
    const auto& a = r.invariants0[n];
    const auto& b = r.invariants1[n];
    double scale = std::max(1.0, static_cast<double>(std::max(a.mag(), b.mag())));
    double gap = static_cast<double>((a - b).mag());
    if (gap > a.err() + b.err() + tol * scale) r.isomorphic = false;
  }
  if (r.isomorphic && P0.exact() && P1.exact()) {
    auto red0 = fundamental_domain_reduce(std::get<QuadraticPoint>(P0.tau0()));
    auto red1 = fundamental_domain_reduce(std::get<QuadraticPoint>(P1.tau0()));
    if (red0.tau == red1.tau) {
      r.witness = red1.A.inverse() * red0.A;
      if (red0.tau == QuadraticPoint::i()) r.k = 4;
      else if (red0.tau == QuadraticPoint::rho()) r.k = 6;
      else r.k = 2;
    }
  }
  return r;
}

/// True exactly on the SL(2,Z)-orbits of i and ρ.
inline bool has_symmetry(const QuadraticPoint& tau) {
  auto red = fundamental_domain_reduce(tau);
  return red.tau == QuadraticPoint::i() || red.tau == QuadraticPoint::rho();
}

/// Approximate input: j(τ) within tol·max(1, |j|) of 0 or 1728.
inline bool has_symmetry(const ApproxComplex& tau, double tol = 1e-9) {
  ApproxComplex j = j_invariant(Point(tau), 1e-15);
  auto near = [&](double v) {
    double gap = static_cast<double>((j - ApproxComplex(v)).mag());
    return gap <= j.err() + tol * std::max(1.0, std::abs(v));
  };
  return near(0.0) || near(1728.0);
}

inline bool has_symmetry(const Point& tau, double tol = 1e-9) {
  if (auto* q = std::get_if<QuadraticPoint>(&tau)) return has_symmetry(*q);
  return has_symmetry(std::get<ApproxComplex>(tau), tol);
}

enum class Rationality { DefinedOverQ, NotRecognized };

struct RationalityVerdict {
  Rationality verdict;
  CoeffTriple coefficients;
  std::optional<std::array<BigRational, 3>> exact;
};

/// DefinedOverQ when c0, c1, c2 all recognize as rationals. A failure to
/// recognize is reported as such and never as irrationality.
inline RationalityVerdict rationality_verdict(const FrobeniusPoint& P, const BigInt& max_denominator = 1000000,
                                              double tol = 1e-9) {
  CoeffTriple c = frob_coefficients(P, tol, max_denominator);
  RationalityVerdict v{Rationality::NotRecognized, c, std::nullopt};
  if (c.recognized[0] && c.recognized[1] && c.recognized[2]) {
    v.verdict = Rationality::DefinedOverQ;
    v.exact = std::array<BigRational, 3>{*c.recognized[0], *c.recognized[1], *c.recognized[2]};
  }
  return v;
}

enum class CMStatus { Matched, CMNotOverQ };

struct CMClassification {
  CMStatus status;
  QuadraticPoint reduced;
  ExactMoebius reduction;                 // reduction · τ0 = reduced
  std::optional<std::size_t> row;         // index into load_catalog()
};

/// Every quadratic point has CM; it is defined over Q exactly when its
/// reduced representative is one of the 13 catalog moduli.
inline CMClassification classify_cm(const QuadraticPoint& tau0) {
  auto red = fundamental_domain_reduce(tau0);
  const auto& rows = load_catalog();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (fundamental_domain_reduce(rows[i].modulus).tau == red.tau) return {CMStatus::Matched, red.tau, red.A, i};
  }
  return {CMStatus::CMNotOverQ, red.tau, red.A, std::nullopt};
}

struct WeakSymmetryEvidence {
  bool weak_symmetry;
  RationalityVerdict rationality;
  CMClassification cm;
};

/// Defined over Q and CM over Q.
inline WeakSymmetryEvidence weak_symmetry(const FrobeniusPoint& P, const BigInt& max_denominator = 1000000,
                                          double tol = 1e-9) {
  if (!P.exact()) raise(Errc::InvalidArgument, "weak symmetry needs an exact tau0");
  auto rat = rationality_verdict(P, max_denominator, tol);
  auto cm = classify_cm(std::get<QuadraticPoint>(P.tau0()));
  bool ok = rat.verdict == Rationality::DefinedOverQ && cm.status == CMStatus::Matched;
  return {ok, std::move(rat), std::move(cm)};
}

}  // namespace frob3
