#pragma once

#include "frob3/error.hpp"
#include "frob3/exactnum/approx_complex.hpp"
#include "frob3/exactnum/quadratic_point.hpp"
#include "frob3/modform/eisenstein.hpp"

namespace frob3 {

/// The pair (τ0, ω0) labelling one manifold of the family.
class FrobeniusPoint {
 public:
  FrobeniusPoint(Point tau0, ApproxComplex omega0) : tau0_(std::move(tau0)), omega0_(omega0) {
    ApproxComplex t = embed(tau0_);
    if (!(t.im() > t.err())) raise(Errc::NotUpperHalfPlane, "Im(tau0) must be positive");
    if (omega0_.contains_zero()) raise(Errc::InvalidArgument, "omega0 must be bounded away from zero");
  }

  /// ω0 as the principal square root of the given ω0².
  static FrobeniusPoint from_omega_squared(Point tau0, const ApproxComplex& omega_sq) {
    return {std::move(tau0), sqrt(omega_sq)};
  }

  const Point& tau0() const { return tau0_; }
  ApproxComplex tau0_approx() const { return embed(tau0_); }
  const ApproxComplex& omega0() const { return omega0_; }
  bool exact() const { return std::holds_alternative<QuadraticPoint>(tau0_); }

 private:
  Point tau0_;
  ApproxComplex omega0_;
};

}  // namespace frob3
