#pragma once

#include <ostream>

#include "frob3/error.hpp"
#include "frob3/exactnum/big_rational.hpp"

namespace frob3 {

/// Weierstrass model y² = 4x³ − g2·x − g3 with nonzero discriminant.
class CurveModel {
 public:
  CurveModel(BigRational g2, BigRational g3) : g2_(std::move(g2)), g3_(std::move(g3)) {
    if (discriminant().is_zero()) raise(Errc::SingularCurve, "g2^3 = 27 g3^2");
  }

  const BigRational& g2() const { return g2_; }
  const BigRational& g3() const { return g3_; }

  /// Δ_W = g2³ − 27·g3².
  BigRational discriminant() const { return g2_.pow(3) - BigRational(27) * g3_ * g3_; }

  friend bool operator==(const CurveModel& a, const CurveModel& b) { return a.g2_ == b.g2_ && a.g3_ == b.g3_; }
  friend std::ostream& operator<<(std::ostream& os, const CurveModel& c) {
    return os << "y^2 = 4x^3 - (" << c.g2_ << ")x - (" << c.g3_ << ")";
  }

 private:
  BigRational g2_, g3_;
};

/// j = 1728·g2³/(g2³ − 27·g3²), exact.
inline BigRational j_invariant(const CurveModel& curve) {
  BigRational g23 = curve.g2().pow(3);
  return BigRational(1728) * g23 / curve.discriminant();
}

}  // namespace frob3
