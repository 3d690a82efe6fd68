#pragma once

#include <functional>

#include "frob3/error.hpp"
#include "frob3/exactnum/approx_complex.hpp"
#include "frob3/wdvv/solution.hpp"

namespace frob3 {

/// Flat coordinates (t1, t2, t).
struct FlatPoint {
  ApproxComplex t1, t2, t;
};

using PotentialFn = std::function<ApproxComplex(const FlatPoint&)>;

/// F = ½ t1² t + t1 t2² + t2⁴ f(t).
inline ApproxComplex potential_from(const AnalyticSolution& f, const FlatPoint& p) {
  ApproxComplex t22 = p.t2 * p.t2;
  return ApproxComplex::from_rational(BigRational(1, 2)) * p.t1 * p.t1 * p.t + p.t1 * t22 + t22 * t22 * f.eval(p.t);
}

inline PotentialFn potential_of(const AnalyticSolution& f) {
  return [f](const FlatPoint& p) { return potential_from(f, p); };
}

struct InversionResult {
  FlatPoint point;    // (t̂1, t̂2, t̂)
  ApproxComplex value;  // F̂
};

/// Inversion t̂1 = t1 + t2²/t, t̂2 = t2/t, t̂ = −1/t,
/// F̂ = t⁻²(F − t1² t − t1 t2²).
/// With these coefficients F̂ is again of the potential shape, with f
/// replaced by its image under S = [[0, −1], [1, 0]].
inline InversionResult dubrovin_inversion(const FlatPoint& p, const PotentialFn& F) {
  if (p.t.contains_zero()) raise(Errc::PoleAtInput, "t = 0");
  ApproxComplex t22 = p.t2 * p.t2;
  FlatPoint q{p.t1 + t22 / p.t, p.t2 / p.t, ApproxComplex(-1) / p.t};
  ApproxComplex v = (F(p) - p.t1 * p.t1 * p.t - p.t1 * t22) / (p.t * p.t);
  return {q, v};
}

}  // namespace frob3
