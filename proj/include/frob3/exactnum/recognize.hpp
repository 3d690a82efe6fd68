#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include "frob3/exactnum/approx_complex.hpp"
#include "frob3/exactnum/big_rational.hpp"

namespace frob3 {

/// Recovers p/q from an approximate real value.
///
/// Walks the continued-fraction convergents of the exact center value and
/// returns the single convergent with q ≤ max_denominator inside the window
/// max(err, 1e-9·max(1, |x|)). Zero or several fits give nullopt. The same
/// window bounds |Im x|.
inline std::optional<BigRational> rational_recognize(const ApproxComplex& x, const BigInt& max_denominator) {
  double w = std::max(x.err(), 1e-9 * std::max(1.0, x.mag()));
  if (std::abs(x.im()) > w) return std::nullopt;
  const BigRational target = BigRational::from_double(x.re());
  const BigRational window = BigRational::from_double(w);

  // convergents h/k of target
  BigInt h_prev = 1, h = target.floor();
  BigInt k_prev = 0, k = 1;
  BigRational rest = target - BigRational(h);
  std::optional<BigRational> found;
  int fits = 0;
  for (;;) {
    if (k > max_denominator) break;
    BigRational conv(h, k);
    if ((conv - target).abs() <= window) {
      ++fits;
      if (!found) found = conv;
    }
    if (rest.is_zero()) break;
    BigRational inv = BigRational(1) / rest;
    BigInt a = inv.floor();
    rest = inv - BigRational(a);
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  if (fits != 1) return std::nullopt;
  return found;
}

template <class Real>
std::optional<BigRational> rational_recognize(const BasicApproxComplex<Real>& x, const BigInt& max_denominator) {
  return rational_recognize(narrow<double>(x), max_denominator);
}

}  // namespace frob3
