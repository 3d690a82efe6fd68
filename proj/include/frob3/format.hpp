#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "frob3/exactnum/approx_complex.hpp"

namespace frob3 {

/// 15 significant digits, "%.15g".
inline std::string format_real(double x) {
  if (x == 0) x = 0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

/// "re", or "re+imi" when the imaginary part is nonzero.
inline std::string format_complex(const ApproxComplex& z) {
  std::string s = format_real(z.re());
  if (z.im() != 0) {
    double im = z.im();
    s += (im < 0 ? "-" : "+") + format_real(std::abs(im)) + "i";
  }
  return s;
}

/// Radius with 3 significant digits.
inline std::string format_bound(double e) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", e);
  return buf;
}

}  // namespace frob3
