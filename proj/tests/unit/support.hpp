#pragma once

#include <catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "frob3/error.hpp"
#include "frob3/exactnum/approx_complex.hpp"

namespace frob3::test {

/// |z − (re + i·im)|
inline double dist(const ApproxComplex& z, double re, double im = 0.0) {
  return std::hypot(z.re() - re, z.im() - im);
}

inline double dist(const ApproxComplex& a, const ApproxComplex& b) { return dist(a, b.re(), b.im()); }

inline double rel_dist(const ApproxComplex& z, double re, double im = 0.0) {
  return dist(z, re, im) / std::max(1.0, std::hypot(re, im));
}

/// Fixed-seed generator so runs are reproducible.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

}  // namespace frob3::test

#define REQUIRE_ERRC(expr, errc)                                   \
  do {                                                             \
    bool frob3_thrown_ = false;                                    \
    try {                                                          \
      (void)(expr);                                                \
    } catch (const ::frob3::Error& e) {                            \
      frob3_thrown_ = true;                                        \
      CHECK(::frob3::to_string(e.code()) == ::frob3::to_string(errc)); \
    }                                                              \
    CHECK(frob3_thrown_);                                          \
  } while (0)
