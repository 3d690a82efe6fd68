#pragma once

#include <array>
#include <cstddef>

namespace frob3 {

/// Truncated Taylor expansion a_0 + a_1 h + … + a_{N-1} h^{N-1} around a point.
///
/// Coefficients are normalized (a_k = f^(k)/k!), so products are plain
/// Cauchy products. Works for any field-like scalar.
template <class S, std::size_t N = 4>
class Jet {
 public:
  Jet() { a_.fill(S(0)); }

  static Jet constant(const S& c) {
    Jet j;
    j.a_[0] = c;
    return j;
  }
  /// The identity function t around t0.
  static Jet variable(const S& t0) {
    Jet j = constant(t0);
    if (N > 1) j.a_[1] = S(1);
    return j;
  }
  /// From derivative values f, f', f'', … .
  static Jet from_derivatives(const std::array<S, N>& d) {
    Jet j;
    S fact(1);
    for (std::size_t k = 0; k < N; ++k) {
      if (k > 1) fact = fact * S(static_cast<int>(k));
      j.a_[k] = d[k] / fact;
    }
    return j;
  }

  const S& operator[](std::size_t k) const { return a_[k]; }
  S& operator[](std::size_t k) { return a_[k]; }

  /// k-th derivative value.
  S derivative(std::size_t k) const {
    S r = a_[k];
    for (std::size_t i = 2; i <= k; ++i) r = r * S(static_cast<int>(i));
    return r;
  }
  std::array<S, N> derivatives() const {
    std::array<S, N> d;
    for (std::size_t k = 0; k < N; ++k) d[k] = derivative(k);
    return d;
  }

  friend Jet operator+(const Jet& x, const Jet& y) {
    Jet r;
    for (std::size_t k = 0; k < N; ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }
  friend Jet operator-(const Jet& x, const Jet& y) {
    Jet r;
    for (std::size_t k = 0; k < N; ++k) r.a_[k] = x.a_[k] - y.a_[k];
    return r;
  }
  friend Jet operator*(const Jet& x, const Jet& y) {
    Jet r;
    for (std::size_t k = 0; k < N; ++k) {
      S s(0);
      for (std::size_t i = 0; i <= k; ++i) s = s + x.a_[i] * y.a_[k - i];
      r.a_[k] = s;
    }
    return r;
  }
  friend Jet operator/(const Jet& x, const Jet& y) {
    Jet r;
    for (std::size_t k = 0; k < N; ++k) {
      S s = x.a_[k];
      for (std::size_t i = 1; i <= k; ++i) s = s - y.a_[i] * r.a_[k - i];
      r.a_[k] = s / y.a_[0];
    }
    return r;
  }
  friend Jet operator*(const S& c, const Jet& x) {
    Jet r;
    for (std::size_t k = 0; k < N; ++k) r.a_[k] = c * x.a_[k];
    return r;
  }

  /// f ∘ u, where *this is the expansion of f around u[0].
  Jet compose(const Jet& u) const {
    Jet h = u;
    h.a_[0] = S(0);
    Jet r = constant(a_[N - 1]);
    for (std::size_t k = N - 1; k-- > 0;) r = r * h + constant(a_[k]);
    return r;
  }

 private:
  std::array<S, N> a_;
};

}  // namespace frob3
