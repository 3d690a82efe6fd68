#pragma once

#include <cstddef>
#include <vector>

#include "frob3/error.hpp"
#include "frob3/exactnum/big_rational.hpp"

namespace frob3 {

inline constexpr std::size_t kDefaultRecursionCeiling = 256;

/// Exact coefficients c_0 … c_N of f(t) = Σ c_n tⁿ/n!.
class RationalTaylor {
 public:
  RationalTaylor() = default;
  explicit RationalTaylor(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {}

  const std::vector<BigRational>& coeffs() const { return c_; }
  const BigRational& operator[](std::size_t n) const { return c_.at(n); }
  /// Highest stored index N.
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  std::size_t size() const { return c_.size(); }

  friend bool operator==(const RationalTaylor& a, const RationalTaylor& b) { return a.c_ == b.c_; }

 private:
  std::vector<BigRational> c_;
};

/// c_{n+3} = Σ_{a=0}^{n} C(n,a)(−24 c_a c_{n−a+2} + 36 c_{a+1} c_{n−a+1}).
inline BigRational recursion_step(const std::vector<BigRational>& c, std::size_t n) {
  BigRational s(0);
  for (std::size_t a = 0; a <= n; ++a) {
    BigRational term = BigRational(-24) * c[a] * c[n - a + 2] + BigRational(36) * c[a + 1] * c[n - a + 1];
    if (!term.is_zero()) s += BigRational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(a))) * term;
  }
  return s;
}

/// Extends (c0, c1, c2) to c_0 … c_N through the WDVV recursion.
///
/// The recursion is homogeneous when c_n carries weight n+1, so with L the
/// common denominator it runs on the integers e_n = c_n·L^{n+1}.
inline RationalTaylor extend_coefficients(const BigRational& c0, const BigRational& c1, const BigRational& c2,
                                          std::size_t N, std::size_t ceiling = kDefaultRecursionCeiling) {
  if (N > ceiling) raise(Errc::CeilingExceeded, "requested " + std::to_string(N) + " terms, ceiling is " +
                                                    std::to_string(ceiling));
  BigInt L = boost::multiprecision::lcm(boost::multiprecision::lcm(c0.den(), c1.den()), c2.den());
  std::vector<BigInt> e{c0.num() * (L / c0.den()), c1.num() * (L / c1.den()) * L, c2.num() * (L / c2.den()) * L * L};
  e.resize(std::min<std::size_t>(N + 1, 3));
  e.reserve(N + 1);
  std::vector<BigInt> row{1};  // binomial row n
  for (std::size_t n = 0; n + 3 <= N; ++n) {
    if (n > 0) {
      std::vector<BigInt> next(n + 1, BigInt(1));
      for (std::size_t a = 1; a < n; ++a) next[a] = row[a - 1] + row[a];
      row = std::move(next);
    }
    BigInt s = 0;
    for (std::size_t a = 0; a <= n; ++a) {
      BigInt term = 36 * e[a + 1] * e[n - a + 1] - 24 * e[a] * e[n - a + 2];
      if (term != 0) s += row[a] * term;
    }
    e.push_back(std::move(s));
  }
  std::vector<BigRational> c;
  c.reserve(e.size());
  BigInt Lp = L;
  for (auto& v : e) {
    c.emplace_back(v, Lp);
    Lp *= L;
  }
  return RationalTaylor(std::move(c));
}

/// True when every stored c_{n+3} satisfies the recursion.
inline bool satisfies_recursion(const RationalTaylor& f) {
  const auto& c = f.coeffs();
  for (std::size_t n = 0; n + 3 < c.size(); ++n)
    if (recursion_step(c, n) != c[n + 3]) return false;
  return true;
}

}  // namespace frob3
