// Builds the manifold at tau0 = i with the Gamma(1/4) normalization, prints
// its first coefficients and checks them against the WDVV recursion.

#include <cmath>
#include <iostream>

#include "frob3/frobenius/classify.hpp"
#include "frob3/modform/gamma_constants.hpp"
#include "frob3/wdvv/residuals.hpp"

int main() {
  using namespace frob3;
  double g = gamma_constant(GammaArg::Quarter).re();
  FrobeniusPoint P{QuadraticPoint::i(), ApproxComplex(g * g / (4 * std::pow(M_PI, 1.5)))};

  auto verdict = rationality_verdict(P);
  if (!verdict.exact) {
    std::cerr << "coefficients not recognized\n";
    return 1;
  }
  const auto& c = *verdict.exact;
  RationalTaylor f = extend_coefficients(c[0], c[1], c[2], 10);
  for (std::size_t n = 0; n < f.size(); ++n) std::cout << "c" << n << " = " << f[n].str() << "\n";

  double r = domain_radius(P);
  ApproxComplex t(r / 10, 0.0);
  std::cout << "domain radius " << r << "\n";
  std::cout << "f(t) at t = radius/10: " << f_eval(P, t).re() << "\n";
  std::cout << "WDVV residual there: " << wdvv_residual(frobenius_solution(P), t).mag() << "\n";
  std::cout << "weak symmetry: " << (weak_symmetry(P).weak_symmetry ? "yes" : "no") << "\n";
}
