#pragma once

#include <regex>
#include <string>
#include <string_view>

#include "frob3/cli/modulus_expr.hpp"
#include "frob3/frobenius/construction.hpp"
#include "frob3/modform/gamma_constants.hpp"

namespace frob3::cli {

namespace detail {

// R·Γ^m/π^K with the given defaults for R and K.
inline ApproxComplex gamma_normalization(GammaArg which, const std::string& spec) {
  static const std::regex re(R"(^(?::([+-]?[0-9]+(?:/[0-9]+)?)(?:pi([+-]?[0-9]+))?)?$)");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) raise(Errc::ParseError, "bad normalization suffix '" + spec + "'");
  BigRational R = m[1].matched ? BigRational::parse(m[1].str()) : BigRational(1, 16);
  int K = m[2].matched ? std::stoi(m[2].str()) : (which == GammaArg::Quarter ? 3 : 4);
  if (R.is_zero()) raise(Errc::InvalidArgument, "omega^2 must be nonzero");
  WideComplex g = gamma_constant_as<WideReal>(which);
  WideComplex g2 = g * g;
  WideComplex v = which == GammaArg::Quarter ? g2 * g2 : g2 * g2 * g2;
  WideComplex pi = frob3::detail::wide_pi();
  WideComplex pk(1);
  for (int i = 0; i < std::abs(K); ++i) pk = pk * pi;
  v = K >= 0 ? v / pk : v * pk;
  return narrow<double>(WideComplex::from_rational(R) * v);
}

inline ApproxComplex parse_explicit(const std::string& s, const std::string& what) {
  bool decimal = s.find_first_of("i.eE") != std::string::npos;
  ApproxComplex v = decimal ? parse_decimal_complex(s) : ApproxComplex::from_rational(BigRational::parse(s));
  if (v.contains_zero()) raise(Errc::InvalidArgument, what + " must be nonzero");
  return v;
}

}  // namespace detail

/// ω0² from one of
///   "x+yi" or "n/d"          explicit value
///   gamma4[:R[piK]]          R·Γ(1/4)⁴/π^K, default R = 1/16, K = 3
///   gamma3[:R[piK]]          R·Γ(1/3)⁶/π^K, default R = 1/16, K = 4
///   pin:cN=RAT               solve the closed form for c_N = RAT at τ0
inline ApproxComplex parse_omega_sq(std::string_view text, const Point& tau0) {
  std::string s = frob3::cli::detail::strip_spaces(text);
  if (s.rfind("gamma4", 0) == 0) return detail::gamma_normalization(GammaArg::Quarter, s.substr(6));
  if (s.rfind("gamma3", 0) == 0) return detail::gamma_normalization(GammaArg::Third, s.substr(6));
  if (s.rfind("pin:", 0) == 0) {
    static const std::regex re(R"(^pin:c([0-2])=(.+)$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) raise(Errc::ParseError, "expected pin:cN=RAT with N in 0..2, got '" + s + "'");
    unsigned n = static_cast<unsigned>(m[1].str()[0] - '0');
    BigRational c = BigRational::parse(m[2].str());
    return narrow<double>(omega_sq_from_pin(eisenstein_triple(tau0, 1e-15), n, c));
  }
  return detail::parse_explicit(s, "omega^2");
}

/// ω0 as an explicit complex or rational.
inline ApproxComplex parse_omega(std::string_view text) {
  std::string s = frob3::cli::detail::strip_spaces(text);
  return detail::parse_explicit(s, "omega");
}

}  // namespace frob3::cli
