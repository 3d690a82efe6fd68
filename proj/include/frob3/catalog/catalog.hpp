#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "frob3/catalog/cm_catalog_text.hpp"
#include "frob3/error.hpp"
#include "frob3/exactnum/big_rational.hpp"
#include "frob3/exactnum/quadratic_point.hpp"
#include "frob3/modform/curve.hpp"

namespace frob3 {

/// One of the 13 elliptic curves over Q with complex multiplication.
struct CMEntry {
  std::string id;
  QuadraticPoint modulus;
  CurveModel curve;
  BigRational j;
  BigInt delta_E;
  std::optional<BigRational> psi;  // nullopt stands for the printed ∞
  BigRational c0, c1, c2;
};

/// Parses the whitespace-separated record format
/// `id p q r D g2 g3 j delta_E psi c0 c1 c2`; '#' starts a comment line.
inline std::vector<CMEntry> parse_catalog(std::string_view text) {
  std::vector<CMEntry> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string tok; fields >> tok;) f.push_back(tok);
    if (f.size() != 13) raise(Errc::ParseError, "catalog line " + std::to_string(lineno) + ": expected 13 fields");
    auto rat = [](const std::string& s) { return BigRational::parse(s); };
    CMEntry e{f[0],
              QuadraticPoint(BigInt(f[1]), BigInt(f[2]), BigInt(f[3]), std::stoll(f[4])),
              CurveModel(rat(f[5]), rat(f[6])),
              rat(f[7]),
              BigInt(f[8]),
              f[9] == "inf" ? std::nullopt : std::optional<BigRational>(rat(f[9])),
              rat(f[10]),
              rat(f[11]),
              rat(f[12])};
    rows.push_back(std::move(e));
  }
  return rows;
}

/// The embedded data file, byte for byte.
inline std::string_view catalog_text() { return catalog_data::kCatalogText; }

/// The 13 rows in table order. Parsed once; the result never changes.
inline const std::vector<CMEntry>& load_catalog() {
  static const std::vector<CMEntry> rows = parse_catalog(catalog_text());
  return rows;
}

}  // namespace frob3
