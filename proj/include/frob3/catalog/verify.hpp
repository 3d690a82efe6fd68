#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frob3/catalog/catalog.hpp"
#include "frob3/exactnum/recognize.hpp"
#include "frob3/format.hpp"
#include "frob3/frobenius/construction.hpp"
#include "frob3/modform/eisenstein.hpp"

namespace frob3 {

/// Names of the six per-row checks, in report order.
inline constexpr std::array<const char*, 6> kCheckNames = {
    "j_from_curve", "j_numeric", "delta_comparison", "psi_numeric", "psi_c_identity", "c_closed_form"};

/// Checks whose failure fails the catalog verification.
inline bool is_acceptance_check(const std::string& name) {
  return name == "j_from_curve" || name == "j_numeric" || name == "psi_numeric" || name == "psi_c_identity";
}

struct Check {
  std::string name;
  bool ok;
  std::string expected;
  std::string computed;
  std::string detail;  // relation, ratios or the reason for a special case
};

struct RowReport {
  std::size_t index;  // 0-based table position
  std::string id;
  std::string modulus;
  std::vector<Check> checks;

  const Check& check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    raise(Errc::InvalidArgument, "no check named " + name);
  }
  bool acceptance_ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return !is_acceptance_check(c.name) || c.ok; });
  }
};

namespace detail {

inline std::string psi_string(const std::optional<BigRational>& psi) { return psi ? psi->str() : "inf"; }

inline bool close_rel(const ApproxComplex& x, double target, double tol) {
  double gap = static_cast<double>((x - ApproxComplex(target)).mag());
  return gap <= x.err() + tol * std::max(1.0, std::abs(target));
}

inline std::string ratio_string(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) return a.is_zero() ? "0/0" : "inf";
  return (a / b).str();
}

inline std::string recognized_or_decimal(const ApproxComplex& x) {
  auto r = rational_recognize(x.with_extra_error(1e-9), BigInt(1000000));
  return r ? r->str() : format_complex(x);
}

}  // namespace detail

/// Replays one catalog row:
/// (a) exact j from (g2, g3); (b) numeric j(τ); (c) Δ_W against Δ_E;
/// (d) numeric ψ = 3E2*E4/(2E6); (e) ψ = 24c0(c1 + 2c0²)/(c2 + 12c0c1 + 16c0³)
/// exactly; (f) ω0 pinned from the first nonzero c, remaining c's predicted.
inline RowReport verify_row(const CMEntry& row, std::size_t index = 0, double tol = 1e-9) {
  RowReport rep{index, row.id, row.modulus.to_string(), {}};
  Point tau = row.modulus;
  EisensteinTriple e = eisenstein_triple(tau, 1e-15);

  // (a)
  BigRational j_exact = j_invariant(row.curve);
  rep.checks.push_back({"j_from_curve", j_exact == row.j, row.j.str(), j_exact.str(), ""});

  // (b)
  ApproxComplex jn = j_invariant(tau, 1e-15);
  double jcol = row.j.to_double();
  rep.checks.push_back({"j_numeric", detail::close_rel(jn, jcol, tol), row.j.str(), format_complex(jn),
                        "bound " + format_bound(jn.err())});

  // (c)
  BigRational dw = row.curve.discriminant();
  BigRational de(row.delta_E);
  std::string relation;
  bool dc_ok = true;
  if (dw == de) relation = "equal";
  else if (dw == -de) relation = "equal up to sign";
  else {
    relation = "mismatch, ratio " + (dw / de).str();
    dc_ok = false;
  }
  rep.checks.push_back({"delta_comparison", dc_ok, de.str(), dw.str(), relation});

  // (d)
  ApproxComplex e6 = narrow<double>(e.e6);
  if (!row.psi) {
    bool ok = e6.mag() <= 1e-10 + e6.err();
    rep.checks.push_back({"psi_numeric", ok, "inf", "E6 = " + format_complex(e6),
                          ok ? "E6 vanishes, consistent with inf" : "E6 does not vanish"});
  } else {
    ApproxComplex psi = narrow<double>(WideComplex(3) * e.e2_star * e.e4 / (WideComplex(2) * e.e6));
    double target = row.psi->to_double();
    bool ok;
    if (row.psi->is_zero()) ok = psi.mag() <= tol + psi.err();
    else ok = static_cast<double>((psi - ApproxComplex(target)).mag()) <= psi.err() + tol * std::abs(target);
    rep.checks.push_back({"psi_numeric", ok, row.psi->str(), format_complex(psi), "bound " + format_bound(psi.err())});
  }

  // (e)
  {
    const BigRational &c0 = row.c0, &c1 = row.c1, &c2 = row.c2;
    BigRational num = BigRational(24) * c0 * (c1 + BigRational(2) * c0 * c0);
    BigRational den = c2 + BigRational(12) * c0 * c1 + BigRational(16) * c0.pow(3);
    std::string computed;
    bool ok;
    std::string note;
    if (!den.is_zero()) {
      BigRational v = num / den;
      computed = v.str();
      ok = row.psi && *row.psi == v;
    } else if (num.is_zero()) {
      computed = "0/0";
      ok = !row.psi;
      note = "indeterminate, consistent with inf";
    } else {
      computed = "inf";
      ok = !row.psi;
    }
    rep.checks.push_back({"psi_c_identity", ok, detail::psi_string(row.psi), computed, note});
  }

  // (f)
  {
    std::array<BigRational, 3> table{row.c0, row.c1, row.c2};
    int pin = !row.c0.is_zero() ? 0 : (!row.c1.is_zero() ? 1 : 2);
    WideComplex w2 = omega_sq_from_pin(e, static_cast<unsigned>(pin), table[pin]);
    auto pred = coefficients_from_triple(e, w2);
    bool ok = true;
    std::string expected, computed, ratios;
    for (int n = 0; n < 3; ++n) {
      if (n == pin) continue;
      ApproxComplex p = narrow<double>(pred[n]);
      auto rec = rational_recognize(p.with_extra_error(1e-9), BigInt(1000000));
      bool match = rec && *rec == table[n];
      if (!rec) match = detail::close_rel(p, table[n].to_double(), tol);
      ok = ok && match;
      std::string label = "c" + std::to_string(n);
      if (!expected.empty()) {
        expected += ", ";
        computed += ", ";
      }
      expected += label + " = " + table[n].str();
      computed += label + " = " + detail::recognized_or_decimal(p);
      if (!match) {
        if (!ratios.empty()) ratios += ", ";
        ratios += label + " ratio " +
                  (rec ? detail::ratio_string(*rec, table[n])
                       : (table[n].is_zero() ? "inf" : format_real(p.re() / table[n].to_double())));
      }
    }
    std::string note = "omega0^2 pinned from c" + std::to_string(pin) + " = " + table[pin].str();
    if (!ratios.empty()) note += "; " + ratios;
    rep.checks.push_back({"c_closed_form", ok, expected, computed, note});
  }
  return rep;
}

struct CatalogSummary {
  std::map<std::string, int> passed;  // per check name
  std::map<std::string, int> failed;
  bool acceptance_ok = true;
};

struct CatalogReport {
  std::vector<RowReport> rows;
  CatalogSummary summary;
};

inline CatalogSummary summarize(const std::vector<RowReport>& rows) {
  CatalogSummary s;
  for (const char* name : kCheckNames) {
    s.passed[name] = 0;
    s.failed[name] = 0;
  }
  for (const auto& r : rows) {
    for (const auto& c : r.checks) (c.ok ? s.passed : s.failed)[c.name]++;
    s.acceptance_ok = s.acceptance_ok && r.acceptance_ok();
  }
  return s;
}

/// All rows, evaluated concurrently and returned in table order.
inline CatalogReport verify_all(double tol = 1e-9) {
  const auto& rows = load_catalog();
  std::vector<std::future<RowReport>> jobs;
  jobs.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    jobs.push_back(std::async(std::launch::async, [&rows, i, tol] { return verify_row(rows[i], i, tol); }));
  CatalogReport out;
  for (auto& j : jobs) out.rows.push_back(j.get());
  out.summary = summarize(out.rows);
  return out;
}

}  // namespace frob3
