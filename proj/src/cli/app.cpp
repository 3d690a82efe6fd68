#include "frob3/cli/app.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "frob3/catalog/verify.hpp"
#include "frob3/cli/modulus_expr.hpp"
#include "frob3/cli/omega_expr.hpp"
#include "frob3/format.hpp"
#include "frob3/frobenius/classify.hpp"
#include "frob3/wdvv/taylor.hpp"

namespace frob3::cli {

namespace {

using Json = nlohmann::ordered_json;

// ---- report values ---------------------------------------------------------

double round15(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

// Error radius rounded up to 3 significant digits.
double round_bound(double e) {
  if (!(e > 0) || !std::isfinite(e)) return e;
  double p = std::pow(10.0, std::floor(std::log10(e)) - 2);
  return std::strtod(format_bound(std::ceil(e / p) * p).c_str(), nullptr);
}

Json complex_json(const ApproxComplex& z) {
  return Json{{"re", round15(z.re())}, {"im", round15(z.im())}, {"bound", round_bound(z.err())}};
}

bool is_complex(const Json& j) {
  return j.is_object() && j.size() == 3 && j.contains("re") && j.contains("im") && j.contains("bound");
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  if (j.is_null()) return "none";
  if (j.is_number_float()) return format_real(j.get<double>());
  if (is_complex(j)) {
    ApproxComplex z(j["re"].get<double>(), j["im"].get<double>(), 0.0);
    return format_complex(z) + " ± " + format_bound(j["bound"].get<double>());
  }
  return j.dump();
}

void render_text(const Json& j, std::ostream& os, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : j.items()) {
    if (v.is_object() && !is_complex(v)) {
      os << pad << key << ":\n";
      render_text(v, os, indent + 2);
    } else if (v.is_array()) {
      bool nested = std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_object() && !is_complex(e); });
      if (v.empty()) {
        os << pad << key << ": none\n";
      } else if (!nested) {
        os << pad << key << ":";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : " ") << scalar_text(v[i]);
        os << "\n";
      } else {
        for (std::size_t i = 0; i < v.size(); ++i) {
          os << pad << key << "[" << i << "]:\n";
          render_text(v[i], os, indent + 2);
        }
      }
    } else {
      os << pad << key << ": " << scalar_text(v) << "\n";
    }
  }
}

struct Report {
  Json body;
  Report(const std::string& command) : body{{"command", command}, {"inputs", Json::object()}, {"outputs", Json::object()}} {}
  Json& in() { return body["inputs"]; }
  Json& outp() { return body["outputs"]; }

  int emit(std::ostream& out, bool json, int status) {
    body["status"] = status;
    if (json) out << body.dump(2) << "\n";
    else render_text(body, out, 0);
    return status;
  }
};

// ---- argument helpers ------------------------------------------------------

std::string matrix_string(const ExactMoebius& A) {
  return A.a().str() + "," + A.b().str() + "," + A.c().str() + "," + A.d().str();
}

ExactMoebius parse_matrix(const std::string& text) {
  std::string s = frob3::cli::detail::strip_spaces(text);
  if (s == "I") return ExactMoebius::identity();
  if (s == "S") return ExactMoebius::S();
  if (s == "T") return ExactMoebius::T();
  std::vector<BigRational> v;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) v.push_back(BigRational::parse(part));
  if (v.size() != 4) raise(Errc::ParseError, "matrix must be a,b,c,d or one of I, S, T");
  return {v[0], v[1], v[2], v[3]};
}

std::size_t recursion_ceiling() {
  const char* env = std::getenv("FROB3_RECURSION_CEILING");
  if (!env || !*env) return kDefaultRecursionCeiling;
  std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos)
    raise(Errc::InvalidArgument, "FROB3_RECURSION_CEILING must be a non-negative integer");
  return static_cast<std::size_t>(std::stoull(s));
}

struct OmegaFlags {
  std::string omega, omega_sq;
};

void add_omega_flags(CLI::App* sub, OmegaFlags& f, const std::string& suffix = "") {
  auto* a = sub->add_option("--omega" + suffix, f.omega, "omega0 as x+yi or a rational");
  auto* b = sub->add_option("--omega-sq" + suffix, f.omega_sq, "omega0^2: x+yi, gamma4[:R[piK]], gamma3[:R[piK]] or pin:cN=RAT");
  a->excludes(b);
}

bool has_omega(const OmegaFlags& f) { return !f.omega.empty() || !f.omega_sq.empty(); }

FrobeniusPoint frobenius_point(const ModulusExpr& tau, const OmegaFlags& f) {
  if (!f.omega.empty()) return {tau.value, parse_omega(f.omega)};
  if (f.omega_sq.empty()) raise(Errc::InvalidArgument, "one of --omega or --omega-sq is required");
  return FrobeniusPoint::from_omega_squared(tau.value, parse_omega_sq(f.omega_sq, tau.value));
}

void describe_omega(Json& in, const FrobeniusPoint& P, const OmegaFlags& f, const std::string& suffix = "") {
  if (!f.omega_sq.empty()) in["omega_sq" + suffix] = f.omega_sq;
  in["omega" + suffix] = complex_json(P.omega0());
}

std::string rational_or_decimal(const ApproxComplex& z, const std::optional<BigRational>& r) {
  return r ? r->str() : format_complex(z);
}

// ---- subcommands -----------------------------------------------------------

struct EisensteinArgs {
  std::string k, tau;
  double tol = 1e-12;
};

int cmd_eisenstein(const EisensteinArgs& a, bool json, std::ostream& out) {
  ModulusExpr tau = parse_modulus(a.tau);
  if (!(a.tol > 0)) raise(Errc::InvalidArgument, "--tol must be positive");
  Report r("eisenstein");
  r.in()["tau"] = to_string(tau.value);
  r.in()["k"] = a.k;
  r.in()["tol"] = round15(a.tol);
  ApproxComplex v;
  std::string form;
  if (a.k == "2" || a.k == "4" || a.k == "6") {
    int k = a.k[0] - '0';
    v = eisenstein(k, tau.value, a.tol).value;
    form = "E" + a.k;
  } else if (a.k == "star") {
    v = e2_star(tau.value, a.tol);
    form = "E2*";
  } else if (a.k == "dstar") {
    v = ahd_e2_star(1, tau.value, a.tol);
    form = "dE2*";
  } else if (a.k == "d2star") {
    v = ahd_e2_star(2, tau.value, a.tol);
    form = "d2E2*";
  } else {
    raise(Errc::InvalidArgument, "--k must be one of 2, 4, 6, star, dstar, d2star");
  }
  r.outp()["form"] = form;
  r.outp()["value"] = complex_json(v);
  return r.emit(out, json, kOk);
}

struct CoeffsArgs {
  std::string tau;
  OmegaFlags omega;
  std::size_t terms = 3;
  std::string max_den = "1000000";
  double tol = 1e-9;
  std::string expect;
};

int cmd_coeffs(const CoeffsArgs& a, bool json, std::ostream& out) {
  ModulusExpr tau = parse_modulus(a.tau);
  FrobeniusPoint P = frobenius_point(tau, a.omega);
  BigInt max_den = BigRational::parse(a.max_den).num();
  if (max_den < 1) raise(Errc::InvalidArgument, "--max-den must be positive");
  std::vector<BigRational> expected;
  if (!a.expect.empty()) {
    std::stringstream ss(frob3::cli::detail::strip_spaces(a.expect));
    for (std::string part; std::getline(ss, part, ',');) expected.push_back(BigRational::parse(part));
  }
  std::size_t ceiling = recursion_ceiling();
  if (a.terms > 0 && a.terms - 1 > ceiling)
    raise(Errc::CeilingExceeded, "requested " + std::to_string(a.terms) + " terms, ceiling is " + std::to_string(ceiling));

  Report r("coeffs");
  r.in()["tau"] = to_string(tau.value);
  describe_omega(r.in(), P, a.omega);
  r.in()["terms"] = a.terms;
  r.in()["max_den"] = max_den.str();
  r.in()["tol"] = round15(a.tol);

  CoeffTriple triple = frob_coefficients(P, a.tol, max_den);
  bool exact = triple.recognized[0] && triple.recognized[1] && triple.recognized[2];
  std::vector<std::optional<BigRational>> rat;
  std::vector<ApproxComplex> approx;
  if (exact) {
    std::size_t top = std::max<std::size_t>(a.terms, 3) - 1;
    RationalTaylor f = extend_coefficients(*triple.recognized[0], *triple.recognized[1], *triple.recognized[2], top, ceiling);
    for (std::size_t n = 0; n < a.terms; ++n) {
      rat.emplace_back(f[n]);
      approx.push_back(ApproxComplex::from_rational(f[n]));
    }
  } else {
    std::vector<ApproxComplex> c(triple.c.begin(), triple.c.end());
    for (std::size_t n = 0; c.size() < a.terms; ++n) {
      ApproxComplex s(0);
      for (std::size_t k = 0; k <= n; ++k) {
        ApproxComplex term = ApproxComplex(36) * c[k + 1] * c[n - k + 1] - ApproxComplex(24) * c[k] * c[n - k + 2];
        s = s + ApproxComplex::from_rational(BigRational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)))) * term;
      }
      c.push_back(s);
    }
    for (std::size_t n = 0; n < a.terms; ++n) {
      approx.push_back(c[n]);
      rat.push_back(n < 3 ? triple.recognized[n] : std::nullopt);
    }
  }
  r.outp()["exact"] = exact;
  for (std::size_t n = 0; n < a.terms; ++n) {
    std::string key = "c" + std::to_string(n);
    if (rat[n]) r.outp()[key] = rat[n]->str();
    else r.outp()[key] = complex_json(approx[n]);
  }
  int status = kOk;
  if (!expected.empty()) {
    bool ok = expected.size() <= a.terms;
    for (std::size_t n = 0; ok && n < expected.size(); ++n) ok = rat[n] && *rat[n] == expected[n];
    r.outp()["expect"] = ok ? "pass" : "fail";
    if (!ok) status = kVerificationFailed;
  }
  return r.emit(out, json, status);
}

struct ClassifyArgs {
  std::string tau;
  OmegaFlags omega;
  std::string max_den = "1000000";
  double tol = 1e-9;
};

int cmd_classify(const ClassifyArgs& a, bool json, std::ostream& out) {
  ModulusExpr tau = parse_modulus(a.tau);
  if (!tau.exact()) raise(Errc::InvalidArgument, "classification needs an exact modulus, e.g. (-1+sqrt(-7))/2");
  const auto& q = std::get<QuadraticPoint>(tau.value);
  Report r("classify");
  r.in()["tau"] = q.to_string();
  CMClassification cm = classify_cm(q);
  r.outp()["symmetric"] = has_symmetry(q);
  r.outp()["cm"] = true;
  r.outp()["cm_over_q"] = cm.status == CMStatus::Matched;
  r.outp()["reduced"] = cm.reduced.to_string();
  r.outp()["reduction"] = matrix_string(cm.reduction);
  if (cm.row) {
    const CMEntry& e = load_catalog()[*cm.row];
    r.outp()["row"] = *cm.row + 1;
    r.outp()["row_id"] = e.id;
    r.outp()["j"] = e.j.str();
    r.outp()["g2"] = e.curve.g2().str();
    r.outp()["g3"] = e.curve.g3().str();
  }
  if (has_omega(a.omega)) {
    BigInt max_den = BigRational::parse(a.max_den).num();
    FrobeniusPoint P = frobenius_point(tau, a.omega);
    describe_omega(r.in(), P, a.omega);
    WeakSymmetryEvidence w = weak_symmetry(P, max_den, a.tol);
    const CoeffTriple& c = w.rationality.coefficients;
    r.outp()["rationality"] =
        w.rationality.verdict == Rationality::DefinedOverQ ? "defined over Q" : "not recognized";
    for (int n = 0; n < 3; ++n) r.outp()["c" + std::to_string(n)] = rational_or_decimal(c.c[n], c.recognized[n]);
    r.outp()["weak_symmetry"] = w.weak_symmetry;
  }
  return r.emit(out, json, kOk);
}

Json check_json(const Check& c) {
  return Json{{"ok", c.ok}, {"expected", c.expected}, {"computed", c.computed}, {"detail", c.detail}};
}

struct VerifyArgs {
  std::optional<int> row;
  double tol = 1e-9;
};

int cmd_verify_catalog(const VerifyArgs& a, bool json, std::ostream& out) {
  const auto& rows = load_catalog();
  if (a.row && (*a.row < 1 || *a.row > static_cast<int>(rows.size())))
    raise(Errc::InvalidArgument, "--row must be between 1 and " + std::to_string(rows.size()));
  if (!(a.tol > 0)) raise(Errc::InvalidArgument, "--tol must be positive");
  Report r("verify-catalog");
  if (a.row) r.in()["row"] = *a.row;
  r.in()["tol"] = round15(a.tol);

  std::vector<RowReport> reports;
  if (a.row) {
    auto k = static_cast<std::size_t>(*a.row - 1);
    reports.push_back(verify_row(rows[k], k, a.tol));
  } else {
    reports = verify_all(a.tol).rows;
  }
  CatalogSummary sum = summarize(reports);

  Json jrows = Json::array();
  for (const auto& rep : reports) {
    Json checks = Json::object();
    for (const auto& c : rep.checks) checks[c.name] = check_json(c);
    jrows.push_back(Json{{"row", rep.index + 1},
                         {"id", rep.id},
                         {"modulus", rep.modulus},
                         {"checks", checks},
                         {"acceptance_ok", rep.acceptance_ok()}});
  }
  r.outp()["rows"] = jrows;
  Json js = Json::object();
  for (const char* name : kCheckNames)
    js[name] = Json{{"passed", sum.passed[name]}, {"failed", sum.failed[name]}, {"acceptance", is_acceptance_check(name)}};
  r.outp()["summary"] = js;
  r.outp()["acceptance_ok"] = sum.acceptance_ok;
  return r.emit(out, json, sum.acceptance_ok ? kOk : kVerificationFailed);
}

struct Gl2Args {
  std::vector<std::string> matrices;
  std::string solution = "f-infinity";
  std::string alpha, beta, tau0;
  OmegaFlags omega;
  std::string at;
  unsigned order = 0;
};

int cmd_gl2(const Gl2Args& a, bool json, std::ostream& out) {
  Report r("gl2");
  AnalyticSolution f = AnalyticSolution::f_infinity_tau();
  if (a.solution == "f-infinity") {
  } else if (a.solution == "f-infinity-t") {
    f = AnalyticSolution::f_infinity_t();
  } else if (a.solution == "f-infinity-scaled") {
    f = AnalyticSolution::f_infinity_scaled();
  } else if (a.solution == "constant") {
    if (a.alpha.empty() || a.beta.empty()) raise(Errc::InvalidArgument, "constant solution needs --alpha and --beta");
    f = constant_solution(ConstantSolutionParams{BigRational::parse(a.alpha), BigRational::parse(a.beta)});
    r.in()["alpha"] = BigRational::parse(a.alpha).str();
    r.in()["beta"] = BigRational::parse(a.beta).str();
  } else if (a.solution == "frobenius") {
    if (a.tau0.empty()) raise(Errc::InvalidArgument, "frobenius solution needs --tau0");
    ModulusExpr tau0 = parse_modulus(a.tau0);
    FrobeniusPoint P = frobenius_point(tau0, a.omega);
    r.in()["tau0"] = to_string(tau0.value);
    describe_omega(r.in(), P, a.omega);
    f = frobenius_solution(P);
  } else {
    raise(Errc::InvalidArgument,
          "--solution must be f-infinity, f-infinity-t, f-infinity-scaled, constant or frobenius");
  }
  if (a.order > 3) raise(Errc::InvalidArgument, "--order must be at most 3");
  ApproxComplex t = parse_decimal_complex(a.at);
  ExactMoebius product = ExactMoebius::identity();
  for (const auto& m : a.matrices) {
    ExactMoebius A = parse_matrix(m);
    f = gl2_apply(A, f);
    product = product * A;  // (f^B)^A = f^{BA}
  }
  r.in()["solution"] = a.solution;
  Json mats = Json::array();
  for (const auto& m : a.matrices) mats.push_back(matrix_string(parse_matrix(m)));
  r.in()["matrices"] = mats;
  r.in()["at"] = complex_json(t);
  r.in()["order"] = a.order;
  r.outp()["product"] = matrix_string(product);
  r.outp()["value"] = complex_json(f.eval(t, a.order));
  return r.emit(out, json, kOk);
}

struct IsoArgs {
  std::string tau0, tau1;
  OmegaFlags omega0, omega1;
  double tol = 1e-9;
};

int cmd_isomorphic(const IsoArgs& a, bool json, std::ostream& out) {
  ModulusExpr t0 = parse_modulus(a.tau0);
  ModulusExpr t1 = parse_modulus(a.tau1);
  FrobeniusPoint P0 = frobenius_point(t0, a.omega0);
  FrobeniusPoint P1 = frobenius_point(t1, a.omega1);
  Report r("isomorphic");
  r.in()["tau0"] = to_string(t0.value);
  describe_omega(r.in(), P0, a.omega0, "0");
  r.in()["tau1"] = to_string(t1.value);
  describe_omega(r.in(), P1, a.omega1, "1");
  r.in()["tol"] = round15(a.tol);
  IsomorphismResult res = are_isomorphic(P0, P1, a.tol);
  auto inv = [](const std::array<ApproxComplex, 3>& v) {
    return Json{{"e2_star", complex_json(v[0])}, {"e4", complex_json(v[1])}, {"e6", complex_json(v[2])}};
  };
  r.outp()["isomorphic"] = res.isomorphic;
  r.outp()["invariants0"] = inv(res.invariants0);
  r.outp()["invariants1"] = inv(res.invariants1);
  r.outp()["witness"] = res.witness ? Json(matrix_string(*res.witness)) : Json(nullptr);
  r.outp()["k"] = res.k ? Json(*res.k) : Json(nullptr);
  return r.emit(out, json, kOk);
}

struct Sl2Args {
  std::string matrix, tau;
  OmegaFlags omega;
  std::string at = "0";
  double tol = 1e-9;
};

int cmd_sl2(const Sl2Args& a, bool json, std::ostream& out) {
  ExactMoebius A = parse_matrix(a.matrix);
  ModulusExpr tau = parse_modulus(a.tau);
  FrobeniusPoint P = frobenius_point(tau, a.omega);
  FrobeniusPoint P1 = sl2_act(A, P);
  ApproxComplex t = parse_decimal_complex(a.at);
  Report r("sl2");
  r.in()["matrix"] = matrix_string(A);
  r.in()["tau"] = to_string(tau.value);
  describe_omega(r.in(), P, a.omega);
  r.in()["at"] = complex_json(t);
  r.in()["tol"] = round15(a.tol);
  r.outp()["tau1"] = to_string(P1.tau0());
  r.outp()["omega1"] = complex_json(P1.omega0());
  int status = kOk;
  if (is_integral(A)) {
    // f^(τ0,ω0) only depends on the SL(2,Z)-orbit of the pair
    ApproxComplex v0 = f_eval(P, t);
    ApproxComplex v1 = f_eval(P1, t);
    double gap = static_cast<double>((v0 - v1).mag());
    bool ok = gap <= v0.err() + v1.err() + a.tol * std::max(1.0, static_cast<double>(v0.mag()));
    r.outp()["f"] = complex_json(v0);
    r.outp()["f_acted"] = complex_json(v1);
    r.outp()["difference"] = round15(gap);
    r.outp()["invariant"] = ok;
    if (!ok) status = kVerificationFailed;
  } else {
    r.outp()["invariant"] = "not checked (matrix is not integral)";
  }
  return r.emit(out, json, status);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-3 Frobenius manifolds from Eisenstein series", "frob3"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output")->configurable(false);

  EisensteinArgs ea;
  auto* eis = app.add_subcommand("eisenstein", "Evaluate E2, E4, E6, E2* or its almost holomorphic derivatives");
  eis->add_option("--k", ea.k, "2, 4, 6, star, dstar or d2star")->required();
  eis->add_option("--tau", ea.tau, "modulus")->required();
  eis->add_option("--tol", ea.tol, "absolute tolerance of the series");
  eis->add_flag("--json", json);

  CoeffsArgs ca;
  auto* coeffs = app.add_subcommand("coeffs", "Taylor coefficients c_n of f^(tau0,omega0) at t = 0");
  coeffs->add_option("--tau", ca.tau, "modulus tau0")->required();
  add_omega_flags(coeffs, ca.omega);
  coeffs->add_option("--terms", ca.terms, "number of coefficients");
  coeffs->add_option("--max-den", ca.max_den, "denominator bound for recognition");
  coeffs->add_option("--tol", ca.tol, "recognition tolerance");
  coeffs->add_option("--expect", ca.expect, "comma-separated expected rationals c0,c1,...");
  coeffs->add_flag("--json", json);

  ClassifyArgs cla;
  auto* classify = app.add_subcommand("classify", "Symmetry, CM and rationality verdicts");
  classify->add_option("--tau", cla.tau, "exact modulus")->required();
  add_omega_flags(classify, cla.omega);
  classify->add_option("--max-den", cla.max_den, "denominator bound for recognition");
  classify->add_option("--tol", cla.tol, "recognition tolerance");
  classify->add_flag("--json", json);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-catalog", "Replay the checks on the 13 CM rows");
  verify->add_option("--row", va.row, "1-based row number (default: all rows)");
  verify->add_option("--tol", va.tol, "relative tolerance of the numeric checks");
  verify->add_flag("--json", json);

  Gl2Args ga;
  auto* gl2 = app.add_subcommand("gl2", "Evaluate f^A for a solution f");
  gl2->add_option("--matrix", ga.matrices, "a,b,c,d or I, S, T; repeat to apply in sequence");
  gl2->add_option("--solution", ga.solution, "f-infinity, f-infinity-t, f-infinity-scaled, constant or frobenius");
  gl2->add_option("--alpha", ga.alpha, "constant solution alpha");
  gl2->add_option("--beta", ga.beta, "constant solution beta");
  gl2->add_option("--tau0", ga.tau0, "frobenius solution tau0");
  add_omega_flags(gl2, ga.omega);
  gl2->add_option("--at", ga.at, "evaluation point x+yi")->required();
  gl2->add_option("--order", ga.order, "derivative order 0..3");
  gl2->add_flag("--json", json);

  IsoArgs ia;
  auto* iso = app.add_subcommand("isomorphic", "Test whether two points give isomorphic manifolds");
  iso->add_option("--tau0", ia.tau0, "first modulus")->required();
  iso->add_option("--tau1", ia.tau1, "second modulus")->required();
  add_omega_flags(iso, ia.omega0, "0");
  add_omega_flags(iso, ia.omega1, "1");
  iso->add_option("--tol", ia.tol, "relative tolerance");
  iso->add_flag("--json", json);

  Sl2Args sa;
  auto* sl2 = app.add_subcommand("sl2", "Act on (tau0, omega0) by a determinant-one matrix");
  sl2->add_option("--matrix", sa.matrix, "a,b,c,d or I, S, T")->required();
  sl2->add_option("--tau", sa.tau, "modulus tau0")->required();
  add_omega_flags(sl2, sa.omega);
  sl2->add_option("--at", sa.at, "point t at which f is compared");
  sl2->add_option("--tol", sa.tol, "relative tolerance");
  sl2->add_flag("--json", json);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*eis) return cmd_eisenstein(ea, json, out);
    if (*coeffs) return cmd_coeffs(ca, json, out);
    if (*classify) return cmd_classify(cla, json, out);
    if (*verify) return cmd_verify_catalog(va, json, out);
    if (*gl2) return cmd_gl2(ga, json, out);
    if (*iso) return cmd_isomorphic(ia, json, out);
    if (*sl2) return cmd_sl2(sa, json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace frob3::cli
