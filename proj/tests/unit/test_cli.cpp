#include <json.hpp>
#include <sstream>

#include "frob3/catalog/catalog.hpp"
#include "frob3/cli/app.hpp"
#include "frob3/cli/modulus_expr.hpp"
#include "frob3/cli/omega_expr.hpp"
#include "support.hpp"

using namespace frob3;
using namespace frob3::cli;
using frob3::test::dist;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  Run r = run(args);
  INFO(r.err);
  return nlohmann::json::parse(r.out);
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    auto first = l.find_first_not_of(' ');
    if (first != std::string::npos && l.substr(first) == line) return true;
  }
  return false;
}

const std::vector<std::string> kCatalogSpellings = {
    "(-1+sqrt(-3))/2", "sqrt(-3)",        "(-1+3*sqrt(-3))/2", "sqrt(-1)",         "2*sqrt(-1)",
    "(-1+sqrt(-7))/2", "sqrt(-7)",        "sqrt(-2)",          "(-1+sqrt(-11))/2", "(-1+sqrt(-19))/2",
    "(-1+sqrt(-43))/2", "(-1+sqrt(-67))/2", "(-1 + sqrt(-163)) / 2"};

}  // namespace

TEST_CASE("modulus expressions parse to the catalog moduli", "[cli]") {
  const auto& rows = load_catalog();
  REQUIRE(kCatalogSpellings.size() == rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    INFO(kCatalogSpellings[k]);
    ModulusExpr m = parse_modulus(kCatalogSpellings[k]);
    REQUIRE(m.exact());
    CHECK(std::get<QuadraticPoint>(m.value) == rows[k].modulus);
    ModulusExpr again = parse_modulus(to_string(m.value));
    CHECK(std::get<QuadraticPoint>(again.value) == rows[k].modulus);
  }
}

TEST_CASE("modulus expression forms", "[cli]") {
  CHECK(std::get<QuadraticPoint>(parse_modulus("i").value) == QuadraticPoint::i());
  CHECK(std::get<QuadraticPoint>(parse_modulus("rho").value) == QuadraticPoint::rho());
  CHECK(std::get<QuadraticPoint>(parse_modulus("5+sqrt(-2)").value) == QuadraticPoint(5, 1, 1, 2));
  CHECK(std::get<QuadraticPoint>(parse_modulus("1/2*sqrt(-3)").value) == QuadraticPoint(0, 1, 2, 3));
  CHECK(std::get<QuadraticPoint>(parse_modulus("sqrt(-4)").value) == QuadraticPoint(0, 2, 1, 1));
  ModulusExpr d = parse_modulus("0.3+0.8i");
  CHECK_FALSE(d.exact());
  CHECK(dist(std::get<ApproxComplex>(d.value), 0.3, 0.8) == 0.0);
  CHECK(dist(std::get<ApproxComplex>(parse_modulus("1.5i").value), 0.0, 1.5) == 0.0);
  CHECK(dist(std::get<ApproxComplex>(parse_modulus("-0.25+2e0i").value), -0.25, 2.0) == 0.0);
  ApproxComplex z(0.1234567890123, 1.987654321);
  ModulusExpr back = parse_modulus(to_string(Point(z)));
  CHECK(dist(std::get<ApproxComplex>(back.value), z) == 0.0);
  REQUIRE_ERRC(parse_modulus("sqrt(-3"), Errc::ParseError);
  REQUIRE_ERRC(parse_modulus("sqrt(3)"), Errc::ParseError);
  REQUIRE_ERRC(parse_modulus("-sqrt(-3)"), Errc::NotUpperHalfPlane);
  REQUIRE_ERRC(parse_modulus("0.5-1i"), Errc::NotUpperHalfPlane);
  REQUIRE_ERRC(parse_modulus("hello"), Errc::ParseError);
}

TEST_CASE("omega expressions", "[cli]") {
  Point i = QuadraticPoint::i();
  double g4 = gamma_constant(GammaArg::Quarter).re();
  double g3 = gamma_constant(GammaArg::Third).re();
  CHECK(test::rel_dist(parse_omega_sq("gamma4", i), std::pow(g4, 4) / (16 * std::pow(M_PI, 3))) < 1e-14);
  CHECK(test::rel_dist(parse_omega_sq("gamma4:1/16pi3", i), std::pow(g4, 4) / (16 * std::pow(M_PI, 3))) < 1e-14);
  CHECK(test::rel_dist(parse_omega_sq("gamma4:2", i), 2 * std::pow(g4, 4) / std::pow(M_PI, 3)) < 1e-14);
  CHECK(test::rel_dist(parse_omega_sq("gamma3", i), std::pow(g3, 6) / (16 * std::pow(M_PI, 4))) < 1e-14);
  CHECK(test::rel_dist(parse_omega_sq("gamma3:1pi0", i), std::pow(g3, 6)) < 1e-14);
  CHECK(dist(parse_omega_sq("0.5-2i", i), 0.5, -2.0) == 0.0);
  CHECK(dist(parse_omega_sq("3/4", i), 0.75) == 0.0);
  CHECK(dist(parse_omega("i"), 0.0, 1.0) == 0.0);
  REQUIRE_ERRC(parse_omega_sq("0", i), Errc::InvalidArgument);
  REQUIRE_ERRC(parse_omega_sq("gamma4:0", i), Errc::InvalidArgument);
  REQUIRE_ERRC(parse_omega_sq("gamma4:x", i), Errc::ParseError);
  REQUIRE_ERRC(parse_omega_sq("pin:c0=0", i), Errc::InvalidArgument);
  REQUIRE_ERRC(parse_omega_sq("pin:c0=1/16", i), Errc::InvalidArgument);  // E2*(i) = 0
  REQUIRE_ERRC(parse_omega_sq("pin:c4=1", i), Errc::ParseError);
}

TEST_CASE("eisenstein command", "[cli]") {
  Run r = run({"eisenstein", "--k", "2", "--tau", "i"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("value: 0.954929658551372 ± ") != std::string::npos);
  CHECK(r.err.empty());
  auto j = run_json({"eisenstein", "--k", "star", "--tau", "(-1+sqrt(-3))/2"});
  CHECK(std::abs(j["outputs"]["value"]["re"].get<double>()) <= j["outputs"]["value"]["bound"].get<double>());
  auto h = run_json({"eisenstein", "--k", "4", "--tau", "0.0+0.5i"});
  CHECK(std::abs(h["outputs"]["value"]["re"].get<double>() - 16.0133918149558) < 1e-12);
  CHECK(run({"eisenstein", "--k", "3", "--tau", "i"}).code == kUsage);
  CHECK(run({"eisenstein", "--k", "4", "--tau", "0.5-1i"}).code == kUsage);
  CHECK_FALSE(run({"eisenstein", "--k", "4", "--tau", "0.5-1i"}).err.empty());
  for (const char* k : {"6", "dstar", "d2star"}) CHECK(run({"eisenstein", "--k", k, "--tau", "sqrt(-2)"}).code == kOk);
}

TEST_CASE("coeffs command", "[cli]") {
  Run r = run({"coeffs", "--tau", "i", "--omega-sq", "gamma4:1/16pi3", "--terms", "6"});
  CHECK(r.code == kOk);
  for (const char* line : {"c0: 0", "c1: 1/24", "c2: 0", "c3: 1/16", "c4: 0", "c5: 1/16"}) CHECK(has_line(r.out, line));
  CHECK_FALSE(has_line(r.out, "c6: 0"));

  Run p = run({"coeffs", "--tau", "sqrt(-3)", "--omega-sq", "pin:c0=1/16", "--terms", "3"});
  CHECK(p.code == kOk);
  CHECK(has_line(p.out, "c1: 1/32"));

  auto z = run_json({"coeffs", "--tau", "i", "--omega-sq", "gamma4", "--terms", "0"});
  CHECK_FALSE(z["outputs"].contains("c0"));

  auto rho = run_json({"coeffs", "--tau", "rho", "--omega-sq", "gamma3", "--terms", "3"});
  CHECK(rho["outputs"]["c2"] == "-1/4");
}

TEST_CASE("coeffs command exit codes", "[cli]") {
  std::vector<std::string> base{"coeffs", "--tau", "i", "--omega-sq", "gamma4", "--terms", "3"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return run(a);
  };
  CHECK(with({"--expect", "0,1/24,0"}).code == kOk);
  CHECK(with({"--expect", "0,1/23,0"}).code == kVerificationFailed);
  CHECK(with({"--max-den", "10"}).code == kOk);
  CHECK(run({"coeffs", "--tau", "i", "--omega-sq", "pin:c3=1"}).code == kUsage);
  CHECK(run({"coeffs", "--tau", "i"}).code == kUsage);
  CHECK(run({"coeffs", "--tau", "i", "--omega-sq", "1", "--terms", "-1"}).code == kUsage);
}

TEST_CASE("coeffs beyond the exact triple", "[cli]") {
  Run r = run({"coeffs", "--tau", "0.3+1.1i", "--omega-sq", "0.7+0.2i", "--terms", "5"});
  CHECK(r.code == kOk);
  CHECK(has_line(r.out, "exact: no"));
  CHECK(r.out.find("c4: ") != std::string::npos);
}

TEST_CASE("classify command", "[cli]") {
  Run r = run({"classify", "--tau", "(-1+sqrt(-7))/2"});
  CHECK(r.code == kOk);
  CHECK(has_line(r.out, "symmetric: no"));
  CHECK(has_line(r.out, "cm_over_q: yes"));
  CHECK(has_line(r.out, "j: -3375"));
  CHECK(has_line(run({"classify", "--tau", "i"}).out, "symmetric: yes"));
  Run five = run({"classify", "--tau", "sqrt(-5)"});
  CHECK(has_line(five.out, "cm: yes"));
  CHECK(has_line(five.out, "cm_over_q: no"));
  CHECK(run({"classify", "--tau", "0.3+1.2i"}).code == kUsage);
  auto w = run_json({"classify", "--tau", "i", "--omega-sq", "gamma4"});
  CHECK(w["outputs"]["weak_symmetry"] == true);
  CHECK(w["outputs"]["c1"] == "1/24");
}

TEST_CASE("verify-catalog command", "[cli]") {
  Run one = run({"verify-catalog", "--row", "2"});
  CHECK(one.code == kOk);
  CHECK(one.out.find("id: sqrt-3") != std::string::npos);
  CHECK(one.out.find("expected: 15/22") != std::string::npos);

  // the 2sqrt(-1) row fails its exact j check, so the full run reports failure
  Run all = run({"verify-catalog"});
  CHECK(all.code == kVerificationFailed);
  CHECK(run({"verify-catalog", "--row", "5"}).code == kVerificationFailed);
  CHECK(run({"verify-catalog", "--row", "14"}).code == kUsage);
  CHECK(run({"verify-catalog", "--row", "0"}).code == kUsage);

  auto j = run_json({"verify-catalog"});
  REQUIRE(j["outputs"]["rows"].size() == 13);
  const auto& row = j["outputs"]["rows"][0];
  for (const char* key : {"row", "id", "modulus", "checks", "acceptance_ok"}) CHECK(row.contains(key));
  for (const char* name : {"j_from_curve", "j_numeric", "delta_comparison", "psi_numeric", "psi_c_identity",
                           "c_closed_form"}) {
    const auto& c = row["checks"][name];
    for (const char* key : {"ok", "expected", "computed", "detail"}) CHECK(c.contains(key));
  }
  CHECK(j["outputs"]["acceptance_ok"] == false);
  CHECK(j["outputs"]["summary"]["j_from_curve"]["failed"] == 1);
  CHECK(j["status"] == 1);
}

TEST_CASE("gl2 command", "[cli]") {
  auto plain = run_json({"gl2", "--at", "1.1i"});
  auto ident = run_json({"gl2", "--matrix", "I", "--at", "1.1i"});
  CHECK(plain["outputs"]["value"]["re"] == ident["outputs"]["value"]["re"]);
  CHECK(plain["outputs"]["value"]["im"] == ident["outputs"]["value"]["im"]);
  auto seq = run_json({"gl2", "--matrix", "S", "--matrix", "T", "--at", "1.1i"});
  auto prod = run_json({"gl2", "--matrix", "0,-1,1,1", "--at", "1.1i"});
  CHECK(std::abs(seq["outputs"]["value"]["re"].get<double>() - prod["outputs"]["value"]["re"].get<double>()) < 1e-10);
  CHECK(std::abs(seq["outputs"]["value"]["im"].get<double>() - prod["outputs"]["value"]["im"].get<double>()) < 1e-10);
  CHECK(seq["outputs"]["product"] == "0,-1,1,1");
  CHECK(run({"gl2", "--matrix", "1,2,2,4", "--at", "1.1i"}).code == kUsage);
  CHECK(run({"gl2", "--matrix", "1,2", "--at", "1.1i"}).code == kUsage);
  CHECK(run({"gl2"}).code == kUsage);
  CHECK(run({"gl2", "--solution", "constant", "--alpha", "1/2", "--beta", "1/3", "--at", "0.1"}).code == kOk);
  CHECK(run({"gl2", "--solution", "frobenius", "--tau0", "i", "--omega", "1", "--at", "0.01"}).code == kOk);
}

TEST_CASE("isomorphic and sl2 commands", "[cli]") {
  Run r = run({"isomorphic", "--tau0", "i", "--omega0", "1", "--tau1", "i", "--omega1", "i"});
  CHECK(r.code == kOk);
  CHECK(has_line(r.out, "isomorphic: yes"));
  CHECK(has_line(r.out, "k: 4"));
  Run no = run({"isomorphic", "--tau0", "2*sqrt(-1)", "--omega0", "1", "--tau1", "3*sqrt(-1)", "--omega1", "1"});
  CHECK(has_line(no.out, "isomorphic: no"));
  Run s = run({"sl2", "--matrix", "S", "--tau", "sqrt(-2)", "--omega", "1", "--at", "0.01"});
  CHECK(s.code == kOk);
  CHECK(has_line(s.out, "invariant: yes"));
  CHECK(run({"sl2", "--matrix", "2,0,0,1", "--tau", "i", "--omega", "1"}).code == kUsage);
}

TEST_CASE("command line contract", "[cli]") {
  CHECK(run({}).code == kUsage);
  CHECK(run({"bogus"}).code == kUsage);
  CHECK(run({"--help"}).code == kOk);
  CHECK(run({"coeffs", "--help"}).code == kOk);
  CHECK(run({"eisenstein", "--k", "2", "--tau", "i", "--no-such-flag"}).code == kUsage);
  std::vector<std::vector<std::string>> cmds = {
      {"eisenstein", "--k", "6", "--tau", "0.1+2.5i"},
      {"coeffs", "--tau", "sqrt(-2)", "--omega", "0.7+0.2i", "--terms", "8"},
      {"verify-catalog"},
      {"--json", "verify-catalog", "--row", "13"},
      {"gl2", "--matrix", "2,1,1,1", "--at", "0.2+1.3i", "--order", "3"}};
  for (const auto& c : cmds) {
    Run a = run(c), b = run(c);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
  auto j = run_json({"eisenstein", "--k", "2", "--tau", "i"});
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "inputs", "outputs", "status"});
}
