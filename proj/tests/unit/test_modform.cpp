#include "frob3/modform/curve.hpp"
#include "frob3/modform/divisor.hpp"
#include "frob3/modform/eisenstein.hpp"
#include "frob3/modform/gamma_constants.hpp"
#include "frob3/modform/q_series.hpp"
#include "support.hpp"

using namespace frob3;
using frob3::test::dist;
using frob3::test::rel_dist;

namespace {

struct Ref {
  double re, im;
};

// mpmath at 40 digits, tests/oracles/generate.py
struct PointRef {
  double x, y;
  Ref e2, e4, e6, star, j, dstar;
};

const PointRef kPoints[] = {
    {0.3, 0.8,
     {1.051147891724535006, -0.1479291111727263139},
     {0.4396909820488631716, 1.441922768377567445},
     {2.572807551282898333, -2.704741060381183083},
     {-0.1425141814646799458, -0.1479291111727263139},
     {-245.7350297399828454, 431.6276952898429396},
     {-0.03677197600522235564, -0.1166465646658674985}},
    {-0.45, 1.7,
     {1.000524218699603573, 0.0001703166403827061147},
     {0.9947584275181913986, -0.001702719959760607357},
     {1.011002140722975609, 0.003571962378073639456},
     {0.438800890139972961694, 0.0001703166403827061147},
     {-40668.45111759665995, 13452.93592058412838},
     {-0.06685101961152639746, 0.0001543491788809807978}},
    {0.1, 2.5,
     {0.9999970739132868405, -0.000002125927625779286130},
     {1.000029260877237636, 0.00002125930736102638134},
     {0.9999385520729102836, -0.00004464480672551383620},
     {0.6180252104927380346, -0.000002125927625779286130},
     {5369076.607753531438, -3900321.909130219545},
     {-0.05150617500643033746, -0.000001990588424821293466}},
};

Point approx(double x, double y) { return ApproxComplex(x, y); }

ApproxComplex random_tau(double ymin = 0.8, double ymax = 3.0) {
  return {test::uniform(-0.5, 0.5), test::uniform(ymin, ymax)};
}

ExactMoebius random_word(int max_len) {
  std::uniform_int_distribution<int> len(1, max_len), pick(0, 2);
  ExactMoebius A = ExactMoebius::identity();
  int n = len(test::rng());
  for (int i = 0; i < n; ++i) {
    switch (pick(test::rng())) {
      case 0: A = A * ExactMoebius::S(); break;
      case 1: A = A * ExactMoebius::T(1); break;
      default: A = A * ExactMoebius::T(-1); break;
    }
  }
  return A;
}

}  // namespace

TEST_CASE("divisor_sum", "[modform]") {
  CHECK(divisor_sum(1, 1) == 1);
  CHECK(divisor_sum(1, 6) == 12);
  CHECK(divisor_sum(5, 2) == 33);
  CHECK(divisor_sum(3, 12) == 1 + 8 + 27 + 64 + 216 + 1728);
  REQUIRE_ERRC(divisor_sum(0, 4), Errc::InvalidArgument);
  REQUIRE_ERRC(divisor_sum(1, 0), Errc::InvalidArgument);
}

TEST_CASE("Eisenstein series against reference values", "[modform]") {
  for (const auto& p : kPoints) {
    Point tau = approx(p.x, p.y);
    INFO("tau = " << p.x << " + " << p.y << "i");
    CHECK(rel_dist(eisenstein(2, tau).value, p.e2.re, p.e2.im) < 1e-12);
    CHECK(rel_dist(eisenstein(4, tau).value, p.e4.re, p.e4.im) < 1e-12);
    CHECK(rel_dist(eisenstein(6, tau).value, p.e6.re, p.e6.im) < 1e-12);
    CHECK(rel_dist(e2_star(tau), p.star.re, p.star.im) < 1e-12);
    CHECK(rel_dist(j_invariant(tau), p.j.re, p.j.im) < 1e-10);
    CHECK(rel_dist(ahd_e2_star(1, tau), p.dstar.re, p.dstar.im) < 1e-10);
  }
}

TEST_CASE("Eisenstein series off the fundamental domain", "[modform]") {
  CHECK(rel_dist(eisenstein(4, approx(0.0, 0.5)).value, 16.01339181495580255) < 1e-12);
  auto e6 = eisenstein(6, approx(0.3, 0.15)).value;
  CHECK(rel_dist(e6, -720.3934612667613522, -196.1721483270186435) < 1e-11);
  auto e2 = eisenstein(2, approx(0.3, 0.15)).value;
  CHECK(rel_dist(e2, 7.860574510387263058, -2.063264599953002583) < 1e-11);
  REQUIRE_ERRC(eisenstein(4, approx(0.2, -1.0)), Errc::NotUpperHalfPlane);
  REQUIRE_ERRC(eisenstein(3, approx(0.2, 1.0)), Errc::InvalidArgument);
}

TEST_CASE("Eisenstein values at i and rho", "[modform]") {
  Point i = QuadraticPoint::i();
  Point rho = QuadraticPoint::rho();
  CHECK(dist(eisenstein(2, i).value, 3 / M_PI) < 1e-14);
  CHECK(eisenstein(4, rho).value.mag() < 1e-12);
  CHECK(eisenstein(6, i).value.mag() < 1e-12);
  CHECK(e2_star(i).mag() < 1e-12);
  CHECK(e2_star(rho).mag() < 1e-12);
  CHECK(dist(e2_star(QuadraticPoint(0, 1, 1, 3)), 0.4482203943883814) < 1e-12);
  CHECK(dist(ahd_e2_star(1, i), -eisenstein(4, i).value.re() / 12) < 1e-14);
  CHECK(rel_dist(ahd_e2_star(2, rho), 2.881541100790945623 / 36) < 1e-12);
  CHECK(dist(eisenstein(6, rho).value, 2.881541100790945623) < 1e-12);
}

TEST_CASE("error bounds are sound", "[modform]") {
  for (int n = 0; n < 10; ++n) {
    Point tau = random_tau(0.3, 2.0);
    for (int k : {2, 4, 6}) {
      auto coarse = eisenstein(k, tau, 1e-8).value;
      auto fine = eisenstein(k, tau, 1e-10).value;
      CHECK(dist(coarse, fine) <= coarse.err() + fine.err());
    }
  }
}

TEST_CASE("j-invariant", "[modform]") {
  CHECK(dist(j_invariant(Point(QuadraticPoint::i())), 1728.0) < 1e-9);
  CHECK(j_invariant(Point(QuadraticPoint::rho())).mag() < 1e-9);
  CHECK(j_invariant(CurveModel(60, -88)) == BigRational(54000));
  CHECK(j_invariant(CurveModel(0, -1)) == BigRational(0));
  CHECK(j_invariant(CurveModel(-4, 0)) == BigRational(1728));
  REQUIRE_ERRC(CurveModel(3, 1), Errc::SingularCurve);
}

TEST_CASE("Gamma constants", "[modform]") {
  auto g4 = gamma_constant(GammaArg::Quarter);
  auto g3 = gamma_constant(GammaArg::Third);
  CHECK(rel_dist(g4, 3.625609908221908311930685) < 1e-15);
  CHECK(rel_dist(g3, 2.678938534707747633655693) < 1e-15);
  // quadrature of the Euler integral, mpmath
  CHECK(std::abs(g4.re() - 3.625609908188399) < 1e-10);
  double lhs = 64 * std::pow(M_PI, 6) * eisenstein(4, Point(QuadraticPoint::i())).value.re() / 3;
  CHECK(std::abs(lhs - std::pow(g4.re(), 8)) < 1e-7);
}

TEST_CASE("Ramanujan identities against differentiated q-series", "[modform]") {
  for (int n = 0; n < 20; ++n) {
    ApproxComplex tau = random_tau();
    auto e2 = q_series<double>(2, 0, tau, 1e-16), e4 = q_series<double>(4, 0, tau, 1e-16),
         e6 = q_series<double>(6, 0, tau, 1e-16);
    auto d2 = q_series<double>(2, 1, tau, 1e-16), d4 = q_series<double>(4, 1, tau, 1e-16),
         d6 = q_series<double>(6, 1, tau, 1e-16);
    CHECK(dist(d2, (e2 * e2 - e4) / ApproxComplex(12)) < 1e-10);
    CHECK(dist(d4, (e2 * e4 - e6) / ApproxComplex(3)) < 1e-10);
    CHECK(dist(d6, (e2 * e6 - e4 * e4) / ApproxComplex(2)) < 1e-10);
    auto r = ramanujan_e2_derivatives(e2, e4, e6);
    for (unsigned m = 1; m <= 3; ++m) CHECK(dist(r[m], q_series<double>(2, m, tau, 1e-16)) < 1e-9);
  }
}

TEST_CASE("transformation laws", "[modform]") {
  Point t13 = approx(0.0, 1.3);
  for (auto kind : {FormKind::E2, FormKind::E4, FormKind::E6, FormKind::Star})
    CHECK(verify_transform(kind, ExactMoebius::identity(), t13) < 1e-14);
  CHECK(verify_transform(FormKind::E4, ExactMoebius::S(), approx(0.0, 2.0)) < 1e-10);
  CHECK(verify_transform(FormKind::E2, ExactMoebius::T(), approx(0.21, 0.9)) < 1e-13);
  for (int n = 0; n < 20; ++n) {
    ExactMoebius A = random_word(8);
    Point tau = random_tau(0.5, 2.0);
    CHECK(verify_transform(FormKind::Star, A, tau) < 1e-9);
    CHECK(verify_transform(FormKind::E2, A, tau) < 1e-9);
  }
  REQUIRE_ERRC(verify_transform(FormKind::E4, ExactMoebius(2, 0, 0, 1), t13), Errc::InvalidArgument);
}

TEST_CASE("second almost holomorphic derivative uses the cube", "[modform]") {
  // ∂ applied to (E2*² − E4)/12 with ∂E2* = (E2*² − E4)/12, ∂E4 = (E2*E4 − E6)/3
  for (int n = 0; n < 10; ++n) {
    Point tau = random_tau();
    EisensteinTriple t = eisenstein_triple(tau, 1e-15);
    WideComplex s = t.e2_star;
    WideComplex ds = (s * s - t.e4) / WideComplex(12);
    WideComplex de4 = (s * t.e4 - t.e6) / WideComplex(3);
    WideComplex leibniz = (WideComplex(2) * s * ds - de4) / WideComplex(12);
    ApproxComplex closed = ahd_e2_star(2, tau);
    CHECK(dist(narrow<double>(leibniz), closed) < 1e-9);
    // the squared variant is a different function
    WideComplex squared = (t.e6 - WideComplex::from_rational(BigRational(3, 2)) * s * t.e4 +
                           WideComplex::from_rational(BigRational(1, 2)) * s * s) / WideComplex(36);
    CHECK(dist(narrow<double>(squared), closed) > 1e-6);
  }
}
