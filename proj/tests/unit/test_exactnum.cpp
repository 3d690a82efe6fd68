#include "frob3/exactnum/big_rational.hpp"
#include "frob3/exactnum/moebius.hpp"
#include "frob3/exactnum/quadratic_point.hpp"
#include "frob3/exactnum/recognize.hpp"
#include "frob3/exactnum/reduce.hpp"
#include "support.hpp"

using namespace frob3;
using frob3::test::dist;

namespace {

template <class M>
concept CanApplyToQuadratic = requires(M m, QuadraticPoint q) { moebius_apply(m, q); };

}  // namespace

TEST_CASE("BigRational stays in lowest terms", "[exactnum]") {
  BigRational a(BigInt(6), BigInt(-4));
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a.str() == "-3/2");
  CHECK(BigRational(BigInt(8), BigInt(4)).str() == "2");
  CHECK(BigRational::parse(" -21 / 128 ") == BigRational(-21, 128));
  REQUIRE_ERRC(BigRational::parse("1/0"), Errc::ParseError);
  REQUIRE_ERRC(BigRational::parse("x"), Errc::ParseError);
}

TEST_CASE("BigRational arithmetic round trips exactly", "[exactnum]") {
  auto& g = test::rng();
  std::uniform_int_distribution<long long> num(-100000, 100000), den(1, 100000);
  for (int i = 0; i < 200; ++i) {
    BigRational a(BigInt(num(g)), BigInt(den(g)));
    BigRational c(BigInt(num(g)), BigInt(den(g)));
    CHECK((a + c) - c == a);
    if (!c.is_zero()) CHECK((a * c) / c == a);
  }
  CHECK(BigRational(1, 3).pow(3) == BigRational(1, 27));
  CHECK(BigRational(-7, 2).floor() == -4);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("BigRational from_double is exact", "[exactnum]") {
  CHECK(BigRational::from_double(0.5) == BigRational(1, 2));
  CHECK(BigRational::from_double(-3.0) == BigRational(-3));
  BigRational tenth = BigRational::from_double(0.1);
  CHECK(tenth != BigRational(1, 10));
  CHECK(tenth.to_double() == 0.1);
}

TEST_CASE("ApproxComplex bounds cover the exact result", "[exactnum]") {
  ApproxComplex third = ApproxComplex::from_rational(BigRational(1, 3));
  ApproxComplex x = third * ApproxComplex(3);
  CHECK(x.contains(1.0, 0.0));
  ApproxComplex z(0.25, 0.5, 1e-10);
  ApproxComplex w = z / z;
  CHECK(w.contains(1.0, 0.0));
  CHECK(w.err() > 1e-10);
  REQUIRE_ERRC(ApproxComplex(1) / ApproxComplex(0.0, 0.0, 1e-3), Errc::PoleAtInput);
  REQUIRE_ERRC(ApproxComplex(1.0, 0.0, -1.0), Errc::InvalidArgument);
  ApproxComplex r = sqrt(ApproxComplex(-4));
  CHECK(dist(r, 0.0, 2.0) <= r.err() + 1e-15);
  ApproxComplex c = cbrt(ApproxComplex(-8));
  CHECK(dist(c * c * c, -8.0) < 1e-13);
}

TEST_CASE("QuadraticPoint canonical form", "[exactnum]") {
  QuadraticPoint t(0, 1, 1, 4);  // sqrt(-4) = 2i
  CHECK(t.D() == 1);
  CHECK(t == QuadraticPoint(0, 2, 1, 1));
  CHECK(t.to_string() == "2*sqrt(-1)");
  CHECK(QuadraticPoint(-2, 2, 4, 7).to_string() == "(-1+sqrt(-7))/2");
  CHECK(QuadraticPoint::rho().to_string() == "(-1+sqrt(-3))/2");
  CHECK(QuadraticPoint(0, 3, 1, 12).to_string() == "6*sqrt(-3)");
  REQUIRE_ERRC(QuadraticPoint(0, -1, 1, 3), Errc::NotUpperHalfPlane);
  REQUIRE_ERRC(QuadraticPoint(0, 0, 1, 3), Errc::NotUpperHalfPlane);
  ApproxComplex e = QuadraticPoint::rho().embed();
  CHECK(e.contains(-0.5, std::sqrt(3.0) / 2));
  CHECK(e.err() <= 4 * std::numeric_limits<double>::epsilon());
}

TEST_CASE("moebius_apply on exact points", "[exactnum]") {
  CHECK(moebius_apply(ExactMoebius::identity(), QuadraticPoint::i()) == QuadraticPoint::i());
  CHECK(moebius_apply(ExactMoebius::S(), QuadraticPoint::i()) == QuadraticPoint::i());
  QuadraticPoint shifted(5, 1, 1, 2);
  CHECK(moebius_apply(ExactMoebius(1, -5, 0, 1), shifted) == QuadraticPoint(0, 1, 1, 2));
  REQUIRE_ERRC(ExactMoebius(1, 2, 2, 4), Errc::SingularMatrix);
  REQUIRE_ERRC(ExactMoebius(0, 1, 1, 0).apply(BigRational(0)), Errc::PoleAtInput);
  static_assert(CanApplyToQuadratic<ExactMoebius>);
  static_assert(!CanApplyToQuadratic<ApproxMoebius>);
}

TEST_CASE("Moebius composition law", "[exactnum]") {
  ExactMoebius A(2, 1, 1, 1), B(1, -3, 0, 1);
  QuadraticPoint z(1, 1, 3, 5);
  CHECK(moebius_apply(A, moebius_apply(B, z)) == moebius_apply(A * B, z));
  CHECK((A * B) * ExactMoebius::S() == A * (B * ExactMoebius::S()));
  CHECK(A * A.inverse() == ExactMoebius::identity());

  ApproxComplex w(0.3, 0.7);
  auto lhs = moebius_apply(A.to_approx(), moebius_apply(B.to_approx(), w));
  auto rhs = moebius_apply((A * B).to_approx(), w);
  CHECK(lhs.overlaps(rhs));
}

TEST_CASE("fundamental_domain_reduce, exact", "[exactnum]") {
  auto r = fundamental_domain_reduce(QuadraticPoint(5, 1, 1, 2));
  CHECK(r.tau == QuadraticPoint(0, 1, 1, 2));
  CHECK(r.A == ExactMoebius(1, -5, 0, 1));
  auto ri = fundamental_domain_reduce(QuadraticPoint::i());
  CHECK(ri.tau == QuadraticPoint::i());
  CHECK(ri.A == ExactMoebius::identity());
  // boundary ties land on Re τ ≤ 0
  auto rr = fundamental_domain_reduce(QuadraticPoint(1, 1, 2, 3));
  CHECK(rr.tau == QuadraticPoint::rho());
  for (auto q : {QuadraticPoint(7, 1, 13, 3), QuadraticPoint(-11, 2, 5, 7), QuadraticPoint(3, 1, 10, 163)}) {
    auto red = fundamental_domain_reduce(q);
    CHECK(moebius_apply(red.A, q) == red.tau);
    CHECK(red.A.det() == BigRational(1));
    CHECK(is_integral(red.A));
    CHECK(red.tau.norm() >= BigRational(1));
    CHECK(red.tau.re().abs() <= BigRational(1, 2));
    auto again = fundamental_domain_reduce(red.tau);
    CHECK(again.tau == red.tau);
    CHECK(again.A == ExactMoebius::identity());
  }
}

TEST_CASE("fundamental_domain_reduce, approximate", "[exactnum]") {
  ApproxComplex z(0.1, 0.1);
  auto r = fundamental_domain_reduce(z);
  CHECK(r.tau.mag() >= 1 - 1e-12);
  CHECK(std::abs(r.tau.re()) <= 0.5 + 1e-12);
  CHECK(dist(moebius_apply(r.A, z), r.tau) < 1e-12);
  REQUIRE_ERRC(fundamental_domain_reduce(ApproxComplex(0.3, -0.1)), Errc::NotUpperHalfPlane);
  REQUIRE_ERRC(fundamental_domain_reduce(ApproxComplex(0.3, 1e-5, 1e-4)), Errc::NotUpperHalfPlane);
}

TEST_CASE("rational_recognize", "[exactnum]") {
  CHECK(rational_recognize(ApproxComplex(0.5, 0.0, 1e-15), 1000000) == BigRational(1, 2));
  CHECK(rational_recognize(ApproxComplex(0.333333333333, 0.0, 1e-12), 1000000) == BigRational(1, 3));
  CHECK_FALSE(rational_recognize(ApproxComplex(3.14159265358979, 0.0, 1e-14), 100).has_value());
  CHECK_FALSE(rational_recognize(ApproxComplex(0.5, 1e-3, 1e-15), 1000000).has_value());
  CHECK(rational_recognize(ApproxComplex(-0.0), 10) == BigRational(0));
}

TEST_CASE("rational_recognize inverts double embedding on a small sweep", "[exactnum]") {
  int failures = 0;
  for (int q = 1; q <= 10000; q += 37) {
    for (int p = -10000; p <= 10000; p += 211) {
      BigRational x(p, q);
      auto got = rational_recognize(ApproxComplex(x.to_double()), 10000);
      if (!got || *got != x) ++failures;
    }
  }
  CHECK(failures == 0);
}
