#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qortho/integrate.hpp"

using namespace qortho;
using namespace qortho::integrate;
using namespace qortho::measures;
using families::EvalPoint;
using families::FamilyId;
using families::FamilySpec;
using qcore::QBase;
using doctest::Approx;

namespace {
const QBase q05{0.5};
const double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
}  // namespace

TEST_CASE("interval quadrature basics") {
  auto r = integrate_interval(one(), lebesgue(0.0, kPi));
  CHECK(r.value.real() == Approx(kPi).epsilon(1e-12));

  // Symmetric integrand: full interval equals twice the half interval.
  Integrand f = [](const SamplePoint& sp) {
    return Complex{std::sin(sp.u) * std::sin(sp.u), 0.0};
  };
  const double full = integrate_interval(f, lebesgue(0.0, kPi)).value.real();
  const double half = integrate_interval(f, lebesgue(0.0, kPi / 2.0)).value.real();
  CHECK(full == Approx(2.0 * half).epsilon(1e-12));
}

TEST_CASE("total mass of the hermite trig weight") {
  // equals 2 pi / (q;q)_inf by the two-parameter integral at t1 = t2 = 0
  for (double q : {0.3, 0.5, 0.8}) {
    auto r = integrate_interval(one(), hermite_trig_weight(QBase{q}));
    const double expect = 2.0 * kPi / oracle::brute_qpoch_inf({q, 0.0}, q).real();
    CHECK(r.value.real() == Approx(expect).epsilon(1e-10));
    CHECK(std::abs(r.value.real() - expect) <= 10.0 * r.err_estimate + 1e-12);
  }
}

TEST_CASE("circle rule basics") {
  auto r1 = integrate_circle(one(), unit_circle());
  CHECK(r1.value.real() == Approx(1.0).epsilon(1e-14));

  Integrand fz = [](const SamplePoint& sp) { return std::exp(kI * sp.u); };
  CHECK(std::abs(integrate_circle(fz, unit_circle()).value) < 1e-14);

  // |1+z|^4 has mean 6: exact once the node count exceeds the bandwidth.
  Integrand f4 = [](const SamplePoint& sp) {
    const Complex z = std::exp(kI * sp.u);
    const double m = std::abs(1.0 + z);
    return Complex{m * m * m * m, 0.0};
  };
  auto r4 = integrate_circle(f4, unit_circle());
  CHECK(r4.value.real() == Approx(6.0).epsilon(1e-13));
  CHECK(r4.evaluations <= 256);  // spectral: converges at the first doubling
}

TEST_CASE("szego weight mass is 1/(q;q)_inf") {
  for (double q : {0.3, 0.5, 0.8}) {
    auto [szego, omega] = circle_weights(QBase{q}, 0.0, 0.0);
    auto r = integrate_circle(one(), szego);
    CHECK(r.value.real() ==
          Approx(1.0 / oracle::brute_qpoch_inf({q, 0.0}, q).real()).epsilon(1e-11));
  }
}

TEST_CASE("inner products against measures") {
  // probability measure
  auto mu = carlitz_measure(-1.0, q05);
  CHECK(inner_product(one(), one(), mu).value.real() == Approx(1.0).epsilon(1e-12));

  // odd-degree orthogonality to constants under the hermite weight
  FamilySpec cqh{FamilyId::ContinuousQHermite, q05, {}};
  auto h1 = family_integrand(cqh, 1, EvalPoint::Kind::Trig);
  auto w = hermite_trig_weight(q05);
  CHECK(std::abs(inner_product(h1, one(), w).value) < 1e-10);

  // <H1, H1> = 2 pi (q;q)_1 / (q;q)_inf
  const double expect = 2.0 * kPi * 0.5 / oracle::brute_qpoch_inf({0.5, 0.0}, 0.5).real();
  CHECK(inner_product(h1, h1, w).value.real() == Approx(expect).epsilon(1e-10));

  // U_1 integrates to zero against the carlitz measure
  families::FamilyParams pa;
  pa.a = -1.0;
  FamilySpec u{FamilyId::ASCarlitzU, q05, pa};
  auto u1 = family_integrand(u, 1, EvalPoint::Kind::Line);
  CHECK(std::abs(sum_discrete([&](const SamplePoint& sp) { return u1(sp); }, mu).value) <
        1e-11);

  // moment of x^2 under the n-extremal measure: q^{-1}(q;q)_1 / 4
  auto next = qinv_hermite_measure(0.8, q05);
  Integrand x2 = [](const SamplePoint& sp) { return Complex{sp.u * sp.u, 0.0}; };
  CHECK(sum_discrete(x2, next).value.real() == Approx(2.0 * 0.5 / 4.0).epsilon(1e-9));
}

TEST_CASE("linearity of inner products") {
  auto w = hermite_trig_weight(q05);
  FamilySpec cqh{FamilyId::ContinuousQHermite, q05, {}};
  auto f = family_integrand(cqh, 2, EvalPoint::Kind::Trig);
  auto g = family_integrand(cqh, 3, EvalPoint::Kind::Trig);
  auto h = family_integrand(cqh, 1, EvalPoint::Kind::Trig);
  const Complex alpha{1.7, -0.4};
  Integrand combo = [&](const SamplePoint& sp) { return alpha * f(sp) + g(sp); };
  const Complex lhs = inner_product(combo, h, w).value;
  const Complex rhs = alpha * inner_product(f, h, w).value + inner_product(g, h, w).value;
  CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
}

TEST_CASE("refinement convergence: tighter tolerance does not move a settled result") {
  auto w = asc_weight(0.45, -0.3, QBase{0.8});
  QuadOptions loose, tight;
  tight.eps_quad = loose.eps_quad / 10.0;
  const double a = integrate_interval(one(), w, loose).value.real();
  const double b = integrate_interval(one(), w, tight).value.real();
  CHECK(a == Approx(b).epsilon(1e-10));
}

TEST_CASE("real-line integration and failure modes") {
  auto v = v_measures(1.2, q05, 1.0);
  REQUIRE(v.nu.has_value());
  auto r = integrate_interval(one(), *v.nu);
  CHECK(r.value.real() == Approx(1.0).epsilon(1e-8));

  // Attach an integrand that grows too fast: the expansion must abort.
  auto growing = v.nu->attach_density([](double x) { return std::exp(x * x); },
                                      std::numeric_limits<double>::quiet_NaN(), false);
  CHECK_THROWS_AS(integrate_interval(one(), growing), Error);
}

TEST_CASE("discrete sums carry honest error estimates") {
  auto mu = qinv_hermite_measure(0.9, QBase{0.8});
  Integrand x4 = [](const SamplePoint& sp) {
    return Complex{sp.u * sp.u * sp.u * sp.u, 0.0};
  };
  QuadOptions loose;
  loose.eps_tail = 1e-6;
  QuadOptions tight;
  tight.eps_tail = 1e-15;
  auto a = sum_discrete(x4, mu, loose);
  auto b = sum_discrete(x4, mu, tight);
  CHECK(std::abs(a.value - b.value) <= 10.0 * a.err_estimate + 1e-15);
}

TEST_CASE("gauss-legendre nodes are symmetric and integrate polynomials exactly") {
  const auto& [x, w] = gauss_legendre(32);
  double s = 0.0, sx2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += w[i];
    sx2 += w[i] * x[i] * x[i];
    CHECK(x[i] == Approx(-x[x.size() - 1 - i]).epsilon(1e-14));
  }
  CHECK(s == Approx(2.0).epsilon(1e-14));
  CHECK(sx2 == Approx(2.0 / 3.0).epsilon(1e-13));
}
