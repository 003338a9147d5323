#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "oracles.hpp"
#include "qortho/qcore.hpp"

using namespace qortho;
using namespace qortho::qcore;
using doctest::Approx;

namespace {
const QBase q05{0.5};
const QBase q03{0.3};
const QBase q08{0.8};

double rel(Complex a, Complex b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}
}  // namespace

TEST_CASE("QBase rejects q outside its interval") {
  CHECK_THROWS_AS(QBase{0.0}, DomainViolation);
  CHECK_THROWS_AS(QBase{1.0}, DomainViolation);
  CHECK_THROWS_AS(QBase{1.5}, DomainViolation);
  CHECK_THROWS_AS(QBase{-0.2}, DomainViolation);
  CHECK_NOTHROW(QBase{0.5});
}

TEST_CASE("qpoch basic values") {
  CHECK(qpoch({0.7, 0.0}, q05, 0).value == Complex{1.0, 0.0});   // empty product
  CHECK(qpoch({0.0, 0.0}, q05, 5).value == Complex{1.0, 0.0});   // all factors 1
  CHECK(qpoch({0.5, 0.0}, q05, 2).value.real() == Approx(0.375).epsilon(1e-15));
  CHECK(qpoch({0.5, 0.0}, q05, 2).err_bound == 0.0);
}

TEST_CASE("qpoch recursive consistency: (a;q)_{n+1} = (a;q)_n (1-a q^n)") {
  const Complex as[] = {{0.4, 0.0}, {-0.9, 0.0}, {1.7, 0.0}, {0.3, 0.2}, {-2.0, -1.0}};
  for (const QBase& b : {q03, q05, q08}) {
    for (Complex a : as) {
      for (long n = 0; n < 12; ++n) {
        const Complex left = qpoch(a, b, n + 1).value;
        const Complex right = qpoch(a, b, n).value *
                              (1.0 - a * std::pow(b.q(), static_cast<double>(n)));
        CHECK(rel(left, right) < 1e-14);
      }
    }
  }
}

TEST_CASE("qpoch_inf against brute-force product") {
  CHECK(qpoch_inf({0.0, 0.0}, q05).value == Complex{1.0, 0.0});
  CHECK(qpoch_inf({1.0, 0.0}, q05).value == Complex{0.0, 0.0});  // first factor 0

  // Frozen: (0.5;0.5)_inf, brute product stagnates at this value.
  const Complex brute = oracle::brute_qpoch_inf({0.5, 0.0}, 0.5);
  CHECK(brute.real() == Approx(0.2887880951).epsilon(1e-9));
  CHECK(rel(qpoch_inf({0.5, 0.0}, q05).value, brute) < 1e-13);

  const Complex as[] = {{0.9, 0.0}, {-1.3, 0.0}, {25.0, 0.0}, {0.2, 0.7}, {-4.0, 3.0}};
  for (const QBase& b : {q03, q05, q08}) {
    for (Complex a : as) {
      CHECK(rel(qpoch_inf(a, b).value, oracle::brute_qpoch_inf(a, b.q())) < 1e-13);
    }
  }
}

TEST_CASE("qpoch_inf error bound is honest") {
  const Complex as[] = {{0.9, 0.0}, {-1.3, 0.0}, {0.2, 0.7}};
  for (const QBase& b : {q03, q05, q08}) {
    for (Complex a : as) {
      const QSeriesValue v = qpoch_inf(a, b, 1e-10);  // loose truncation
      const Complex exact = oracle::brute_qpoch_inf(a, b.q());
      CHECK(std::abs(v.value - exact) <= 10.0 * v.err_bound + 1e-15);
    }
  }
}

TEST_CASE("splitting identity: (a;q)_inf = (a;q)_n (a q^n;q)_inf") {
  const Complex as[] = {{0.6, 0.0}, {-0.8, 0.0}, {0.3, 0.4}};
  for (const QBase& b : {q03, q05, q08}) {
    for (Complex a : as) {
      const Complex full = qpoch_inf(a, b).value;
      for (long n = 0; n <= 20; ++n) {
        const Complex split =
            qpoch(a, b, n).value *
            qpoch_inf(a * std::pow(b.q(), static_cast<double>(n)), b).value;
        CHECK(rel(full, split) < 1e-12);
      }
    }
  }
}

TEST_CASE("qpoch_multi") {
  const std::vector<Complex> zeros{{0.0, 0.0}, {0.0, 0.0}};
  CHECK(qpoch_multi(zeros, q05, std::nullopt).value == Complex{1.0, 0.0});

  // (t;q)_inf (-t;q)_inf = (t^2;q^2)_inf
  const double t = 0.3;
  const std::vector<Complex> pm{{t, 0.0}, {-t, 0.0}};
  const Complex left = qpoch_multi(pm, q05, std::nullopt).value;
  const Complex right = oracle::brute_qpoch_inf({t * t, 0.0}, 0.25);
  CHECK(rel(left, right) < 1e-13);

  const std::vector<Complex> single{{0.5, 0.0}};
  CHECK(qpoch_multi(single, q05, 2).value.real() == Approx(0.375).epsilon(1e-15));
}

TEST_CASE("phi_eval: terminating q-Chu-Vandermonde two-term case") {
  // 2phi1(q^-1, a; c; q, q) = (a-c)/(1-c)
  const double a = 0.3, c = 0.7, q = 0.5;
  const QSeriesValue v = phi({{1.0 / q, 0.0}, {a, 0.0}}, {{c, 0.0}}, {q, 0.0}, q05);
  CHECK(v.value.real() == Approx((a - c) / (1 - c)).epsilon(1e-14));
  CHECK(v.value.real() == Approx(-1.3333333333).epsilon(1e-9));
  CHECK(v.err_bound == 0.0);

  // matches (c/a;q)_1 a / (c;q)_1
  const Complex rhs = poch({c / a, 0.0}, q05, 1) * a / poch({c, 0.0}, q05, 1);
  CHECK(rel(v.value, rhs) < 1e-14);
}

TEST_CASE("phi_eval: z = 0 gives 1") {
  const QSeriesValue v = phi({{0.4, 0.0}, {0.2, 0.0}}, {{0.6, 0.0}}, {0.0, 0.0}, q05);
  CHECK(v.value == Complex{1.0, 0.0});
}

TEST_CASE("phi_eval: 2phi1(0,0;0;q,z) = 1/(z;q)_inf") {
  const Complex z{0.3, 0.0};
  const QSeriesValue v = phi({{0.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}}, z, q05);
  CHECK(rel(v.value, 1.0 / oracle::brute_qpoch_inf(z, 0.5)) < 1e-13);
}

TEST_CASE("phi_eval agrees with from-scratch term sums") {
  // Nonterminating 2phi1 with |z| < 1, three bases.
  for (const QBase& b : {q03, q05, q08}) {
    const std::vector<Complex> num{{0.4, 0.0}, {-0.3, 0.1}};
    const std::vector<Complex> den{{0.6, 0.0}};
    const Complex z{0.55, -0.2};
    const Complex mine = phi(num, den, z, b).value;
    const Complex brute = oracle::brute_phi(num, den, z, b.q(), 300);
    CHECK(rel(mine, brute) < 1e-12);
  }
  // 2phi2 (excess +1) and terminating 3phi1 (excess -1).
  {
    const std::vector<Complex> num{{0.4, 0.0}, {0.7, 0.0}};
    const std::vector<Complex> den{{0.5, 0.0}, {-0.3, 0.0}};
    const Complex z{1.7, 0.4};
    CHECK(rel(phi(num, den, z, q05).value, oracle::brute_phi(num, den, z, 0.5, 300)) < 1e-12);
  }
  {
    const double q = 0.5;
    const std::vector<Complex> num{{std::pow(q, -4.0), 0.0}, {0.3, 0.0}, {-0.8, 0.0}};
    const std::vector<Complex> den{{0.25, 0.0}};
    const Complex z{0.6, 0.0};
    CHECK(rel(phi(num, den, z, q05).value, oracle::brute_phi(num, den, z, q, 5)) < 1e-12);
  }
}

TEST_CASE("phi_eval: terminating sums invariant under max_terms") {
  const double q = 0.5;
  const std::vector<Complex> num{{std::pow(q, -6.0), 0.0}, {0.3, 0.0}};
  const std::vector<Complex> den{{0.7, 0.0}};
  const Complex a = phi(num, den, {q, 0.0}, q05, 50).value;
  const Complex b = phi(num, den, {q, 0.0}, q05, 5000).value;
  CHECK(rel(a, b) < 1e-12);
}

TEST_CASE("phi_eval error paths") {
  // Denominator parameter at q^{-2}: rejected at construction.
  CHECK_THROWS_AS(PhiSeries({{0.3, 0.0}}, {{4.0, 0.0}}, {0.1, 0.0}, q05), DenominatorPole);
  // r = s+1 nonterminating with |z| >= 1.
  CHECK_THROWS_AS(phi({{0.3, 0.0}, {0.4, 0.0}}, {{0.5, 0.0}}, {1.0, 0.0}, q05), NonConvergent);
  // r > s+1 nonterminating diverges.
  CHECK_THROWS_AS(phi({{0.3, 0.0}, {0.4, 0.0}, {0.5, 0.0}}, {{0.6, 0.0}}, {0.5, 0.0}, q05),
                  NonConvergent);
}

TEST_CASE("real inputs give real outputs within err_bound") {
  for (const QBase& b : {q03, q05, q08}) {
    CHECK(qpoch_inf({-0.7, 0.0}, b).value.imag() == 0.0);
    const QSeriesValue v = phi({{0.4, 0.0}}, {{0.3, 0.0}}, {0.8, 0.0}, b);
    CHECK(std::abs(v.value.imag()) <= v.err_bound + 1e-16);
  }
}

TEST_CASE("Euler sum: sum z^n q^{n(n-1)/2}/(q;q)_n = (-z;q)_inf for |z| <= 2") {
  const Complex zs[] = {{2.0, 0.0}, {-1.5, 0.0}, {0.9, 0.5}, {-0.4, -1.1}, {1.0, 1.0}};
  for (const QBase& b : {q03, q05, q08}) {
    for (Complex z : zs) {
      // 0phi0(;;q,-z) carries the (-1)^n q^{n(n-1)/2} correction itself.
      const Complex lhs = phi({}, {}, -z, b).value;
      const Complex rhs = oracle::brute_qpoch_inf(-z, b.q());
      // Residual on a max(1,.) scale: near-zero targets are judged absolutely.
      const double res = std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
      CHECK(res < 1e-10);
    }
  }
}

TEST_CASE("q-binomial theorem: 1phi0(a;;q,z) = (az;q)_inf/(z;q)_inf for |z| <= 0.9") {
  const Complex as[] = {{0.5, 0.0}, {-1.2, 0.0}, {0.3, 0.8}};
  const Complex zs[] = {{0.9, 0.0}, {-0.8, 0.0}, {0.5, 0.6}};
  for (const QBase& b : {q03, q05, q08}) {
    for (Complex a : as) {
      for (Complex z : zs) {
        const QSeriesValue v = phi({a}, {}, z, b);
        const Complex rhs = oracle::brute_qpoch_inf(a * z, b.q()) /
                            oracle::brute_qpoch_inf(z, b.q());
        const double res =
            std::abs(v.value - rhs) / std::max({std::abs(v.value), std::abs(rhs), 1.0});
        CHECK(res < 1e-10);
        // err_bound honesty for the cancellation-heavy combos too.
        CHECK(std::abs(v.value - rhs) <= 10.0 * v.err_bound + 1e-14);
      }
    }
  }
}

TEST_CASE("qpoch shift identity check") {
  // k = 0 degenerate: both sides (a;q)_3.
  CheckResult r0 = qpoch_shift_identity_check({0.4, 0.0}, q05, 3, 0);
  CHECK(r0.pass);
  CHECK(r0.abs_err == 0.0);

  CheckResult r1 = qpoch_shift_identity_check({0.4, 0.0}, q05, 3, 3);
  CHECK(r1.pass);
  CHECK(std::abs(r1.lhs - Complex{1.0, 0.0}) == 0.0);
  CHECK(r1.rel_err < 1e-12);

  CheckResult r2 = qpoch_shift_identity_check({0.4, 0.0}, q05, 5, 2);
  CHECK(r2.pass);
  CHECK(r2.rel_err < 1e-12);

  for (const QBase& b : {q03, q08}) {
    for (long n : {1L, 4L, 9L}) {
      for (long k = 0; k <= n; ++k) {
        CHECK(qpoch_shift_identity_check({-0.7, 0.3}, b, n, k).pass);
      }
    }
  }
}

TEST_CASE("terminating detection is exact at q-power parameters") {
  // A numerator parameter exactly 1 (= q^0) kills everything past n = 0.
  const QSeriesValue v = phi({{1.0, 0.0}, {0.3, 0.0}}, {{0.7, 0.0}}, {0.5, 0.0}, q05);
  CHECK(v.value == Complex{1.0, 0.0});
  CHECK(v.terms_used == 1);
}
