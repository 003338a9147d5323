#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <set>

#include "qortho/verify.hpp"

using namespace qortho;
using namespace qortho::verify;
using families::EvalPoint;
using families::FamilyId;
using families::FamilyParams;
using families::FamilySpec;
using qcore::QBase;
using doctest::Approx;

namespace {
const QBase q05{0.5};

ParamList with_q(double q, ParamList rest) {
  ParamList p{{"q", q}};
  for (auto& kv : rest) p.push_back(kv);
  return p;
}
}  // namespace

TEST_CASE("catalog integrity") {
  std::set<std::string> seen;
  for (const CheckInfo& ci : catalog()) {
    CHECK(seen.insert(ci.id).second);  // unique ids
    CHECK(ci.section >= 1);
    CHECK(ci.section <= 5);
    CHECK(!ci.equation_ref.empty());
    CHECK(!default_grid(ci.id).empty());
  }
  CHECK_THROWS_AS(info("NOT_A_CHECK"), UnknownCheckId);
  CHECK_THROWS_AS(default_grid("NOT_A_CHECK"), UnknownCheckId);
  CHECK(std::string(kGridVersion) == "grids-v1");
}

TEST_CASE("grid sizes meet the per-check point counts") {
  // Integral checks: at least 10 grid points; identity checks: at least 20.
  for (const CheckInfo& ci : catalog()) {
    const std::size_t n = default_grid(ci.id).size();
    if (ci.kind == "integral") CHECK(n >= 10);
    if (ci.kind == "identity") CHECK(n >= 20);
  }
}

TEST_CASE("single checks from the printed examples") {
  // Two-parameter integral at t1 = t2 = 0: both sides 2 pi/(q;q)_inf.
  auto r = check_integral("INT_2_2", with_q(0.5, {{"t1", 0.0}, {"t2", 0.0}}));
  CHECK(r.pass);
  CHECK(r.rel_err < 1e-10);

  auto r2 = check_integral("INT_2_16",
                           with_q(0.5, {{"t1", 0.3}, {"t2", -0.2}, {"t3", 0.25}, {"t4", 0.1}}));
  CHECK(r2.pass);
  CHECK(r2.rel_err < 1e-9);

  auto r3 = check_integral(
      "INT_5_5", with_q(0.5, {{"mt", 0.8}, {"t1", 0.4}, {"t2", -0.3}}));
  CHECK(r3.pass);
  CHECK(r3.rel_err < 1e-9);

  auto r4 = check_identity("ID_2_7", with_q(0.5, {{"n", 1}, {"a", 0.3}, {"c", 0.7}}));
  CHECK(r4.pass);
  CHECK(r4.lhs.real() == Approx((0.3 - 0.7) / (1 - 0.7)).epsilon(1e-12));

  auto r5 = check_identity("ID_2_20", with_q(0.5, {{"n", 0},
                                                   {"a", 0.3},
                                                   {"b", 0.5},
                                                   {"c", 0.4},
                                                   {"d", 0.6},
                                                   {"e", 0.7}}));
  CHECK(r5.pass);
  CHECK(r5.lhs == Complex{1.0, 0.0});  // empty sums on both sides

  auto r6 = check_identity(
      "ID_5_9", with_q(0.5, {{"xi", 0.0}, {"eta", 0.0}, {"z_re", 0.5}}));
  CHECK(r6.pass);
  CHECK(r6.rel_err < 1e-9);
}

TEST_CASE("reduction chain: the four-parameter integral collapses to the two-parameter one") {
  const double q = 0.5, t1 = 0.45, t2 = -0.35;
  auto full = check_integral("INT_2_16",
                             with_q(q, {{"t1", t1}, {"t2", t2}, {"t3", 0.0}, {"t4", 0.0}}));
  auto two = check_integral("INT_2_2", with_q(q, {{"t1", t1}, {"t2", t2}}));
  CHECK(full.pass);
  CHECK(two.pass);
  CHECK(std::abs(full.lhs - two.lhs) < 1e-9 * std::abs(two.lhs));
  CHECK(std::abs(full.rhs - two.rhs) < 1e-12 * std::abs(two.rhs));
}

TEST_CASE("four-parameter integral invariant under parameter permutations") {
  const double q = 0.5;
  const std::array<double, 4> t{0.3, -0.2, 0.25, 0.1};
  std::array<int, 4> idx{0, 1, 2, 3};
  Complex ref{0.0, 0.0};
  bool first = true;
  do {
    ParamList p = with_q(q, {{"t1", t[idx[0]]}, {"t2", t[idx[1]]}, {"t3", t[idx[2]]},
                             {"t4", t[idx[3]]}});
    const Complex lhs = check_integral("INT_2_16", p).lhs;
    if (first) {
      ref = lhs;
      first = false;
    } else {
      CHECK(std::abs(lhs - ref) <= 1e-10 * std::abs(ref));
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("sears reduction at b = d degenerates both sides to the same 3phi2") {
  // With b = d the right 4phi3 loses its (d/b) parameter pair; both sides
  // must equal the shared degeneration.
  const double q = 0.5;
  for (long n : {2L, 5L}) {
    ParamList p = with_q(
        q, {{"n", static_cast<double>(n)}, {"a", 0.3}, {"b", 0.6}, {"c", 0.4}, {"d", 0.6},
            {"e", 0.7}});
    auto r = check_identity("ID_2_20", p);
    CHECK(r.pass);
    // Independent evaluation of the degenerate 3phi2 side.
    QBase b{q};
    const std::vector<qcore::QPowTerm> num{
        {dd::from(1.0), -n}, {dd::from(0.3), 0}, {dd::from(0.4), 0}};
    const double fc = 0.3 * 0.6 * 0.4 / (0.6 * 0.7);
    const std::vector<qcore::QPowTerm> den{{dd::from(0.7), 0}, {dd::from(fc), 1 - n}};
    const double deg = qcore::phi_terminating_structured(num, den, b, n);
    CHECK(r.lhs.real() == Approx(deg).epsilon(1e-11));
  }
}

TEST_CASE("gram reports") {
  EngineConfig cfg;
  cfg.gram_size = 5;
  auto rep = run_check("GRAM_2_1", with_q(0.5, {}), cfg);
  CHECK(rep.pass);
  CHECK(rep.abs_err < 1e-9);  // off-diagonal over diagonal
  CHECK(rep.rel_err < 1e-9);  // diagonal residual

  // Gram symmetry for an orthogonal family.
  FamilySpec s{FamilyId::ContinuousQHermite, q05, {}};
  auto g = gram(s, s, measures::hermite_trig_weight(q05), 5, false, cfg);
  for (long m = 0; m < 5; ++m)
    for (long n = 0; n < m; ++n)
      CHECK(std::abs(g.matrix[m][n] - g.matrix[n][m]) <
            1e-11 * std::max(1.0, std::abs(g.matrix[m][m])));
}

TEST_CASE("theorem 5.2 direct zero-integral check") {
  QBase b{0.5};
  auto mu = measures::qinv_hermite_measure(0.8, b);
  auto r = theorem52_check({0.3, 0.2}, {0.3, -0.2}, b, mu, 6);
  CHECK(r.pass);
  CHECK(std::abs(r.lhs) < 1e-9);
  // t1 = t2 = 0 reduces to plain q^{-1}-hermite orthogonality.
  auto r0 = theorem52_check({0.0, 0.0}, {0.0, 0.0}, b, mu, 6);
  CHECK(r0.pass);
}

TEST_CASE("radius estimates") {
  FamilyParams pv;
  pv.a = 2.0;
  CHECK(estimate_radius({FamilyId::ASCarlitzV, q05, pv}) ==
        Approx(std::sqrt(0.25)).epsilon(0.07));
  CHECK(estimate_radius({FamilyId::SzegoCircle, q05, {}}) ==
        Approx(std::sqrt(0.5)).epsilon(0.07));
  FamilyParams pu;
  pu.a = -1.0;
  CHECK(std::isinf(estimate_radius({FamilyId::ASCarlitzU, q05, pu})));
  CHECK(std::isinf(estimate_radius({FamilyId::QInvHermite, q05, {}})));
  // Moderate finite radius through the u-family generating function.
  FamilyParams puq;
  puq.t1 = Complex{0.4, 0.0};
  puq.t2 = Complex{0.3, 0.0};
  const double rho = estimate_radius({FamilyId::ASChiharaQinv, q05, puq});
  CHECK(rho == Approx(std::pow(0.5, 1.5) / std::sqrt(0.12)).epsilon(0.07));
}

TEST_CASE("four-parameter biorthogonality norm: measured against the pair-product form") {
  // The computed diagonal times (-t1 t2/q;q)_inf reproduces the fully
  // pair-multiplied normalization (the one with all six (-tj tk/q;q)_inf
  // factors); equivalently, our reference norm excludes the (1,2) pair.
  EngineConfig cfg;
  cfg.bigram_size = 3;
  const double q = 0.5, mt = 0.75, q34 = std::pow(q, 0.75);
  const double t1 = 0.6 * q34, t2 = 0.5 * q34, t3 = 0.4 * q34, t4 = 0.3 * q34;
  FamilyParams plain, swapped;
  plain.t1 = Complex{t1, 0.0};
  plain.t2 = Complex{t2, 0.0};
  plain.t3 = Complex{t3, 0.0};
  plain.t4 = Complex{t4, 0.0};
  swapped = plain;
  std::swap(swapped.t1, swapped.t2);
  QBase b{q};
  FamilySpec rows{FamilyId::IsmailMassonRational, b, plain};
  FamilySpec cols{FamilyId::IsmailMassonRational, b, swapped};
  auto mu = measures::qinv_hermite_measure(mt, b);
  auto attached = mu.attach_discrete(
      [b, t1, t2, t3, t4](const measures::Atom& at) {
        Complex v{1.0, 0.0};
        for (double t : {t1, t2, t3, t4}) v *= families::chi({t, 0.0}, at.exp_xi, b);
        return v;
      },
      std::numeric_limits<double>::quiet_NaN(), false);
  auto g = gram(rows, cols, attached, 3, false, cfg);

  const Complex extra = qcore::poch_inf(Complex{-t1 * t2 / q, 0.0}, b);
  const double P = t1 * t2 * t3 * t4 / (q * q * q);
  for (long n = 0; n < 3; ++n) {
    Complex pairs{1.0, 0.0};
    const double ts[4] = {t1, t2, t3, t4};
    for (int j = 0; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        pairs *= qcore::poch_inf(Complex{-ts[j] * ts[k] / q, 0.0}, b);
    const Complex pref =
        (1.0 + t1 * t2 * std::pow(q, static_cast<double>(n - 2))) /
        (1.0 + t1 * t2 * std::pow(q, static_cast<double>(2 * n - 2)));
    const Complex all_pairs_form =
        pref * std::pow(Complex{P, 0.0}, static_cast<double>(n)) *
        qcore::poch(Complex{q, 0.0}, b, n) *
        qcore::poch(Complex{-q * q / (t3 * t4), 0.0}, b, n) /
        qcore::poch(Complex{P, 0.0}, b, n) *
        qcore::poch_inf(Complex{-t1 * t2 * std::pow(q, static_cast<double>(n - 1)), 0.0}, b) *
        pairs / qcore::poch_inf(Complex{P, 0.0}, b);
    const Complex measured_scaled = g.matrix[n][n] * extra;
    CHECK(std::abs(measured_scaled - all_pairs_form) <
          1e-10 * std::abs(all_pairs_form));
  }
}

TEST_CASE("tolerance monotonicity: tightening the engine never flips pass to fail") {
  EngineConfig loose;
  EngineConfig tight;
  tight.quad.eps_quad = loose.quad.eps_quad / 10.0;
  tight.quad.eps_tail = loose.quad.eps_tail / 10.0;
  for (const std::string id : {"INT_2_2", "INT_3_6", "ID_2_3", "ID_3_20"}) {
    const auto grid = default_grid(id, {0.5});
    for (const ParamList& p : grid) {
      const bool a = run_check(id, p, loose).pass;
      const bool b = run_check(id, p, tight).pass;
      CHECK(a);
      CHECK(b);
    }
  }
}

TEST_CASE("run_suite filters and determinism") {
  EngineConfig cfg;
  auto only_q5 = run_suite({"ID_2_3"}, 0, {0.5}, cfg, 1);
  CHECK(only_q5.size() == default_grid("ID_2_3", {0.5}).size());
  for (const auto& r : only_q5) CHECK(r.pass);

  auto sec4 = run_suite({}, 4, {0.5}, cfg, 2);
  CHECK(!sec4.empty());
  for (const auto& r : sec4) CHECK(info(r.check_id).section == 4);

  // Two runs produce identical values (determinism apart from runtimes).
  auto again = run_suite({"ID_2_3"}, 0, {0.5}, cfg, 2);
  REQUIRE(again.size() == only_q5.size());
  for (std::size_t i = 0; i < again.size(); ++i) {
    CHECK(again[i].lhs == only_q5[i].lhs);
    CHECK(again[i].rhs == only_q5[i].rhs);
    CHECK(again[i].check_id == only_q5[i].check_id);
  }
}
