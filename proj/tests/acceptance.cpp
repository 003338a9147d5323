// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here, not configurable.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qortho/verify.hpp"

using namespace qortho;
using verify::CheckInfo;
using verify::EngineConfig;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Tally {
  std::size_t total = 0;
  std::size_t passed = 0;
  double worst_rel = 0.0;
  double worst_abs = 0.0;

  void add(const CheckResult& r) {
    ++total;
    passed += r.pass;
    worst_rel = std::max(worst_rel, r.rel_err);
    worst_abs = std::max(worst_abs, r.abs_err);
  }
  bool ok() const { return total > 0 && passed == total; }
};

Tally run_ids(const std::vector<std::string>& ids, const EngineConfig& cfg) {
  Tally t;
  for (const CheckResult& r : verify::run_suite(ids, 0, {}, cfg, 1)) t.add(r);
  return t;
}

int report(int idx, const char* what, bool ok, const std::string& detail) {
  std::printf("criterion %d %s  %s (%s)\n", idx, ok ? "PASS" : "FAIL", what, detail.c_str());
  std::fflush(stdout);
  return ok ? 0 : 1;
}

std::string fmt(const Tally& t, double secs) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%zu/%zu points, worst rel %.2e, %.1f s", t.passed,
                t.total, t.worst_rel, secs);
  return buf;
}

}  // namespace

int main() {
  EngineConfig cfg;  // pinned defaults: tol 1e-8 rel, 1e-9 zero targets, 8x8/6x6
  int failures = 0;
  const auto t_all = std::chrono::steady_clock::now();

  {  // 1. orthogonality gram suites, 8x8, q in {0.3, 0.5, 0.8}
    const auto t0 = std::chrono::steady_clock::now();
    Tally t = run_ids({"GRAM_2_1", "GRAM_2_9", "GRAM_2_18", "GRAM_3_2", "GRAM_3_11",
                       "GRAM_3_18_M", "GRAM_3_18_S", "GRAM_1_17", "GRAM_5_3", "GRAM_5_14"},
                      cfg);
    const double secs = seconds_since(t0);
    const bool ok = t.ok() && secs < 60.0;
    failures += report(1, "orthogonality gram matrices (8x8)", ok, fmt(t, secs));
  }

  {  // 2. biorthogonality suites, 6x6
    const auto t0 = std::chrono::steady_clock::now();
    Tally t = run_ids({"BIGRAM_3_24", "BIGRAM_4_8", "BIGRAM_5_22", "BIGRAM_5_25"}, cfg);
    failures += report(2, "biorthogonality matrices (6x6)", t.ok(), fmt(t, seconds_since(t0)));
  }

  {  // 3. q-beta integral checks at >= 10 grid points each, plus the
     //    parameter-permutation invariance of the four-parameter integral
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::string> ids{"INT_2_2",  "INT_2_16", "INT_2_22",
                                       "INT_3_6",  "INT_3_21", "INT_4_2",
                                       "INT_5_5",  "INT_5_10", "INT_5_24"};
    bool ok = true;
    Tally t;
    for (const std::string& id : ids) {
      const auto grid = verify::default_grid(id);
      if (grid.size() < 10) ok = false;
      for (const auto& p : grid) t.add(verify::run_check(id, p, cfg));
    }
    ok = ok && t.ok();

    double perm_worst = 0.0;
    for (double q : {0.3, 0.5, 0.8}) {
      const std::array<double, 4> base{0.3, -0.2, 0.25, 0.1};
      std::array<int, 4> idx{0, 1, 2, 3};
      Complex ref{0.0, 0.0};
      bool first = true;
      do {
        ParamList p{{"q", q},
                    {"t1", base[idx[0]]},
                    {"t2", base[idx[1]]},
                    {"t3", base[idx[2]]},
                    {"t4", base[idx[3]]}};
        const Complex lhs = verify::check_integral("INT_2_16", p, cfg).lhs;
        if (first) {
          ref = lhs;
          first = false;
        } else {
          perm_worst = std::max(perm_worst, std::abs(lhs - ref) / std::abs(ref));
        }
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
    ok = ok && perm_worst < 1e-10;
    char extra[220];
    std::snprintf(extra, sizeof(extra), "%s; permutation residual %.2e",
                  fmt(t, seconds_since(t0)).c_str(), perm_worst);
    failures += report(3, "q-beta integral identities", ok, extra);
  }

  {  // 4. scalar identity checks at >= 20 points; terminating ones (n <= 10)
     //    at 1e-11
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::string> ids{"ID_2_3", "ID_2_7",  "ID_2_11", "ID_2_14",
                                       "ID_2_20", "ID_3_5", "ID_3_7",  "ID_3_14",
                                       "ID_3_20", "ID_5_9"};
    bool ok = true;
    Tally t;
    double term_worst = 0.0;
    for (const std::string& id : ids) {
      const auto grid = verify::default_grid(id);
      if (grid.size() < 20) ok = false;
      for (const auto& p : grid) {
        const CheckResult r = verify::run_check(id, p, cfg);
        t.add(r);
        if (id == "ID_2_7" || id == "ID_2_20") {
          double n = 0;
          for (const auto& [k, v] : p)
            if (k == "n") n = v;
          if (n <= 10.5) {
            term_worst = std::max(term_worst, r.rel_err);
            if (r.rel_err > 1e-11) ok = false;
          }
        }
      }
    }
    ok = ok && t.ok();
    char extra[220];
    std::snprintf(extra, sizeof(extra), "%s; terminating worst %.2e",
                  fmt(t, seconds_since(t0)).c_str(), term_worst);
    failures += report(4, "series identities", ok, extra);
  }

  {  // 5. representation cross-validation: 20 draws per polynomial family,
     //    degrees up to 12, relative 1e-9
    const auto t0 = std::chrono::steady_clock::now();
    Tally t = run_ids({"REP_CQH", "REP_DQH", "REP_QINVH", "REP_ASCU", "REP_ASCV",
                       "REP_ASC", "REP_AW", "REP_BIGQJ", "REP_SZEGO", "REP_PASTRO",
                       "REP_UQINV"},
                      cfg);
    failures +=
        report(5, "recurrence vs explicit representations", t.ok(), fmt(t, seconds_since(t0)));
  }

  {  // 6. measure sanity: unit masses within 1e-9 and nonnegativity sampling
    const auto t0 = std::chrono::steady_clock::now();
    Tally t = run_ids({"MASS_3_3", "MASS_3_15", "MASS_3_16", "MASS_5_NEXT", "MASS_5_7",
                       "NONNEG_2_1", "NONNEG_2_4", "NONNEG_2_19", "NONNEG_3_3",
                       "NONNEG_3_17", "NONNEG_1_17", "NONNEG_5_NEXT", "NONNEG_5_7"},
                      cfg);
    failures += report(6, "measure masses and positivity", t.ok(), fmt(t, seconds_since(t0)));
  }

  {  // 7. radius-of-convergence estimates at degree cap 64, within 7%,
     //    divergent cases flagged infinite
    const auto t0 = std::chrono::steady_clock::now();
    Tally t = run_ids({"RAD_SZEGO", "RAD_V", "RAD_U", "RAD_QINVH"}, cfg);
    failures += report(7, "radius estimates", t.ok(), fmt(t, seconds_since(t0)));
  }

  {  // 8. all ten generating functions at 60 terms inside their discs
    const auto t0 = std::chrono::steady_clock::now();
    Tally t = run_ids({"GF_1_8", "GF_1_9", "GF_2_15", "GF_2_21", "GF_3_1", "GF_3_19",
                       "GF_4_1", "GF_4_9", "GF_5_4", "GF_5_15"},
                      cfg);
    failures += report(8, "generating functions", t.ok(), fmt(t, seconds_since(t0)));
  }

  std::printf("acceptance: %s (%.1f s total)\n", failures == 0 ? "ALL PASS" : "FAILURES",
              seconds_since(t_all));
  return failures == 0 ? 0 : 1;
}
