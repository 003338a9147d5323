#pragma once

#include <string>
#include <vector>

#include "qortho/check.hpp"
#include "qortho/integrate.hpp"

// The verification catalog: every checkable identity as a named, parameterized
// check producing a CheckResult; Gram-matrix (bi)orthogonality audits; q-beta
// integral confirmations; generating-function and radius checks.

namespace qortho::verify {

using families::FamilyId;
using families::FamilySpec;
using measures::Measure;
using qcore::QBase;

struct CheckInfo {
  std::string id;
  int section;
  std::string equation_ref;
  std::string kind;  // integral | identity | gram | bigram | genfun | rep | radius
                     // | mass | nonneg | theorem | poch
};

// The fixed catalog; unknown ids are rejected everywhere below.
const std::vector<CheckInfo>& catalog();
const CheckInfo& info(const std::string& id);

struct EngineConfig {
  double tol_rel = 1e-8;          // default check tolerance (relative)
  double tol_zero = 1e-9;         // absolute, for zero targets, against the n=0 scale
  double tol_terminating = 1e-11; // terminating identities at n <= 10
  double tol_gram = 1e-8;
  integrate::QuadOptions quad;
  long gram_size = 8;
  long bigram_size = 6;
  long genfun_terms = 60;
  int rep_draws = 20;
  long radius_cap = 64;
  unsigned seed = 987654321u;     // randomized-draw seed (grids stay fixed)
};

// Versioned parameter manifest: the fixed grid for one check id, optionally
// restricted to a q list. Every entry carries its "q" value.
extern const char* kGridVersion;
std::vector<ParamList> default_grid(const std::string& id,
                                    const std::vector<double>& q_list = {});

struct GramReport {
  std::string check_id;
  std::string equation_ref;
  ParamList params;
  long size = 0;
  std::vector<std::vector<Complex>> matrix;
  std::vector<Complex> predicted;
  double max_offdiag_over_diag = 0.0;
  double max_diag_rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;

  // Projection onto the flat report schema: lhs/rhs are the worst diagonal
  // pair, abs_err the off-diagonal ratio, rel_err the diagonal residual.
  CheckResult to_check_result() const;
};

// Operation-level API ------------------------------------------------------
CheckResult check_integral(const std::string& id, const ParamList& params,
                           const EngineConfig& cfg = {});
CheckResult check_identity(const std::string& id, const ParamList& params,
                           const EngineConfig& cfg = {});
GramReport gram(const FamilySpec& a, const FamilySpec& b, const Measure& mu, long n,
                bool conjugate_b, const EngineConfig& cfg = {});
CheckResult check_genfun(const FamilySpec& spec, Complex t, const families::EvalPoint& pt,
                         long n_terms, const EngineConfig& cfg = {});
// Ratio-test estimate of the radius of sum sqrt(zeta_n)/c_n z^n; +infinity
// when the term ratios keep growing through the degree cap.
double estimate_radius(const FamilySpec& spec, long cap = 64);
// Direct confirmation that u_n integrates to zero against nu_mu for
// 1 <= n <= N (not via the Gram shortcut).
CheckResult theorem52_check(Complex t1, Complex t2, const QBase& base, const Measure& mu,
                            long n_max, const EngineConfig& cfg = {});

// Catalog-level API ---------------------------------------------------------
// Runs one check id at one grid point.
CheckResult run_check(const std::string& id, const ParamList& params,
                      const EngineConfig& cfg = {});

// All grid points of the selected ids (all ids when `ids` empty, section
// filter when section > 0), optionally restricted to a q list; executed on
// `jobs` threads with deterministic ordering.
std::vector<CheckResult> run_suite(const std::vector<std::string>& ids, int section,
                                   const std::vector<double>& q_list,
                                   const EngineConfig& cfg = {}, int jobs = 1);

}  // namespace qortho::verify
