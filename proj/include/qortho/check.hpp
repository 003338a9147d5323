#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace qortho {

using Complex = std::complex<double>;

// Named parameter list attached to a check record. Order is preserved so
// report output is deterministic.
using ParamList = std::vector<std::pair<std::string, double>>;

// One verification record: both sides of an identity plus residuals.
struct CheckResult {
  std::string check_id;
  std::string equation_ref;
  ParamList params;
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
};

// Fills residuals and the pass flag. pass <=> abs_err <= tol or rel_err <= tol.
// zero_scale, when positive, is the magnitude rel_err is measured against for
// zero-target checks (a raw zero has no relative error of its own).
inline CheckResult finish_check(std::string id, std::string eq, ParamList params,
                                Complex lhs, Complex rhs, double tol,
                                double zero_scale = 0.0) {
  CheckResult r;
  r.check_id = std::move(id);
  r.equation_ref = std::move(eq);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tol;
  r.abs_err = std::abs(lhs - rhs);
  double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (zero_scale > 0.0) scale = std::max(scale, zero_scale);
  r.rel_err = scale > 0.0 ? r.abs_err / scale : 0.0;
  r.pass = (r.abs_err <= tol) || (r.rel_err <= tol);
  return r;
}

}  // namespace qortho
