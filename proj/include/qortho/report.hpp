#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qortho/check.hpp"

// Report emission: JSON is the canonical format, CSV a flat projection, and
// the human format prints the equation anchor beside each check.

namespace qortho::report {

// Schema: check_id, equation_ref, params, lhs_re, lhs_im, rhs_re, rhs_im,
// abs_err, rel_err, tolerance, pass, runtime_ms.
std::string to_json(const std::vector<CheckResult>& results);
std::string to_csv(const std::vector<CheckResult>& results);
void print_human(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace qortho::report
