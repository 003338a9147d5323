#include "qortho/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace qortho::report {

using json = nlohmann::ordered_json;

std::string to_json(const std::vector<CheckResult>& results) {
  json arr = json::array();
  for (const CheckResult& r : results) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    arr.push_back(json{{"check_id", r.check_id},
                       {"equation_ref", r.equation_ref},
                       {"params", params},
                       {"lhs_re", r.lhs.real()},
                       {"lhs_im", r.lhs.imag()},
                       {"rhs_re", r.rhs.real()},
                       {"rhs_im", r.rhs.imag()},
                       {"abs_err", r.abs_err},
                       {"rel_err", r.rel_err},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass},
                       {"runtime_ms", r.runtime_ms}});
  }
  return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "check_id,equation_ref,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,"
        "tolerance,pass,runtime_ms\n";
  for (const CheckResult& r : results) {
    os << r.check_id << ",\"" << r.equation_ref << "\",\"";
    for (std::size_t i = 0; i < r.params.size(); ++i) {
      if (i) os << ";";
      os << r.params[i].first << "=" << r.params[i].second;
    }
    os << "\"," << r.lhs.real() << "," << r.lhs.imag() << "," << r.rhs.real() << ","
       << r.rhs.imag() << "," << r.abs_err << "," << r.rel_err << "," << r.tolerance << ","
       << (r.pass ? "true" : "false") << "," << r.runtime_ms << "\n";
  }
  return os.str();
}

void print_human(std::ostream& os, const std::vector<CheckResult>& results) {
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(14) << r.check_id
       << " " << std::setw(18) << r.equation_ref << " ";
    std::ostringstream ps;
    ps << std::setprecision(4);
    for (std::size_t i = 0; i < r.params.size(); ++i) {
      if (i) ps << " ";
      ps << r.params[i].first << "=" << r.params[i].second;
    }
    os << std::setw(44) << ps.str() << std::scientific << std::setprecision(2)
       << " abs=" << r.abs_err << " rel=" << r.rel_err << " tol=" << r.tolerance << "\n"
       << std::defaultfloat;
    if (r.pass) ++passed;
  }
  os << passed << "/" << results.size() << " checks passed\n";
}

}  // namespace qortho::report
