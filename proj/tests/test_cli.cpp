#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

// End-to-end checks of the command-line tool: exit-code contract, report
// schema stability, and byte-identical reruns.

namespace {

struct RunOut {
  int status;
  std::string out;
};

RunOut run(const std::string& args) {
  const std::string out_path = "/tmp/qortho_cli_out.txt";
  const std::string cmd = std::string(QORTHO_CLI_PATH) + " " + args + " > " + out_path +
                          " 2>&1";
  const int rc = std::system(cmd.c_str());
  std::ifstream f(out_path);
  std::stringstream ss;
  ss << f.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

std::string strip_runtime(std::string s) {
  return std::regex_replace(s, std::regex(R"("runtime_ms": [^,\n}]*)"), "\"runtime_ms\": X");
}

}  // namespace

TEST_CASE("suite exit codes") {
  CHECK(run("suite --check INT_2_2 --q 0.5").status == 0);
  CHECK(run("suite --q 1.5").status == 2);               // invalid base
  CHECK(run("suite --check NOT_A_CHECK").status == 2);   // unknown id
  CHECK(run("suite --tol-rel -1").status == 2);          // invalid tolerance
  CHECK(run("nonsense-subcommand").status == 2);
  // An absurdly tight tolerance turns passing checks into failures: exit 1.
  CHECK(run("suite --check ID_2_3 --q 0.5 --tol-rel 1e-30").status == 1);
}

TEST_CASE("json report carries exactly the documented fields") {
  auto r = run("suite --check POCH_2_12 --q 0.5 --format json");
  CHECK(r.status == 0);
  for (const char* field :
       {"check_id", "equation_ref", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
        "abs_err", "rel_err", "tolerance", "pass", "runtime_ms"}) {
    CHECK(r.out.find(std::string("\"") + field + "\"") != std::string::npos);
  }
  CHECK(r.out.find("\"equation_ref\": \"(2.12)\"") != std::string::npos);
}

TEST_CASE("identical configs produce byte-identical json apart from runtime_ms") {
  auto a = run("suite --check ID_2_3 --q 0.5 --format json --jobs 2");
  auto b = run("suite --check ID_2_3 --q 0.5 --format json --jobs 2");
  CHECK(a.status == 0);
  CHECK(strip_runtime(a.out) == strip_runtime(b.out));
}

TEST_CASE("csv is a flat projection with a stable header") {
  auto r = run("suite --check INT_2_2 --q 0.5 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("check_id,equation_ref,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,"
                    "rel_err,tolerance,pass,runtime_ms",
                    0) == 0);
}

TEST_CASE("eval prints both routes and their residual") {
  auto r = run("eval --family continuous-q-hermite --n 2 --q 0.5 --x 1.0");
  CHECK(r.status == 0);
  CHECK(r.out.find("explicit    3.5") != std::string::npos);
  CHECK(r.out.find("recurrence  3.5") != std::string::npos);
  CHECK(r.out.find("residual    0") != std::string::npos);

  auto rat = run("eval --family ismail-masson --n 1 --q 0.5 --t1 0.3 --t2 0.2 --xi 0.4");
  CHECK(rat.status == 0);
  CHECK(rat.out.find("rational family") != std::string::npos);

  CHECK(run("eval --family continuous-q-hermite --n 2 --q 0.5").status == 2);  // no point
  CHECK(run("eval --family no-such-family --n 1 --q 0.5 --x 0.0").status == 2);
}

TEST_CASE("measure tables") {
  auto r = run("measure --id carlitz --a -1 --q 0.5 --rows 8 --csv");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("location,mass_or_density,cumulative", 0) == 0);
  const auto pos = r.out.find("total mass ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::atof(r.out.c_str() + pos + 11) == doctest::Approx(1.0).epsilon(1e-10));

  auto r2 = run("measure --id qinv-hermite --q 0.5 --mt 0.8 --rows 9");
  CHECK(r2.status == 0);
  CHECK(r2.out.find("0.4875") != std::string::npos);  // x_0 at t=0.8

  CHECK(run("measure --id v-nu --a 1.0 --q 0.5").status == 2);  // excluded case
}
