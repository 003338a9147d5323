// Command-line front end: run verification suites or single checks, evaluate
// family members both ways, and dump measure tables. Exit codes: 0 all
// passed, 1 check failures, 2 usage or domain errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qortho/report.hpp"
#include "qortho/verify.hpp"

namespace {

using namespace qortho;

double env_or(const char* name, double def) {
  const char* v = std::getenv(name);
  return v ? std::atof(v) : def;
}

verify::EngineConfig config_from_env() {
  verify::EngineConfig cfg;
  cfg.tol_rel = env_or("QORTHO_TOL_REL", cfg.tol_rel);
  cfg.tol_zero = env_or("QORTHO_TOL_ZERO", cfg.tol_zero);
  cfg.quad.eps_quad = env_or("QORTHO_EPS_QUAD", cfg.quad.eps_quad);
  cfg.quad.eps_tail = env_or("QORTHO_EPS_TAIL", cfg.quad.eps_tail);
  return cfg;
}

struct SuiteOptions {
  int section = 0;
  std::vector<std::string> checks;
  std::vector<double> qs;
  std::string format = "human";
  std::string out;
  int jobs = 1;
  double tol_rel = 0.0;
  double tol_zero = 0.0;
  unsigned seed = 0;
};

int run_suite_cmd(const SuiteOptions& so) {
  verify::EngineConfig cfg = config_from_env();
  if (so.tol_rel != 0.0) cfg.tol_rel = so.tol_rel;
  if (so.tol_zero != 0.0) cfg.tol_zero = so.tol_zero;
  if (so.seed != 0) cfg.seed = so.seed;
  if (cfg.tol_rel <= 0.0 || cfg.tol_zero <= 0.0)
    throw DomainViolation("tolerances must be positive");
  for (double q : so.qs) qcore::QBase{q};  // validates the range
  for (const std::string& id : so.checks) verify::info(id);

  const auto results = verify::run_suite(so.checks, so.section, so.qs, cfg, so.jobs);

  std::string payload;
  if (so.format == "json") payload = report::to_json(results);
  else if (so.format == "csv") payload = report::to_csv(results);
  else if (so.format != "human") throw DomainViolation("unknown format: " + so.format);

  if (!so.out.empty()) {
    std::ofstream f(so.out, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + so.out);
    if (so.format == "human") {
      report::print_human(f, results);
    } else {
      f << payload;
    }
  } else if (so.format == "human") {
    report::print_human(std::cout, results);
  } else {
    std::cout << payload;
  }
  for (const CheckResult& r : results)
    if (!r.pass) return 1;
  return 0;
}

struct EvalOptions {
  std::string family;
  long n = 0;
  double q = 0.5;
  double t1 = 0.0, t1_im = 0.0, t2 = 0.0, t2_im = 0.0, t3 = 0.0, t4 = 0.0;
  double a = 0.0, gamma = 0.0;
  std::optional<double> theta, x, xi, ztheta;
};

int run_eval_cmd(const EvalOptions& eo) {
  const qcore::QBase base{eo.q};
  families::FamilyParams fp;
  fp.t1 = {eo.t1, eo.t1_im};
  fp.t2 = {eo.t2, eo.t2_im};
  fp.t3 = {eo.t3, 0.0};
  fp.t4 = {eo.t4, 0.0};
  fp.a = eo.a;
  fp.gamma = eo.gamma;
  const families::FamilySpec spec{families::family_from_name(eo.family), base, fp};

  int points = 0;
  families::EvalPoint pt = families::EvalPoint::line(0.0);
  if (eo.theta) pt = families::EvalPoint::trig(*eo.theta), ++points;
  if (eo.x) pt = families::EvalPoint::line(*eo.x), ++points;
  if (eo.xi) pt = families::EvalPoint::hyper_xi(*eo.xi), ++points;
  if (eo.ztheta) pt = families::EvalPoint::circle(*eo.ztheta), ++points;
  if (points != 1)
    throw DomainViolation("give exactly one of --theta, --x, --xi, --ztheta");

  std::cout.precision(15);
  const Complex expl = families::eval_explicit(spec, eo.n, pt);
  std::cout << "explicit    " << expl.real();
  if (expl.imag() != 0.0) std::cout << (expl.imag() > 0 ? " + " : " - ")
                                    << std::abs(expl.imag()) << "i";
  std::cout << "\n";
  if (families::has_recurrence(spec.id)) {
    const Complex rec = families::eval_recurrence(spec, eo.n, pt);
    const Complex map = families::normalization_map(spec, eo.n);
    std::cout << "recurrence  " << rec.real();
    if (rec.imag() != 0.0) std::cout << (rec.imag() > 0 ? " + " : " - ")
                                     << std::abs(rec.imag()) << "i";
    std::cout << "\n";
    const Complex scaled = map * rec;
    const double resid = std::abs(expl - scaled) /
                         std::max({std::abs(expl), std::abs(scaled), 1e-300});
    std::cout << "norm map    " << map.real() << "\n";
    std::cout << "residual    " << resid << "\n";
  } else {
    std::cout << "recurrence  (none: rational family, explicit form only)\n";
  }
  return 0;
}

struct MeasureOptions {
  std::string id;
  double q = 0.5;
  double a = 0.0, t1 = 0.0, t2 = 0.0, t3 = 0.0, t4 = 0.0, gamma = 1.0, mt = 0.0;
  long rows = 24;
  bool csv = false;
};

int run_measure_cmd(const MeasureOptions& mo) {
  const qcore::QBase b{mo.q};
  const double mt = mo.mt > 0.0 ? mo.mt : 0.5 * (1.0 + mo.q);
  std::optional<measures::Measure> m;
  if (mo.id == "carlitz") {
    m = measures::carlitz_measure(mo.a, b);
  } else if (mo.id == "v-m" || mo.id == "v-sigma" || mo.id == "v-nu") {
    auto vm = measures::v_measures(mo.a, b,
                                   mo.id == "v-nu" ? std::optional<double>{mo.gamma}
                                                   : std::nullopt);
    if (mo.id == "v-m") m = vm.m;
    if (mo.id == "v-sigma") m = vm.sigma;
    if (mo.id == "v-nu") m = vm.nu;
    if (!m) throw DomainViolation("that measure is not defined for this a");
  } else if (mo.id == "qinv-hermite") {
    m = measures::qinv_hermite_measure(mt, b);
  } else if (mo.id == "nu") {
    m = measures::nu_measure(measures::qinv_hermite_measure(mt, b), {mo.t1, 0.0},
                             {mo.t2, 0.0}, b);
  } else if (mo.id == "hermite-trig") {
    m = measures::hermite_trig_weight(b);
  } else if (mo.id == "asc") {
    m = measures::asc_weight(mo.t1, mo.t2, b);
  } else if (mo.id == "aw") {
    m = measures::aw_weight({mo.t1, mo.t2, mo.t3, mo.t4}, b);
  } else if (mo.id == "szego" || mo.id == "pastro-omega") {
    auto [szego, omega] = measures::circle_weights(b, mo.t1, mo.t2);
    m = mo.id == "szego" ? szego : omega;
  } else {
    throw DomainViolation("unknown measure id: " + mo.id);
  }

  m->dump(std::cout, mo.rows, mo.csv);
  Complex total;
  switch (m->shape()) {
    case measures::Measure::Shape::DiscreteMasses:
      total = integrate::sum_discrete(integrate::one(), *m).value;
      break;
    case measures::Measure::Shape::IntervalDensity:
      total = integrate::integrate_interval(integrate::one(), *m).value;
      break;
    case measures::Measure::Shape::CircleWeight:
      total = integrate::integrate_circle(integrate::one(), *m).value;
      break;
  }
  std::cout.precision(15);
  std::cout << "total mass " << total.real();
  if (std::abs(total.imag()) > 1e-14) std::cout << " (imag " << total.imag() << ")";
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-orthogonal hierarchy verification tool"};
  app.require_subcommand(1);

  SuiteOptions so;
  CLI::App* suite = app.add_subcommand("suite", "run verification checks");
  suite->add_option("--section", so.section, "restrict to one section (1-5)");
  suite->add_option("--check", so.checks, "run specific check ids");
  suite->add_option("--q", so.qs, "base values (default 0.3 0.5 0.8)");
  suite->add_option("--format", so.format, "json | csv | human");
  suite->add_option("--out", so.out, "output path (default stdout)");
  suite->add_option("--jobs", so.jobs, "worker threads");
  suite->add_option("--tol-rel", so.tol_rel, "relative tolerance override");
  suite->add_option("--tol-zero", so.tol_zero, "zero-target tolerance override");
  suite->add_option("--seed", so.seed, "seed for randomized draws");

  EvalOptions eo;
  CLI::App* ev = app.add_subcommand("eval", "evaluate a family member both ways");
  ev->add_option("--family", eo.family)->required();
  ev->add_option("--n", eo.n)->required();
  ev->add_option("--q", eo.q)->required();
  ev->add_option("--t1", eo.t1);
  ev->add_option("--t1-im", eo.t1_im);
  ev->add_option("--t2", eo.t2);
  ev->add_option("--t2-im", eo.t2_im);
  ev->add_option("--t3", eo.t3);
  ev->add_option("--t4", eo.t4);
  ev->add_option("--a", eo.a);
  ev->add_option("--gamma", eo.gamma);
  double th = 0, xx = 0, xi = 0, zt = 0;
  auto* o1 = ev->add_option("--theta", th, "x = cos theta");
  auto* o2 = ev->add_option("--x", xx, "real line");
  auto* o3 = ev->add_option("--xi", xi, "x = sinh xi");
  auto* o4 = ev->add_option("--ztheta", zt, "z = e^{i theta}");

  MeasureOptions mo;
  CLI::App* me = app.add_subcommand("measure", "dump a measure table");
  me->add_option("--id", mo.id, "carlitz | v-m | v-sigma | v-nu | qinv-hermite | nu | "
                                "hermite-trig | asc | aw | szego | pastro-omega")
      ->required();
  me->add_option("--q", mo.q)->required();
  me->add_option("--a", mo.a);
  me->add_option("--t1", mo.t1);
  me->add_option("--t2", mo.t2);
  me->add_option("--t3", mo.t3);
  me->add_option("--t4", mo.t4);
  me->add_option("--gamma", mo.gamma);
  me->add_option("--mt", mo.mt, "N-extremal measure parameter in (q, 1)");
  me->add_option("--rows", mo.rows);
  me->add_flag("--csv", mo.csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (suite->parsed()) return run_suite_cmd(so);
    if (ev->parsed()) {
      if (o1->count()) eo.theta = th;
      if (o2->count()) eo.x = xx;
      if (o3->count()) eo.xi = xi;
      if (o4->count()) eo.ztheta = zt;
      return run_eval_cmd(eo);
    }
    if (me->parsed()) return run_measure_cmd(mo);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
