#include "qortho/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace qortho::integrate {

using families::EvalPoint;
using families::FamilySpec;

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order) {
  static std::mutex lock;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::scoped_lock g(lock);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  std::vector<double> x(order), w(order);
  const long m = (order + 1) / 2;
  for (long i = 0; i < m; ++i) {
    // Newton from the Chebyshev-angle estimate.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (z * p0 - p1) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p0 / pp;
      if (std::abs(z - z1) < 1e-16) break;
    }
    x[i] = -z;
    x[order - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[order - 1 - i] = w[i];
  }
  return cache.emplace(order, std::make_pair(std::move(x), std::move(w))).first->second;
}

namespace {

Complex gl_panel(const Integrand& f, const Measure& m, double a, double b, int order,
                 long* evals) {
  const auto& [xs, ws] = gauss_legendre(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double u = mid + half * xs[i];
    acc += ws[i] * f(SamplePoint{u, {}, false}) * m.density(u);
  }
  *evals += static_cast<long>(xs.size());
  return acc * half;
}

// Adaptive bisection over [lo, hi] with panel seeds at the measure's
// breakpoints.
QuadResult adaptive_interval(const Integrand& f, const Measure& m, double lo, double hi,
                             const QuadOptions& opts) {
  QuadResult out;
  std::vector<double> edges{lo, hi};
  for (double b : m.breakpoints(lo, hi))
    if (b > lo && b < hi) edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  // Start from a handful of panels between consecutive edges.
  struct Panel {
    double a, b;
    Complex coarse;
  };
  std::vector<Panel> stack;
  Complex coarse_total{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const int slices = edges.size() > 2 ? 2 : 8;
    for (int s = 0; s < slices; ++s) {
      const double a = edges[i] + (edges[i + 1] - edges[i]) * s / slices;
      const double b = edges[i] + (edges[i + 1] - edges[i]) * (s + 1) / slices;
      const Complex I = gl_panel(f, m, a, b, opts.gl_order, &out.evaluations);
      stack.push_back({a, b, I});
      coarse_total += I;
    }
  }
  const double width = hi - lo;
  double scale = std::abs(coarse_total);
  for (const Panel& p : stack) scale = std::max(scale, std::abs(p.coarse));

  Complex total{0.0, 0.0};
  long panels = static_cast<long>(stack.size());
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.a + p.b);
    const Complex left = gl_panel(f, m, p.a, mid, opts.gl_order, &out.evaluations);
    const Complex right = gl_panel(f, m, mid, p.b, opts.gl_order, &out.evaluations);
    const double diff = std::abs(p.coarse - left - right);
    const double budget =
        std::max(opts.eps_quad * scale * (p.b - p.a) / width, 0.5 * opts.eps_quad * scale);
    if (diff <= budget) {
      total += left + right;
      out.err_estimate += diff;
    } else {
      panels += 2;
      if (panels > opts.max_panels)
        throw MaxPanelsExceeded("adaptive quadrature exceeded the panel budget");
      stack.push_back({p.a, mid, left});
      stack.push_back({mid, p.b, right});
    }
  }
  out.value = total;
  return out;
}

}  // namespace

QuadResult integrate_interval(const Integrand& f, const Measure& m, const QuadOptions& opts) {
  if (m.shape() != Measure::Shape::IntervalDensity)
    throw Error("integrate_interval needs an interval density");
  if (!m.real_line()) return adaptive_interval(f, m, m.lo(), m.hi(), opts);

  // Expanding-R strategy: [-R, R] doubled until the added shells change the
  // result by less than rel_change and the shells decay.
  double R = opts.r0;
  QuadResult core = adaptive_interval(f, m, -R, R, opts);
  QuadResult out = core;
  double prev_shell = std::numeric_limits<double>::infinity();
  int grow_streak = 0;
  for (int d = 0; d < opts.max_doublings; ++d) {
    QuadResult right = adaptive_interval(f, m, R, 2.0 * R, opts);
    QuadResult left = adaptive_interval(f, m, -2.0 * R, -R, opts);
    const Complex shell = right.value + left.value;
    out.value += shell;
    out.err_estimate += right.err_estimate + left.err_estimate;
    out.evaluations += right.evaluations + left.evaluations;
    const double smag = std::abs(shell);
    if (smag > prev_shell) {
      if (++grow_streak >= 2)
        throw NonDecayingIntegrand("real-line integrand failed to decay");
    } else {
      grow_streak = 0;
    }
    prev_shell = smag;
    R *= 2.0;
    if (smag <= opts.rel_change * std::max(std::abs(out.value), 1e-300)) {
      out.err_estimate += smag;
      return out;
    }
  }
  throw TailBoundFailure("real-line integral did not settle within the doubling budget");
}

QuadResult integrate_circle(const Integrand& f, const Measure& m, const QuadOptions& opts) {
  if (m.shape() != Measure::Shape::CircleWeight)
    throw Error("integrate_circle needs a circle weight");
  QuadResult out;
  std::vector<Complex> vals;  // f * w at theta_k = 2 pi k / n
  long n = opts.circle_min_nodes;
  vals.resize(n);
  for (long k = 0; k < n; ++k) {
    const double th = 2.0 * std::numbers::pi * k / static_cast<double>(n);
    vals[k] = f(SamplePoint{th, {}, false}) * m.circle_weight(th);
  }
  out.evaluations = n;
  Complex prev{0.0, 0.0};
  for (Complex v : vals) prev += v;
  prev /= static_cast<double>(n);

  while (2 * n <= opts.circle_max_nodes) {
    std::vector<Complex> next(2 * n);
    for (long k = 0; k < n; ++k) next[2 * k] = vals[k];
    for (long k = 0; k < n; ++k) {
      const double th = 2.0 * std::numbers::pi * (2 * k + 1) / static_cast<double>(2 * n);
      next[2 * k + 1] = f(SamplePoint{th, {}, false}) * m.circle_weight(th);
    }
    out.evaluations += n;
    n *= 2;
    vals = std::move(next);
    Complex cur{0.0, 0.0};
    for (Complex v : vals) cur += v;
    cur /= static_cast<double>(n);
    const double diff = std::abs(cur - prev);
    if (n >= 2 * opts.circle_min_nodes &&
        diff <= opts.eps_quad * std::max(std::abs(cur), 1.0)) {
      out.value = cur;
      out.err_estimate = diff;
      return out;
    }
    prev = cur;
  }
  throw MaxNodesExceeded("circle rule exceeded the node budget");
}

QuadResult sum_discrete(const Integrand& f, const Measure& m, const QuadOptions& opts) {
  if (m.shape() != Measure::Shape::DiscreteMasses)
    throw Error("sum_discrete needs a discrete measure");
  QuadResult out;
  std::complex<long double> acc{0.0L, 0.0L};
  double peak = 0.0;
  double tail_total = 0.0;

  auto run_stream = [&](int branch, int dir) {
    double prev1 = -1.0, prev2 = -1.0;
    int small_streak = 0;
    for (long k = 0;; ++k) {
      if (k > opts.max_atoms)
        throw TailBoundFailure("discrete sum exceeded the atom budget");
      const long idx = dir > 0 ? k : -k - 1;
      const Atom a = m.atom(branch, idx);
      if (!(std::abs(a.mass) > 0.0L)) {
        // Mass genuinely vanished; decay was established well before this.
        return;
      }
      const Complex fv = f(SamplePoint{a.x, a.exp_xi, a.has_exp_xi});
      const std::complex<long double> term =
          std::complex<long double>(fv.real(), fv.imag()) * a.mass;
      ++out.evaluations;
      acc += term;
      const double tmag = static_cast<double>(std::abs(term));
      peak = std::max(peak, tmag);
      const double scale = std::max(static_cast<double>(std::abs(acc)), peak);
      const double r1 = prev1 > 0.0 ? tmag / prev1 : 1.0;
      const bool decaying = k >= 3 && r1 < 0.9 && prev1 <= prev2;
      if (k >= 3 && tmag <= opts.eps_tail * scale && decaying) {
        if (++small_streak >= 3) {
          const double r = std::min(0.95, std::max(r1, prev1 / std::max(prev2, 1e-300)));
          tail_total += tmag * r / (1.0 - r);
          return;
        }
      } else {
        small_streak = 0;
      }
      prev2 = prev1;
      prev1 = tmag;
    }
  };

  for (int b = 0; b < m.branch_count(); ++b) {
    run_stream(b, +1);
    if (m.branch_two_sided(b)) run_stream(b, -1);
  }
  out.value = Complex{static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  out.err_estimate = tail_total + 1.1e-16 * (std::abs(out.value) + peak);
  return out;
}

QuadResult inner_product(const Integrand& f, const Integrand& g, const Measure& mu,
                         const QuadOptions& opts) {
  Integrand prod = [&f, &g](const SamplePoint& sp) { return f(sp) * g(sp); };
  switch (mu.shape()) {
    case Measure::Shape::IntervalDensity:
      return integrate_interval(prod, mu, opts);
    case Measure::Shape::CircleWeight:
      return integrate_circle(prod, mu, opts);
    case Measure::Shape::DiscreteMasses:
      return sum_discrete(prod, mu, opts);
  }
  throw Error("unreachable");
}

Integrand one() {
  return [](const SamplePoint&) { return Complex{1.0, 0.0}; };
}

Integrand family_integrand(const FamilySpec& spec, long degree, EvalPoint::Kind kind,
                           bool conjugate) {
  FamilySpec s = spec;
  return [s, degree, kind, conjugate](const SamplePoint& sp) {
    EvalPoint pt = [&] {
      switch (kind) {
        case EvalPoint::Kind::Trig:
          return EvalPoint::trig(sp.u);
        case EvalPoint::Kind::Line:
          return EvalPoint::line(sp.u);
        case EvalPoint::Kind::Circle:
          return EvalPoint::circle(sp.u);
        case EvalPoint::Kind::Hyper:
          return sp.has_exp_xi ? EvalPoint::hyper_exp(sp.exp_xi)
                               : EvalPoint::hyper_xi(std::asinh(sp.u));
      }
      throw Error("unreachable");
    }();
    const Complex v = families::family_values(s, degree, pt)[degree];
    return conjugate ? std::conj(v) : v;
  };
}

}  // namespace qortho::integrate
