#pragma once

#include <functional>

#include "qortho/measures.hpp"

// Inner-product engines: adaptive Gauss-Legendre panels over interval
// densities, the trapezoid rule on the circle (spectrally accurate for
// periodic analytic integrands), and tail-bounded summation over discrete
// mass lists.

namespace qortho::integrate {

using families::EvalPoint;
using measures::Atom;
using measures::Measure;

struct QuadResult {
  Complex value{0.0, 0.0};
  double err_estimate = 0.0;
  long evaluations = 0;
};

struct QuadOptions {
  double eps_quad = 1e-11;    // absolute-or-relative against result magnitude
  int gl_order = 32;
  long max_panels = 1 << 14;
  long circle_min_nodes = 64;
  long circle_max_nodes = 1 << 16;
  double eps_tail = 1e-14;    // discrete-sum stopping, relative
  long max_atoms = 4000;      // per branch direction
  double r0 = 2.0;            // real-line starting half-width
  int max_doublings = 26;
  double rel_change = 1e-11;  // real-line doubling convergence
};

// A quadrature/summation node. exp_xi rides along for atoms that carry it.
struct SamplePoint {
  double u = 0.0;
  Complex exp_xi{1.0, 0.0};
  bool has_exp_xi = false;
};

using Integrand = std::function<Complex(const SamplePoint&)>;

// integral of f against the density (or sum against the masses); for circle
// weights the 1/(2 pi) normalization is included.
QuadResult integrate_interval(const Integrand& f, const Measure& density,
                              const QuadOptions& opts = {});
QuadResult integrate_circle(const Integrand& f, const Measure& weight,
                            const QuadOptions& opts = {});
QuadResult sum_discrete(const Integrand& f, const Measure& mu, const QuadOptions& opts = {});

// Dispatches on the measure shape: integral or sum of f * g d(mu).
QuadResult inner_product(const Integrand& f, const Integrand& g, const Measure& mu,
                         const QuadOptions& opts = {});

// Constant-1 integrand, for total masses.
Integrand one();

// Evaluates a family member at measure sample points, in the explicit
// normalization; conjugated values for the circle pairings.
Integrand family_integrand(const families::FamilySpec& spec, long degree,
                           EvalPoint::Kind kind, bool conjugate = false);

// Gauss-Legendre nodes/weights on [-1, 1] (cached per order).
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order);

}  // namespace qortho::integrate
