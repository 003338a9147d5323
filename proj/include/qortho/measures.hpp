#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "qortho/families.hpp"

// The measures the hierarchy is integrated against, in three shapes: interval
// densities (stored over the variable the closed forms use, so the Jacobian
// of x = cos theta is already absorbed), weights on the unit circle, and
// discrete mass lists with geometric tail decay.

namespace qortho::measures {

using families::EvalPoint;
using qcore::QBase;

// One atom of a discrete measure. exp_xi carries e^xi for measures living on
// the x = sinh xi parametrization, so attached factors lose nothing to the
// x -> xi round trip.
struct Atom {
  double x = 0.0;
  // long double range: discrete masses decay like q^{k^2} while attached
  // factors can grow just as fast, so the mantissa range of double is not
  // enough for the two ends of the product.
  std::complex<long double> mass{0.0, 0.0};
  Complex exp_xi{1.0, 0.0};
  bool has_exp_xi = false;
  long index = 0;
};

class Measure {
 public:
  enum class Shape { IntervalDensity, CircleWeight, DiscreteMasses };

  Shape shape() const;
  EvalPoint::Kind point_kind() const;

  // Interval densities.
  double lo() const;
  double hi() const;
  bool real_line() const;
  double density(double u) const;
  // Locations where the density spikes, for quadrature panel seeding.
  std::vector<double> breakpoints(double lo, double hi) const;

  // Circle weights (functions of theta; weight_at evaluates off-circle too).
  Complex circle_weight(double theta) const;
  Complex circle_weight_at(Complex z) const;

  // Discrete mass lists. Branches are enumerated independently; two-sided
  // branches accept negative indices. Atoms are memoized behind a lock.
  int branch_count() const;
  bool branch_two_sided(int branch) const;
  Atom atom(int branch, long index) const;

  double declared_mass() const;  // NaN when no closed-form total is declared
  bool declared_positive() const;

  // Attachment: multiply every atom mass (or the density) pointwise.
  Measure attach_discrete(std::function<Complex(const Atom&)> factor,
                          double new_declared_mass, bool positive) const;
  // Attachment with the factor supplied as (log |factor|, sign), composed in
  // log space so huge factors against tiny masses never leave the range.
  Measure attach_discrete_log(std::function<std::pair<double, int>(const Atom&)> log_factor,
                              double new_declared_mass, bool positive) const;
  Measure attach_density(std::function<double(double)> factor, double new_declared_mass,
                         bool positive) const;

  // Location / mass-or-density / cumulative table.
  void dump(std::ostream& os, long max_rows, bool csv) const;

  struct Impl;
  explicit Measure(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const Impl> impl_;
};

// Flat density 1 on [lo, hi] (quadrature plumbing and tests).
Measure lebesgue(double lo, double hi);

// Weight identically 1 on the unit circle (normalized mean convention).
Measure unit_circle();

// (e^{2i theta}, e^{-2i theta}; q)_inf on [0, pi].
Measure hermite_trig_weight(const QBase& base);

// The two-parameter weight over theta; positive for t1, t2 in (-1, 1).
Measure asc_weight(double t1, double t2, const QBase& base);

// Four-parameter weight over theta; positive for max |t_j| < 1.
Measure aw_weight(const std::array<double, 4>& t, const QBase& base);

// Discrete probability measure on [a, 1] with atoms q^n and a q^n, a < 0.
Measure carlitz_measure(double a, const QBase& base);

// The solutions of the carlitz-v moment problem that the closed forms cover:
// m (atoms q^{-n}, unique for 0 < a <= q), sigma (atoms a q^{-n}, unique for
// a >= 1/q), and in the indeterminate window q < a < 1/q both plus the
// analytic density nu when gamma is supplied. a = 1 is excluded.
struct VMeasures {
  std::optional<Measure> m;
  std::optional<Measure> sigma;
  std::optional<Measure> nu;
};
VMeasures v_measures(double a, const QBase& base, std::optional<double> gamma);

// The circle weights: (q^{1/2}z, q^{1/2}/z;q)_inf and the two-parameter Omega.
// Positivity-domain checks require |t1|, |t2| < sqrt(q).
std::pair<Measure, Measure> circle_weights(const QBase& base, double t1, double t2);

// The N-extremal discrete measure with atoms over all integers n,
// x_n = (t q^{-n-1} - q^{n+1}/t)/2, for t in (q, 1).
Measure qinv_hermite_measure(double t, const QBase& base);

// The attached complex measure chi_{t1} chi_{t2} / (-t1 t2/q;q)_inf dmu.
Measure nu_measure(const Measure& mu, Complex t1, Complex t2, const QBase& base);

}  // namespace qortho::measures
