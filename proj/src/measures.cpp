#include "qortho/measures.hpp"

#include <cmath>
#include <iomanip>
#include <mutex>
#include <numbers>
#include <ostream>

namespace qortho::measures {

using families::chi;
using qcore::poch;
using qcore::poch_inf;
using qcore::poch_multi_inf;

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double real_density(Complex v, const char* what) {
  if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v)))
    throw Error(std::string(what) + ": density has non-negligible imaginary part");
  return v.real();
}
}  // namespace

struct DiscreteBranch {
  std::function<Atom(long)> make;
  bool two_sided = false;

  mutable std::mutex lock;
  mutable std::vector<Atom> pos, neg;

  DiscreteBranch(std::function<Atom(long)> m, bool two) : make(std::move(m)), two_sided(two) {}
  DiscreteBranch(const DiscreteBranch& o) : make(o.make), two_sided(o.two_sided) {}

  Atom at(long k) const {
    std::scoped_lock g(lock);
    auto& side = k >= 0 ? pos : neg;
    const std::size_t want = static_cast<std::size_t>(k >= 0 ? k : -k - 1);
    while (side.size() <= want) {
      const long idx = (&side == &pos) ? static_cast<long>(side.size())
                                       : -static_cast<long>(side.size()) - 1;
      side.push_back(make(idx));
    }
    return side[want];
  }
};

struct Measure::Impl {
  Shape shape;
  EvalPoint::Kind kind = EvalPoint::Kind::Line;
  // interval
  double lo = 0.0, hi = 0.0;
  bool real_line = false;
  std::function<double(double)> density;
  std::function<std::vector<double>(double, double)> breaks;
  // circle
  std::function<Complex(Complex)> circle_w;
  // discrete
  std::vector<std::shared_ptr<DiscreteBranch>> branches;

  double declared_mass = kNaN;
  bool positive = true;
};

Measure::Shape Measure::shape() const { return impl_->shape; }
EvalPoint::Kind Measure::point_kind() const { return impl_->kind; }
double Measure::lo() const { return impl_->lo; }
double Measure::hi() const { return impl_->hi; }
bool Measure::real_line() const { return impl_->real_line; }

double Measure::density(double u) const {
  if (impl_->shape != Shape::IntervalDensity) throw Error("measure has no density");
  return impl_->density(u);
}

std::vector<double> Measure::breakpoints(double lo, double hi) const {
  if (!impl_->breaks) return {};
  return impl_->breaks(lo, hi);
}

Complex Measure::circle_weight(double theta) const {
  return circle_weight_at(std::exp(kI * theta));
}

Complex Measure::circle_weight_at(Complex z) const {
  if (impl_->shape != Shape::CircleWeight) throw Error("measure is not a circle weight");
  return impl_->circle_w(z);
}

int Measure::branch_count() const { return static_cast<int>(impl_->branches.size()); }
bool Measure::branch_two_sided(int b) const { return impl_->branches.at(b)->two_sided; }
Atom Measure::atom(int b, long k) const { return impl_->branches.at(b)->at(k); }

double Measure::declared_mass() const { return impl_->declared_mass; }
bool Measure::declared_positive() const { return impl_->positive; }

Measure Measure::attach_discrete(std::function<Complex(const Atom&)> factor,
                                 double new_declared_mass, bool positive) const {
  if (impl_->shape != Shape::DiscreteMasses)
    throw Error("attach_discrete on a non-discrete measure");
  auto impl = std::make_shared<Impl>();
  impl->shape = Shape::DiscreteMasses;
  impl->kind = impl_->kind;
  impl->declared_mass = new_declared_mass;
  impl->positive = positive;
  for (const auto& br : impl_->branches) {
    auto base_branch = br;
    impl->branches.push_back(std::make_shared<DiscreteBranch>(
        [base_branch, factor](long k) {
          Atom a = base_branch->at(k);
          const Complex f = factor(a);
          a.mass *= std::complex<long double>(f.real(), f.imag());
          return a;
        },
        br->two_sided));
  }
  return Measure(impl);
}

Measure Measure::attach_discrete_log(
    std::function<std::pair<double, int>(const Atom&)> log_factor, double new_declared_mass,
    bool positive) const {
  if (impl_->shape != Shape::DiscreteMasses)
    throw Error("attach_discrete_log on a non-discrete measure");
  auto impl = std::make_shared<Impl>();
  impl->shape = Shape::DiscreteMasses;
  impl->kind = impl_->kind;
  impl->declared_mass = new_declared_mass;
  impl->positive = positive;
  for (const auto& br : impl_->branches) {
    auto base_branch = br;
    impl->branches.push_back(std::make_shared<DiscreteBranch>(
        [base_branch, log_factor](long k) {
          Atom a = base_branch->at(k);
          const long double m = std::abs(a.mass);
          if (!(m > 0.0L)) {
            a.mass = 0.0L;
            return a;
          }
          const auto [lf, sign] = log_factor(a);
          const std::complex<long double> phase = a.mass / m;
          a.mass = phase * static_cast<long double>(sign) * std::exp(std::log(m) + static_cast<long double>(lf));
          return a;
        },
        br->two_sided));
  }
  return Measure(impl);
}

Measure Measure::attach_density(std::function<double(double)> factor,
                                double new_declared_mass, bool positive) const {
  if (impl_->shape != Shape::IntervalDensity)
    throw Error("attach_density on a non-interval measure");
  auto impl = std::make_shared<Impl>(*impl_);
  auto base_density = impl_->density;
  impl->density = [base_density, factor](double u) { return base_density(u) * factor(u); };
  impl->declared_mass = new_declared_mass;
  impl->positive = positive;
  impl->branches.clear();
  return Measure(impl);
}

// ---- factories ------------------------------------------------------------

Measure lebesgue(double lo, double hi) {
  auto impl = std::make_shared<Measure::Impl>();
  impl->shape = Measure::Shape::IntervalDensity;
  impl->kind = EvalPoint::Kind::Line;
  impl->lo = lo;
  impl->hi = hi;
  impl->density = [](double) { return 1.0; };
  impl->declared_mass = hi - lo;
  return Measure(impl);
}

Measure unit_circle() {
  auto impl = std::make_shared<Measure::Impl>();
  impl->shape = Measure::Shape::CircleWeight;
  impl->kind = EvalPoint::Kind::Circle;
  impl->circle_w = [](Complex) { return Complex{1.0, 0.0}; };
  impl->declared_mass = 1.0;
  return Measure(impl);
}

Measure hermite_trig_weight(const QBase& base) {
  auto impl = std::make_shared<Measure::Impl>();
  impl->shape = Measure::Shape::IntervalDensity;
  impl->kind = EvalPoint::Kind::Trig;
  impl->lo = 0.0;
  impl->hi = std::numbers::pi;
  QBase b = base;
  impl->density = [b](double th) {
    const Complex e2 = std::exp(2.0 * kI * th);
    return real_density(poch_multi_inf({e2, 1.0 / e2}, b), "hermite weight");
  };
  return Measure(impl);
}

Measure asc_weight(double t1, double t2, const QBase& base) {
  if (!(std::abs(t1) < 1.0 && std::abs(t2) < 1.0))
    throw DomainViolation("asc weight requires t1, t2 in (-1, 1)");
  QBase b = base;
  auto impl = std::make_shared<Measure::Impl>();
  impl->shape = Measure::Shape::IntervalDensity;
  impl->kind = EvalPoint::Kind::Trig;
  impl->lo = 0.0;
  impl->hi = std::numbers::pi;
  impl->density = [b, t1, t2](double th) {
    const Complex w = std::exp(kI * th);
    const Complex num = poch_multi_inf({w * w, 1.0 / (w * w)}, b);
    const Complex den = poch_multi_inf({t1 * w, t1 / w, t2 * w, t2 / w}, b);
    return real_density(num / den, "asc weight");
  };
  return Measure(impl);
}

Measure aw_weight(const std::array<double, 4>& t, const QBase& base) {
  for (double tj : t)
    if (!(std::abs(tj) < 1.0)) throw DomainViolation("aw weight requires max |t_j| < 1");
  QBase b = base;
  auto impl = std::make_shared<Measure::Impl>();
  impl->shape = Measure::Shape::IntervalDensity;
  impl->kind = EvalPoint::Kind::Trig;
  impl->lo = 0.0;
  impl->hi = std::numbers::pi;
  impl->density = [b, t](double th) {
    const Complex w = std::exp(kI * th);
    Complex den{1.0, 0.0};
    for (double tj : t) den *= poch_multi_inf({tj * w, tj / w}, b);
    const Complex num = poch_multi_inf({w * w, 1.0 / (w * w)}, b);
    return real_density(num / den, "aw weight");
  };
  return Measure(impl);
}

Measure carlitz_measure(double a, const QBase& base) {
  if (!(a < 0.0)) throw DomainViolation("carlitz measure requires a < 0");
  const double q = base.q();
  QBase b = base;
  auto impl = std::make_shared<Measure::Impl>();
  impl->shape = Measure::Shape::DiscreteMasses;
  impl->kind = EvalPoint::Kind::Line;
  impl->declared_mass = 1.0;

  const double c1 = poch_inf(Complex{a, 0.0}, b).real();
  const double c2 = poch_inf(Complex{1.0 / a, 0.0}, b).real();
  impl->branches.push_back(std::make_shared<DiscreteBranch>(
      [q, a, c1, b](long k) {
        long double qk = 1.0L, pq = 1.0L, pqa = 1.0L;
        for (long j = 0; j < k; ++j) {
          pq *= 1.0L - qk * q;
          pqa *= 1.0L - (q / a) * qk;
          qk *= q;
        }
        qk = 1.0L;
        for (long j = 0; j < k; ++j) qk *= q;
        return Atom{std::pow(q, static_cast<double>(k)),
                    {qk / (pq * pqa * c1), 0.0L}, {}, false, k};
      },
      false));
  impl->branches.push_back(std::make_shared<DiscreteBranch>(
      [q, a, c2, b](long k) {
        long double qk = 1.0L, pq = 1.0L, paq = 1.0L;
        for (long j = 0; j < k; ++j) {
          pq *= 1.0L - qk * q;
          paq *= 1.0L - (a * q) * qk;
          qk *= q;
        }
        qk = 1.0L;
        for (long j = 0; j < k; ++j) qk *= q;
        return Atom{a * std::pow(q, static_cast<double>(k)),
                    {qk / (pq * paq * c2), 0.0L}, {}, false, k};
      },
      false));
  return Measure(impl);
}

VMeasures v_measures(double a, const QBase& base, std::optional<double> gamma) {
  if (!(a > 0.0)) throw DomainViolation("carlitz-v measures require a > 0");
  if (a == 1.0) throw DomainViolation("a = 1 is excluded for the carlitz-v measures");
  const double q = base.q();
  QBase b = base;
  VMeasures out;

  const bool m_applies = a <= q || a < 1.0 / q;
  const bool sigma_applies = a >= 1.0 / q || a > q;

  if (m_applies) {
    auto impl = std::make_shared<Measure::Impl>();
    impl->shape = Measure::Shape::DiscreteMasses;
    impl->kind = EvalPoint::Kind::Line;
    impl->declared_mass = 1.0;
    const double c = poch_inf(Complex{a * q, 0.0}, b).real();
    impl->branches.push_back(std::make_shared<DiscreteBranch>(
        [q, a, c, b](long k) {
          long double qj = 1.0L, pq = 1.0L, paq = 1.0L, ak = 1.0L, qk2 = 1.0L;
          for (long j = 0; j < k; ++j) {
            pq *= 1.0L - qj * q;
            paq *= 1.0L - (a * q) * qj;
            qj *= q;
            ak *= a;
          }
          for (long j = 0; j < k * k; ++j) qk2 *= q;
          const long double mass = static_cast<long double>(c) * ak * qk2 / (pq * paq);
          return Atom{std::pow(q, static_cast<double>(-k)), {mass, 0.0L}, {}, false, k};
        },
        false));
    out.m = Measure(impl);
  }
  if (sigma_applies) {
    auto impl = std::make_shared<Measure::Impl>();
    impl->shape = Measure::Shape::DiscreteMasses;
    impl->kind = EvalPoint::Kind::Line;
    impl->declared_mass = 1.0;
    const double c = poch_inf(Complex{q / a, 0.0}, b).real();
    impl->branches.push_back(std::make_shared<DiscreteBranch>(
        [q, a, c, b](long k) {
          long double qj = 1.0L, pq = 1.0L, pqa = 1.0L, ak = 1.0L, qk2 = 1.0L;
          for (long j = 0; j < k; ++j) {
            pq *= 1.0L - qj * q;
            pqa *= 1.0L - (q / a) * qj;
            qj *= q;
            ak *= a;
          }
          for (long j = 0; j < k * k; ++j) qk2 *= q;
          const long double mass = static_cast<long double>(c) * qk2 / (ak * pq * pqa);
          return Atom{a * std::pow(q, static_cast<double>(-k)), {mass, 0.0L}, {}, false, k};
        },
        false));
    out.sigma = Measure(impl);
  }
  const bool indeterminate = a > q && a < 1.0 / q;
  if (indeterminate && gamma) {
    if (!(*gamma > 0.0)) throw DomainViolation("nu density requires gamma > 0");
    const double g = *gamma;
    auto impl = std::make_shared<Measure::Impl>();
    impl->shape = Measure::Shape::IntervalDensity;
    impl->kind = EvalPoint::Kind::Line;
    impl->real_line = true;
    impl->lo = -1.0;  // nominal; the integrator expands
    impl->hi = 1.0;
    const double cnum = g * std::abs(a - 1.0) *
                        poch_multi_inf({{q, 0.0}, {a * q, 0.0}, {q / a, 0.0}}, b).real() /
                        (std::numbers::pi * a);
    impl->density = [b, a, g, cnum](double x) {
      const double pa = poch_inf(Complex{x / a, 0.0}, b).real();
      const double px = poch_inf(Complex{x, 0.0}, b).real();
      return cnum / (pa * pa + g * g * px * px);
    };
    impl->breaks = [q, a](double lo, double hi) {
      std::vector<double> v;
      for (double base_pt : {1.0, a}) {
        double x = base_pt;
        while (x <= hi) {
          if (x >= lo) v.push_back(x);
          x /= q;
        }
      }
      return v;
    };
    impl->declared_mass = 1.0;
    out.nu = Measure(impl);
  }
  return out;
}

std::pair<Measure, Measure> circle_weights(const QBase& base, double t1, double t2) {
  const double rq = std::sqrt(base.q());
  if (!(std::abs(t1) < rq && std::abs(t2) < rq))
    throw DomainViolation("circle weights require |t1|, |t2| < sqrt(q)");
  QBase b = base;
  auto szego = std::make_shared<Measure::Impl>();
  szego->shape = Measure::Shape::CircleWeight;
  szego->kind = EvalPoint::Kind::Circle;
  szego->circle_w = [b, rq](Complex z) { return poch_multi_inf({rq * z, rq / z}, b); };

  auto omega = std::make_shared<Measure::Impl>();
  omega->shape = Measure::Shape::CircleWeight;
  omega->kind = EvalPoint::Kind::Circle;
  const double q = base.q();
  omega->circle_w = [b, q, rq, t1, t2](Complex z) {
    const Complex num =
        poch_multi_inf({{q, 0.0}, {t1 * t2 * q, 0.0}, rq * z, rq / z}, b);
    const Complex den =
        poch_multi_inf({{t1 * q, 0.0}, {t2 * q, 0.0}, t1 * rq * z, t2 * rq / z}, b);
    return num / den;
  };
  omega->declared_mass = 1.0;
  return {Measure(szego), Measure(omega)};
}

Measure qinv_hermite_measure(double t, const QBase& base) {
  const double q = base.q();
  if (!(t > q && t < 1.0)) throw DomainViolation("n-extremal measure requires t in (q, 1)");
  QBase b = base;
  auto impl = std::make_shared<Measure::Impl>();
  impl->shape = Measure::Shape::DiscreteMasses;
  impl->kind = EvalPoint::Kind::Hyper;
  impl->declared_mass = 1.0;
  const double denom =
      poch_multi_inf({{-q * q / (t * t), 0.0}, {-t * t / q, 0.0}, {q, 0.0}}, b).real();
  impl->branches.push_back(std::make_shared<DiscreteBranch>(
      [q, t, denom](long n) {
        const double e = t * std::pow(q, static_cast<double>(-n - 1));
        const double x = 0.5 * (e - 1.0 / e);
        const long double lq = std::log(static_cast<long double>(q));
        const long double lmass =
            4.0L * n * (lq - std::log(static_cast<long double>(t))) +
            static_cast<long double>(n) * (2.0L * n - 1.0L) * lq +
            std::log(1.0L + std::pow(static_cast<long double>(q), 2.0L * n + 2.0L) /
                                (static_cast<long double>(t) * t)) -
            std::log(static_cast<long double>(denom));
        return Atom{x, {std::exp(lmass), 0.0L}, Complex{e, 0.0}, true, n};
      },
      true));
  return Measure(impl);
}

Measure nu_measure(const Measure& mu, Complex t1, Complex t2, const QBase& base) {
  if (mu.shape() != Measure::Shape::DiscreteMasses ||
      mu.point_kind() != EvalPoint::Kind::Hyper)
    throw Error("nu_measure expects a discrete measure on the sinh parametrization");
  const Complex normalizer = poch_inf(-t1 * t2 / base.q(), base);
  if (std::abs(normalizer) < 1e-12)
    throw PoleInNormalizer("t1 t2 = -q^{1-k}: attached measure normalizer vanished");
  QBase b = base;
  const bool positive = std::abs(t1 - std::conj(t2)) < 1e-14;
  return mu.attach_discrete(
      [b, t1, t2, normalizer](const Atom& a) {
        return chi(t1, a.exp_xi, b) * chi(t2, a.exp_xi, b) / normalizer;
      },
      1.0, positive);
}

void Measure::dump(std::ostream& os, long max_rows, bool csv) const {
  const char* sep = csv ? "," : "  ";
  if (csv) os << "location,mass_or_density,cumulative\n";
  os << std::setprecision(15);
  auto row = [&](double loc, Complex v, double cum) {
    if (csv) {
      os << loc << sep << v.real();
      if (std::abs(v.imag()) > 0.0) os << "+" << v.imag() << "i";
      os << sep << cum << "\n";
    } else {
      os << std::setw(22) << loc << sep << std::setw(22) << v.real() << sep << std::setw(22)
         << cum << "\n";
    }
  };
  switch (impl_->shape) {
    case Shape::DiscreteMasses: {
      long printed = 0;
      double cum = 0.0;
      for (long k = 0; printed < max_rows; ++k) {
        bool any = false;
        for (int bidx = 0; bidx < branch_count() && printed < max_rows; ++bidx) {
          const auto idxs = branch_two_sided(bidx) && k > 0 ? std::vector<long>{k, -k}
                                                            : std::vector<long>{k};
          for (long idx : idxs) {
            const Atom a = atom(bidx, idx);
            if (std::abs(a.mass) < 1e-16 && k > 4) continue;
            cum += static_cast<double>(a.mass.real());
            row(a.x, Complex{static_cast<double>(a.mass.real()), static_cast<double>(a.mass.imag())}, cum);
            ++printed;
            any = true;
          }
        }
        if (!any && k > 4) break;
      }
      break;
    }
    case Shape::IntervalDensity: {
      const double a = real_line() ? -8.0 : lo();
      const double b = real_line() ? 8.0 : hi();
      const long n = std::max<long>(max_rows, 2);
      double cum = 0.0, prev = 0.0;
      for (long i = 0; i < n; ++i) {
        const double u = a + (b - a) * i / static_cast<double>(n - 1);
        const double d = density(u);
        if (i > 0) cum += 0.5 * (d + prev) * (b - a) / (n - 1);
        prev = d;
        row(u, Complex{d, 0.0}, cum);
      }
      break;
    }
    case Shape::CircleWeight: {
      const long n = max_rows;
      double cum = 0.0;
      for (long i = 0; i < n; ++i) {
        const double th = 2.0 * std::numbers::pi * i / static_cast<double>(n);
        const Complex w = circle_weight(th);
        cum += w.real() / static_cast<double>(n);
        row(th, w, cum);
      }
      break;
    }
  }
}

}  // namespace qortho::measures
