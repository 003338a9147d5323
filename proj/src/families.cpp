#include "qortho/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qortho::families {

using qcore::phi;
using qcore::poch;
using qcore::poch_inf;
using qcore::poch_multi_inf;

namespace {

constexpr Complex kI{0.0, 1.0};

Complex ipow(Complex b, long e) {
  if (e < 0) return 1.0 / ipow(b, -e);
  Complex r{1.0, 0.0};
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Row of Gaussian binomial coefficients [n choose k]_q.
std::vector<double> qbinom_row(double q, long n) {
  std::vector<double> c(n + 1);
  c[0] = 1.0;
  for (long k = 0; k + 1 <= n; ++k)
    c[k + 1] = c[k] * (1.0 - std::pow(q, static_cast<double>(n - k))) /
               (1.0 - std::pow(q, static_cast<double>(k + 1)));
  return c;
}

void require_degree(long n) {
  if (n < 0) throw Error("degree must be nonnegative");
  if (n > kDegreeCap)
    throw DegreeOverflow("degree " + std::to_string(n) + " above cap " +
                         std::to_string(kDegreeCap));
}

double real_checked(Complex v, const char* what) {
  if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v)))
    throw Error(std::string(what) + ": value has a non-negligible imaginary part");
  return v.real();
}

}  // namespace

const char* family_name(FamilyId id) {
  switch (id) {
    case FamilyId::ContinuousQHermite: return "continuous-q-hermite";
    case FamilyId::DiscreteQHermite: return "discrete-q-hermite";
    case FamilyId::QInvHermite: return "qinv-hermite";
    case FamilyId::ASCarlitzU: return "carlitz-u";
    case FamilyId::ASCarlitzV: return "carlitz-v";
    case FamilyId::ASChihara: return "al-salam-chihara";
    case FamilyId::AskeyWilson: return "askey-wilson";
    case FamilyId::BigQJacobi: return "big-q-jacobi";
    case FamilyId::SzegoCircle: return "szego";
    case FamilyId::Pastro: return "pastro";
    case FamilyId::ASVermaRational: return "al-salam-verma";
    case FamilyId::ASChiharaQinv: return "asc-qinv";
    case FamilyId::IsmailMassonRational: return "ismail-masson";
  }
  return "?";
}

FamilyId family_from_name(const std::string& name) {
  for (FamilyId id :
       {FamilyId::ContinuousQHermite, FamilyId::DiscreteQHermite, FamilyId::QInvHermite,
        FamilyId::ASCarlitzU, FamilyId::ASCarlitzV, FamilyId::ASChihara, FamilyId::AskeyWilson,
        FamilyId::BigQJacobi, FamilyId::SzegoCircle, FamilyId::Pastro,
        FamilyId::ASVermaRational, FamilyId::ASChiharaQinv, FamilyId::IsmailMassonRational}) {
    if (name == family_name(id)) return id;
  }
  throw DomainViolation("unknown family: " + name);
}

bool is_rational(FamilyId id) {
  return id == FamilyId::ASVermaRational || id == FamilyId::IsmailMassonRational;
}

bool has_recurrence(FamilyId id) { return !is_rational(id); }

bool has_gen_function(FamilyId id) {
  switch (id) {
    case FamilyId::BigQJacobi:
    case FamilyId::ASVermaRational:
    case FamilyId::IsmailMassonRational:
      return false;
    default:
      return true;
  }
}

FamilySpec::FamilySpec(FamilyId family, QBase q, FamilyParams params)
    : id(family), base(q), p(params) {
  const double qq = base.q();
  auto mod_lt = [&](Complex t, double bound) { return std::abs(t) < bound; };
  switch (id) {
    case FamilyId::ASCarlitzU:
      if (!(p.a < 0.0)) throw DomainViolation("carlitz-u requires a < 0");
      break;
    case FamilyId::ASCarlitzV:
      if (!(p.a > 0.0)) throw DomainViolation("carlitz-v requires a > 0");
      break;
    case FamilyId::ASChihara:
      if (!mod_lt(p.t1, 1.0) || !mod_lt(p.t2, 1.0))
        throw DomainViolation("al-salam-chihara requires |t1|, |t2| < 1");
      break;
    case FamilyId::AskeyWilson:
      if (!mod_lt(p.t1, 1.0) || !mod_lt(p.t2, 1.0) || !mod_lt(p.t3, 1.0) || !mod_lt(p.t4, 1.0))
        throw DomainViolation("askey-wilson requires max |t_j| < 1");
      break;
    case FamilyId::BigQJacobi: {
      if (!(p.a < 0.0)) throw DomainViolation("big-q-jacobi requires a < 0");
      const double lo = 1.0 / p.a;
      for (Complex t : {p.t1, p.t2}) {
        if (std::abs(t.imag()) > 1e-14 || !(t.real() > lo && t.real() < 1.0))
          throw DomainViolation("big-q-jacobi requires t1, t2 in (1/a, 1)");
      }
      break;
    }
    case FamilyId::ASVermaRational:
      if (!(p.a > 0.0)) throw DomainViolation("al-salam-verma requires a > 0");
      break;
    case FamilyId::ASChiharaQinv: {
      const Complex prod = p.t1 * p.t2;
      for (long k = 2; k <= 200; ++k) {
        const double qk = std::pow(qq, static_cast<double>(k));
        if (qk < 1e-250) break;
        if (std::abs(prod + qk) < 1e-12 * qk)
          throw DomainViolation("asc-qinv requires t1 t2 != -q^{n+1}, n >= 1");
      }
      break;
    }
    default:
      break;
  }
}

EvalPoint EvalPoint::trig(double theta) {
  if (!(theta >= -1e-12 && theta <= std::numbers::pi + 1e-12))
    throw DomainViolation("trig point requires theta in [0, pi]");
  return {Kind::Trig, theta, {1.0, 0.0}};
}
EvalPoint EvalPoint::hyper_xi(double xi) { return {Kind::Hyper, 0.0, std::exp(Complex{xi, 0.0})}; }
EvalPoint EvalPoint::hyper_exp(Complex exp_xi) {
  if (exp_xi == Complex{0.0, 0.0}) throw DomainViolation("hyper point requires e^xi != 0");
  return {Kind::Hyper, 0.0, exp_xi};
}
EvalPoint EvalPoint::line(double x) { return {Kind::Line, x, {1.0, 0.0}}; }
EvalPoint EvalPoint::circle(double theta) { return {Kind::Circle, theta, {1.0, 0.0}}; }
EvalPoint EvalPoint::circle_z(Complex zz) {
  if (std::abs(std::abs(zz) - 1.0) > 1e-14)
    throw DomainViolation("circle point requires |z| = 1");
  return {Kind::Circle, std::arg(zz), {1.0, 0.0}};
}

Complex EvalPoint::z() const {
  if (kind != Kind::Circle) throw DomainViolation("point is not on the circle");
  return std::exp(kI * u);
}

double EvalPoint::x() const {
  switch (kind) {
    case Kind::Trig: return std::cos(u);
    case Kind::Line: return u;
    case Kind::Hyper: {
      const Complex x2 = 0.5 * (exp_xi - 1.0 / exp_xi);
      return real_checked(x2, "hyper x");
    }
    default: throw DomainViolation("circle points have no real coordinate");
  }
}

namespace {

// e^{i theta} for Trig points; for Line points with |x| > 1 the algebraic
// continuation x + sqrt(x^2-1) plays the same role.
Complex trig_w(const EvalPoint& pt) {
  if (pt.kind == EvalPoint::Kind::Trig) return std::exp(kI * pt.u);
  if (pt.kind == EvalPoint::Kind::Line) {
    const double x = pt.u;
    if (std::abs(x) <= 1.0) return Complex{x, std::sqrt(std::max(0.0, 1.0 - x * x))};
    return Complex{x + std::copysign(std::sqrt(x * x - 1.0), x), 0.0};
  }
  throw DomainViolation("family needs a trig/line point");
}

Complex hyper_e(const EvalPoint& pt) {
  if (pt.kind == EvalPoint::Kind::Hyper) return pt.exp_xi;
  if (pt.kind == EvalPoint::Kind::Line) {
    const double x = pt.u;
    return Complex{x + std::sqrt(x * x + 1.0), 0.0};
  }
  throw DomainViolation("family needs a hyper/line point");
}

double line_x(const EvalPoint& pt) {
  if (pt.kind == EvalPoint::Kind::Line || pt.kind == EvalPoint::Kind::Trig ||
      pt.kind == EvalPoint::Kind::Hyper)
    return pt.x();
  throw DomainViolation("family needs a real coordinate");
}

// ---- recurrence kernels -------------------------------------------------

// Generic three-term forward recursion p_{n+1} = A_n(x) p_n + B_n p_{n-1}.
template <typename FA, typename FB>
std::vector<Complex> run_recurrence(long n_max, Complex p1, FA&& A, FB&& B) {
  std::vector<Complex> v(n_max + 1);
  v[0] = Complex{1.0, 0.0};
  if (n_max == 0) return v;
  v[1] = p1;
  for (long n = 1; n < n_max; ++n) v[n + 1] = A(n) * v[n] + B(n) * v[n - 1];
  return v;
}

std::vector<Complex> szego_all(long n_max, Complex z, double q) {
  std::vector<Complex> out(n_max + 1);
  std::vector<Complex> cur(n_max + 1, Complex{1.0, 0.0});
  out[0] = Complex{1.0, 0.0};
  const double isq = 1.0 / std::sqrt(q);
  for (long m = 1; m <= n_max; ++m) {
    std::vector<Complex> nxt(n_max - m + 1);
    for (long j = 0; j + m <= n_max; ++j)
      nxt[j] = cur[j + 1] + isq * z * std::pow(q, static_cast<double>(j)) * cur[j];
    cur = std::move(nxt);
    out[m] = cur[0];
  }
  return out;
}

// Pastro ladder on the grid {q^j w}: the same-degree term regresses inward
// (argument shrinks by q), so the base row is the cubic Taylor start of
// P_m(u) = d_m + c_1 d_{m-1} u + c_2 d_{m-2} u^2 + O(u^3) at u = q^J w.
std::vector<Complex> pastro_all(long n_max, Complex z, Complex a, Complex b, double q) {
  const Complex w = z / std::sqrt(q);
  const double wm = std::max(1.0, std::abs(w));
  long J = static_cast<long>(std::ceil(std::log(2e-6 / wm) / std::log(q))) + 2;
  J = std::max<long>(J, 4);

  std::vector<Complex> d(n_max + 1);
  d[0] = Complex{1.0, 0.0};
  for (long m = 0; m < n_max; ++m)
    d[m + 1] = d[m] * (1.0 - b * std::pow(q, static_cast<double>(m))) /
               (1.0 - std::pow(q, static_cast<double>(m + 1)));
  const Complex c1 = (1.0 - a * q) / (1.0 - q);
  const Complex c2 = c1 * (1.0 - a * q * q) / (1.0 - q * q);

  std::vector<Complex> prev(J + 1, Complex{1.0, 0.0});  // degree 0
  std::vector<Complex> out(n_max + 1);
  out[0] = Complex{1.0, 0.0};
  std::vector<double> qj(J + 1);
  for (long j = 0; j <= J; ++j) qj[j] = std::pow(q, static_cast<double>(j));
  for (long m = 1; m <= n_max; ++m) {
    std::vector<Complex> cur(J + 1);
    const Complex u = qj[J] * w;
    cur[J] = d[m] + c1 * (m >= 1 ? d[m - 1] : Complex{}) * u +
             c2 * (m >= 2 ? d[m - 2] : Complex{}) * u * u;
    for (long j = J - 1; j >= 0; --j)
      cur[j] = cur[j + 1] + qj[j] * w * (prev[j] - a * q * prev[j + 1]);
    prev = std::move(cur);
    out[m] = prev[0];
  }
  return out;
}

std::vector<Complex> recurrence_values(const FamilySpec& s, long n_max, const EvalPoint& pt) {
  const double q = s.base.q();
  switch (s.id) {
    case FamilyId::ContinuousQHermite: {
      const Complex x{line_x(pt), 0.0};
      return run_recurrence(
          n_max, 2.0 * x, [&](long) { return 2.0 * x; },
          [&](long n) { return Complex{-(1.0 - std::pow(q, static_cast<double>(n))), 0.0}; });
    }
    case FamilyId::DiscreteQHermite: {
      const Complex x{line_x(pt), 0.0};
      return run_recurrence(
          n_max, x, [&](long) { return x; },
          [&](long n) {
            return Complex{-std::pow(q, static_cast<double>(n - 1)) *
                               (1.0 - std::pow(q, static_cast<double>(n))),
                           0.0};
          });
    }
    case FamilyId::QInvHermite: {
      const Complex x{line_x(pt), 0.0};
      return run_recurrence(
          n_max, 2.0 * x, [&](long) { return 2.0 * x; },
          [&](long n) {
            return Complex{-std::pow(q, static_cast<double>(-n)) *
                               (1.0 - std::pow(q, static_cast<double>(n))),
                           0.0};
          });
    }
    case FamilyId::ASCarlitzU: {
      const Complex x{line_x(pt), 0.0};
      const double a = s.p.a;
      return run_recurrence(
          n_max, x - 1.0 - a,
          [&](long n) { return x - (1.0 + a) * std::pow(q, static_cast<double>(n)); },
          [&](long n) {
            return Complex{a * std::pow(q, static_cast<double>(n - 1)) *
                               (1.0 - std::pow(q, static_cast<double>(n))),
                           0.0};
          });
    }
    case FamilyId::ASCarlitzV: {
      const Complex x{line_x(pt), 0.0};
      const double a = s.p.a;
      return run_recurrence(
          n_max, x - 1.0 - a,
          [&](long n) { return x - (1.0 + a) * std::pow(q, static_cast<double>(-n)); },
          [&](long n) {
            return Complex{-a * std::pow(q, 1.0 - 2.0 * n) *
                               (1.0 - std::pow(q, static_cast<double>(n))),
                           0.0};
          });
    }
    case FamilyId::ASChihara: {
      // Monic reference normalization.
      const Complex x{line_x(pt), 0.0};
      const Complex t1 = s.p.t1, t2 = s.p.t2;
      return run_recurrence(
          n_max, x - 0.5 * (t1 + t2),
          [&](long n) { return x - 0.5 * (t1 + t2) * std::pow(q, static_cast<double>(n)); },
          [&](long n) {
            const double qn = std::pow(q, static_cast<double>(n));
            return -0.25 * (1.0 - qn) * (1.0 - t1 * t2 * qn / q);
          });
    }
    case FamilyId::AskeyWilson: {
      const Complex x{line_x(pt), 0.0};
      const Complex t1 = s.p.t1, t2 = s.p.t2, t3 = s.p.t3, t4 = s.p.t4;
      if (t1 == Complex{0.0, 0.0})
        throw DomainViolation("askey-wilson recurrence needs t1 != 0");
      const Complex P = t1 * t2 * t3 * t4;
      auto A = [&](long n) {
        const double qn = std::pow(q, static_cast<double>(n));
        return (1.0 - t1 * t2 * qn) * (1.0 - t1 * t3 * qn) * (1.0 - t1 * t4 * qn) *
               (1.0 - P * qn / q) /
               (t1 * (1.0 - P * qn * qn / q) * (1.0 - P * qn * qn));
      };
      auto C = [&](long n) {
        const double qn1 = std::pow(q, static_cast<double>(n - 1));
        return t1 * (1.0 - qn1 * q) * (1.0 - t2 * t3 * qn1) * (1.0 - t2 * t4 * qn1) *
               (1.0 - t3 * t4 * qn1) /
               ((1.0 - P * qn1 * qn1) * (1.0 - P * qn1 * qn1 * q));
      };
      std::vector<Complex> v(n_max + 1);
      v[0] = Complex{1.0, 0.0};
      if (n_max == 0) return v;
      const Complex b0 = t1 + 1.0 / t1 - A(0) - C(0);
      v[1] = (2.0 * x - b0) / A(0);
      for (long n = 1; n < n_max; ++n) {
        const Complex An = A(n), Cn = C(n);
        v[n + 1] = ((2.0 * x - (t1 + 1.0 / t1 - An - Cn)) * v[n] - Cn * v[n - 1]) / An;
      }
      return v;
    }
    case FamilyId::BigQJacobi: {
      // Andrews-Askey translated coefficients; reference P_n(1) = 1.
      const double x = line_x(pt);
      const Complex alpha = s.p.t1 / q, beta = s.p.a * s.p.t2 / q, gam = s.p.a * s.p.t1 / q;
      const Complex y = s.p.t1 * x;
      auto A = [&](long n) {
        const double qn1 = std::pow(q, static_cast<double>(n + 1));
        return (1.0 - alpha * qn1) * (1.0 - alpha * beta * qn1) * (1.0 - gam * qn1) /
               ((1.0 - alpha * beta * qn1 * qn1 / q) * (1.0 - alpha * beta * qn1 * qn1));
      };
      auto C = [&](long n) {
        const double qn = std::pow(q, static_cast<double>(n));
        return -alpha * gam * qn * q * (1.0 - qn) * (1.0 - beta * qn) *
               (1.0 - alpha * beta * qn / gam) /
               ((1.0 - alpha * beta * qn * qn) * (1.0 - alpha * beta * qn * qn * q));
      };
      std::vector<Complex> v(n_max + 1);
      v[0] = Complex{1.0, 0.0};
      if (n_max == 0) return v;
      v[1] = (y - 1.0 + A(0)) / A(0);
      for (long n = 1; n < n_max; ++n) {
        const Complex An = A(n), Cn = C(n);
        v[n + 1] = ((y - 1.0 + An + Cn) * v[n] - Cn * v[n - 1]) / An;
      }
      return v;
    }
    case FamilyId::SzegoCircle:
      return szego_all(n_max, pt.z(), q);
    case FamilyId::Pastro:
      return pastro_all(n_max, pt.z(), s.p.t1, s.p.t2, q);
    case FamilyId::ASChiharaQinv: {
      const Complex e = hyper_e(pt);
      const Complex x = 0.5 * (e - 1.0 / e);
      const Complex t1 = s.p.t1, t2 = s.p.t2;
      const Complex A = -(t1 + t2) / q;
      const Complex B = t1 * t2 / (q * q);
      std::vector<Complex> v(n_max + 1);
      v[0] = Complex{1.0, 0.0};
      if (n_max == 0) return v;
      v[1] = (A + 2.0 * x) / (1.0 - q);
      for (long n = 1; n < n_max; ++n) {
        const double qn = std::pow(q, static_cast<double>(n));
        v[n + 1] = ((A + 2.0 * x * qn) * v[n] - (B + qn / q) * v[n - 1]) /
                   (1.0 - qn * q);
      }
      return v;
    }
    default:
      throw NoRecurrence(std::string("no recurrence for family ") + family_name(s.id));
  }
}

// ---- explicit kernels ---------------------------------------------------

Complex u_family_explicit(long n, Complex e, Complex t1, Complex t2, const QBase& base) {
  // Cauchy-product form of the generating function; the factors
  //   c_k = prod_{j<k} (e q^j - t1/q),  d_m = prod_{j<m} (-t2/q - q^j/e)
  // keep the sum pole-free in t1, t2.
  const double q = base.q();
  std::vector<Complex> c(n + 1), d(n + 1);
  c[0] = d[0] = Complex{1.0, 0.0};
  for (long k = 0; k < n; ++k) {
    const double qk = std::pow(q, static_cast<double>(k));
    const double den = 1.0 - std::pow(q, static_cast<double>(k + 1));
    c[k + 1] = c[k] * (e * qk - t1 / q) / den;
    d[k + 1] = d[k] * (-t2 / q - qk / e) / den;
  }
  Complex sum{0.0, 0.0};
  for (long k = 0; k <= n; ++k) sum += c[k] * d[n - k];
  return sum;
}

Complex explicit_value(const FamilySpec& s, long n, const EvalPoint& pt) {
  const double q = s.base.q();
  const QBase& b = s.base;
  const double qmn = std::pow(q, static_cast<double>(-n));
  switch (s.id) {
    case FamilyId::ContinuousQHermite: {
      const Complex w = trig_w(pt);
      const auto bin = qbinom_row(q, n);
      Complex sum{0.0, 0.0};
      for (long k = 0; k <= n; ++k) sum += bin[k] * ipow(w, n - 2 * k);
      return sum;
    }
    case FamilyId::DiscreteQHermite:
    case FamilyId::ASCarlitzU: {
      const double a = s.id == FamilyId::DiscreteQHermite ? -1.0 : s.p.a;
      const double x = line_x(pt);
      const auto bin = qbinom_row(q, n);
      Complex sum{0.0, 0.0};
      Complex vk{1.0, 0.0};  // prod_{j<k} (x - q^j)
      for (long k = 0; k <= n; ++k) {
        const long m = n - k;
        sum += bin[k] * ipow(Complex{-a, 0.0}, m) * std::pow(q, 0.5 * m * (m - 1)) * vk;
        vk *= (x - std::pow(q, static_cast<double>(k)));
      }
      return sum;
    }
    case FamilyId::ASCarlitzV: {
      const double a = s.p.a;
      const double x = line_x(pt);
      const auto bin = qbinom_row(q, n);
      Complex sum{0.0, 0.0};
      Complex wk{1.0, 0.0};  // prod_{j<k} (x - q^{-j})
      for (long k = 0; k <= n; ++k) {
        const long m = n - k;
        sum += bin[k] * ipow(Complex{-a, 0.0}, m) *
               std::pow(q, static_cast<double>(-k * m) - 0.5 * m * (m - 1)) * wk;
        wk *= (x - std::pow(q, static_cast<double>(-k)));
      }
      return sum;
    }
    case FamilyId::QInvHermite: {
      const Complex e = hyper_e(pt);
      const auto bin = qbinom_row(q, n);
      Complex sum{0.0, 0.0};
      for (long k = 0; k <= n; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += bin[k] * sign * std::pow(q, static_cast<double>(k * (k - n))) *
               ipow(e, n - 2 * k);
      }
      return sum;
    }
    case FamilyId::ASChihara: {
      // Cauchy-product representation behind the generating function; bounded
      // terms, unlike the 3phi2 whose q^{-n} terms cancel catastrophically.
      if (s.p.t1 == Complex{0.0, 0.0})
        throw DomainViolation("al-salam-chihara explicit form needs t1 != 0");
      const Complex w = trig_w(pt);
      const Complex t1 = s.p.t1, t2 = s.p.t2;
      std::vector<Complex> c(n + 1), d(n + 1);
      c[0] = d[0] = Complex{1.0, 0.0};
      for (long k = 0; k < n; ++k) {
        const double qk = std::pow(q, static_cast<double>(k));
        const double den = 1.0 - qk * q;
        c[k + 1] = c[k] * (1.0 - t2 * w * qk) / (den * w);
        d[k + 1] = d[k] * (1.0 - t1 / w * qk) * w / den;
      }
      Complex sum{0.0, 0.0};
      for (long k = 0; k <= n; ++k) sum += c[k] * d[n - k];
      return poch(Complex{q, 0.0}, b, n) * ipow(t1, n) / poch(t1 * t2, b, n) * sum;
    }
    case FamilyId::AskeyWilson: {
      // Cauchy product of the two 2phi1 factors of the generating function.
      const Complex w = trig_w(pt);
      const Complex t1 = s.p.t1, t2 = s.p.t2, t3 = s.p.t3, t4 = s.p.t4;
      std::vector<Complex> A(n + 1), B(n + 1);
      A[0] = B[0] = Complex{1.0, 0.0};
      for (long k = 0; k < n; ++k) {
        const double qk = std::pow(q, static_cast<double>(k));
        A[k + 1] = A[k] * (1.0 - t1 * w * qk) * (1.0 - t2 * w * qk) /
                   ((1.0 - qk * q) * (1.0 - t1 * t2 * qk) * w);
        B[k + 1] = B[k] * (1.0 - t3 / w * qk) * (1.0 - t4 / w * qk) * w /
                   ((1.0 - qk * q) * (1.0 - t3 * t4 * qk));
      }
      Complex sum{0.0, 0.0};
      for (long k = 0; k <= n; ++k) sum += A[k] * B[n - k];
      return poch(Complex{q, 0.0}, b, n) * poch(t1 * t2, b, n) * poch(t3 * t4, b, n) * sum;
    }
    case FamilyId::BigQJacobi: {
      const double x = line_x(pt);
      const double a = s.p.a, t1 = s.p.t1.real(), t2 = s.p.t2.real();
      const std::vector<qcore::QPowTerm> num{
          {dd::from(1.0), -n},
          {dd::mul(dd::mul(dd::two_prod(a, t1), t2), 1.0), n - 1},
          {dd::two_prod(x, t1), 0}};
      const std::vector<qcore::QPowTerm> den{{dd::from(t1), 0}, {dd::two_prod(a, t1), 0}};
      return Complex{qcore::phi_terminating_structured(num, den, b, n), 0.0};
    }
    case FamilyId::SzegoCircle: {
      const Complex zeta = pt.z() / std::sqrt(q);
      const auto bin = qbinom_row(q, n);
      Complex sum{0.0, 0.0};
      Complex zk{1.0, 0.0};
      for (long k = 0; k <= n; ++k) {
        sum += bin[k] * zk;
        zk *= zeta;
      }
      return sum;
    }
    case FamilyId::Pastro: {
      const Complex w = pt.z() / std::sqrt(q);
      const Complex a = s.p.t1, bb = s.p.t2;
      std::vector<Complex> c(n + 1), d(n + 1);
      c[0] = d[0] = Complex{1.0, 0.0};
      for (long k = 0; k < n; ++k) {
        const double qk = std::pow(q, static_cast<double>(k));
        const double den = 1.0 - qk * q;
        c[k + 1] = c[k] * (1.0 - a * q * qk) / den;
        d[k + 1] = d[k] * (1.0 - bb * qk) / den;
      }
      Complex sum{0.0, 0.0};
      Complex wk{1.0, 0.0};
      for (long k = 0; k <= n; ++k) {
        sum += c[k] * d[n - k] * wk;
        wk *= w;
      }
      return sum;
    }
    case FamilyId::ASVermaRational: {
      const double x = line_x(pt);
      const double a = s.p.a, t1 = s.p.t1.real(), t2 = s.p.t2.real();
      if (std::abs(s.p.t1.imag()) > 1e-14 || std::abs(s.p.t2.imag()) > 1e-14)
        throw DomainViolation("al-salam-verma evaluation expects real t1, t2");
      const std::vector<qcore::QPowTerm> num{
          {dd::from(1.0), -n}, {dd::from(t1), 0}, {dd::two_prod(a, t1), 0}};
      const std::vector<qcore::QPowTerm> den{
          {dd::two_prod(x, t1), 0}, {dd::mul(dd::two_prod(a, t1), t2), -1}};
      return Complex{qcore::phi_terminating_structured(num, den, b, n), 0.0};
    }
    case FamilyId::ASChiharaQinv:
      return u_family_explicit(n, hyper_e(pt), s.p.t1, s.p.t2, b);
    case FamilyId::IsmailMassonRational: {
      if (s.p.t1 == Complex{0.0, 0.0})
        throw DomainViolation("ismail-masson explicit form needs t1 != 0");
      const Complex e = hyper_e(pt);
      const Complex t1 = s.p.t1, t2 = s.p.t2, t3 = s.p.t3, t4 = s.p.t4;
      const bool all_real = std::abs(t1.imag()) + std::abs(t2.imag()) + std::abs(t3.imag()) +
                                std::abs(t4.imag()) + std::abs(e.imag()) <
                            1e-300;
      if (all_real) {
        const double r1 = t1.real(), r2 = t2.real(), r3 = t3.real(), r4 = t4.real();
        const double re = e.real();
        const std::vector<qcore::QPowTerm> num{
            {dd::from(1.0), -n},
            {dd::mul(dd::two_prod(-r1, r2), 1.0), n - 2},
            {dd::two_prod(-r1, r3), -1},
            {dd::two_prod(-r1, r4), -1}};
        const std::vector<qcore::QPowTerm> den{
            {dd::two_prod(-r1, re), 0},
            {dd::div(dd::from(r1), dd::from(re)), 0},
            {dd::mul(dd::mul(dd::two_prod(r1, r2), r3), r4), -3}};
        return Complex{qcore::phi_terminating_structured(num, den, b, n), 0.0};
      }
      return phi({{qmn, 0.0}, -t1 * t2 * std::pow(q, static_cast<double>(n - 2)),
                  -t1 * t3 / q, -t1 * t4 / q},
                 {-t1 * e, t1 / e, t1 * t2 * t3 * t4 * std::pow(q, -3.0)}, {q, 0.0}, b)
          .value;
    }
  }
  throw Error("unreachable");
}

}  // namespace

Complex eval_recurrence(const FamilySpec& spec, long n, const EvalPoint& pt) {
  require_degree(n);
  return recurrence_values(spec, n, pt)[n];
}

Complex eval_explicit(const FamilySpec& spec, long n, const EvalPoint& pt) {
  require_degree(n);
  return explicit_value(spec, n, pt);
}

Complex normalization_map(const FamilySpec& spec, long n) {
  require_degree(n);
  switch (spec.id) {
    case FamilyId::ASChihara:
      // Leading coefficient of the explicit form; the recurrence is monic.
      return ipow(2.0 * spec.p.t1, n) / poch(spec.p.t1 * spec.p.t2, spec.base, n);
    case FamilyId::AskeyWilson: {
      // The recurrence runs in the bare 4phi3 normalization.
      if (spec.p.t1 == Complex{0.0, 0.0})
        throw DomainViolation("askey-wilson normalization map needs t1 != 0");
      return ipow(1.0 / spec.p.t1, n) * poch(spec.p.t1 * spec.p.t2, spec.base, n) *
             poch(spec.p.t1 * spec.p.t3, spec.base, n) *
             poch(spec.p.t1 * spec.p.t4, spec.base, n);
    }
    case FamilyId::ASVermaRational:
    case FamilyId::IsmailMassonRational:
      throw NoRecurrence("normalization map undefined for rational families");
    default:
      return Complex{1.0, 0.0};
  }
}

std::vector<Complex> family_values(const FamilySpec& spec, long n_max, const EvalPoint& pt) {
  require_degree(n_max);
  if (is_rational(spec.id)) {
    std::vector<Complex> v(n_max + 1);
    for (long n = 0; n <= n_max; ++n) v[n] = explicit_value(spec, n, pt);
    return v;
  }
  std::vector<Complex> v = recurrence_values(spec, n_max, pt);
  if (spec.id == FamilyId::ASChihara) {
    Complex map{1.0, 0.0};
    for (long n = 1; n <= n_max; ++n) {
      map *= 2.0 * spec.p.t1 /
             (1.0 - spec.p.t1 * spec.p.t2 * std::pow(spec.base.q(), static_cast<double>(n - 1)));
      v[n] *= map;
    }
  } else if (spec.id == FamilyId::AskeyWilson) {
    Complex map{1.0, 0.0};
    for (long n = 1; n <= n_max; ++n) {
      const double qn1 = std::pow(spec.base.q(), static_cast<double>(n - 1));
      map *= (1.0 - spec.p.t1 * spec.p.t2 * qn1) * (1.0 - spec.p.t1 * spec.p.t3 * qn1) *
             (1.0 - spec.p.t1 * spec.p.t4 * qn1) / spec.p.t1;
      v[n] *= map;
    }
  }
  return v;
}

Complex norm_value(const FamilySpec& spec, long n) {
  require_degree(n);
  const QBase& b = spec.base;
  const double q = b.q();
  const double two_pi = 2.0 * std::numbers::pi;
  const Complex t1 = spec.p.t1, t2 = spec.p.t2, t3 = spec.p.t3, t4 = spec.p.t4;
  switch (spec.id) {
    case FamilyId::ContinuousQHermite:
      return two_pi * poch(Complex{q, 0.0}, b, n) / poch_inf(Complex{q, 0.0}, b);
    case FamilyId::DiscreteQHermite:
      return poch(Complex{q, 0.0}, b, n) * std::pow(q, 0.5 * n * (n - 1));
    case FamilyId::QInvHermite:
      return std::pow(q, -0.5 * n * (n + 1)) * poch(Complex{q, 0.0}, b, n);
    case FamilyId::ASCarlitzU:
      return ipow(Complex{-spec.p.a, 0.0}, n) * std::pow(q, 0.5 * n * (n - 1)) *
             poch(Complex{q, 0.0}, b, n);
    case FamilyId::ASCarlitzV:
      return ipow(Complex{spec.p.a, 0.0}, n) * std::pow(q, static_cast<double>(-n * n)) *
             poch(Complex{q, 0.0}, b, n);
    case FamilyId::ASChihara:
      return two_pi * poch(Complex{q, 0.0}, b, n) * ipow(t1, 2 * n) /
             (poch_inf(Complex{q, 0.0}, b) * poch_inf(t1 * t2, b) * poch(t1 * t2, b, n));
    case FamilyId::AskeyWilson: {
      const Complex P = t1 * t2 * t3 * t4;
      const double qn = std::pow(q, static_cast<double>(n));
      Complex denom = poch_inf(Complex{qn * q, 0.0}, b);
      for (Complex pr : {t1 * t2, t1 * t3, t1 * t4, t2 * t3, t2 * t4, t3 * t4})
        denom *= poch_inf(pr * qn, b);
      return two_pi * poch_inf(P * qn * qn, b) *
             poch(P * qn / q, b, n) / denom;
    }
    case FamilyId::BigQJacobi: {
      const Complex a{spec.p.a, 0.0};
      const double qn1 = std::pow(q, static_cast<double>(n - 1));
      const Complex num = poch(Complex{q, 0.0}, b, n) * poch(t2, b, n) * poch(a * t2, b, n) *
                          poch(a * t1 * t2 * qn1, b, n) *
                          poch_inf(a * t1 * t2 * qn1 * std::pow(q, static_cast<double>(n + 1)), b);
      const Complex den = poch_inf(t1, b) * poch_inf(a * t1, b) * poch_inf(t2, b) *
                          poch_inf(a * t2, b) * poch(t1, b, n) * poch(a * t1, b, n);
      return num / den * ipow(-a * t1 * t1, n) * std::pow(q, 0.5 * n * (n - 1));
    }
    case FamilyId::SzegoCircle:
      return poch(Complex{q, 0.0}, b, n) * std::pow(q, static_cast<double>(-n)) /
             poch_inf(Complex{q, 0.0}, b);
    case FamilyId::Pastro:
      return poch(t1 * t2 * q, b, n) * std::pow(q, static_cast<double>(-n)) /
             poch(Complex{q, 0.0}, b, n);
    case FamilyId::ASVermaRational: {
      const Complex a{spec.p.a, 0.0};
      const Complex r = a * t1 * t2 / q;
      return poch_inf(t1, b) * poch_inf(a * t1, b) * poch_inf(t2, b) * poch_inf(a * t2, b) *
             poch(Complex{q, 0.0}, b, n) * ipow(r, n) / (poch_inf(r, b) * poch(r, b, n));
    }
    case FamilyId::ASChiharaQinv:
      return std::pow(q, 0.5 * n * (n - 3)) *
             poch(-t1 * t2 * std::pow(q, static_cast<double>(-n - 1)), b, n) /
             poch(Complex{q, 0.0}, b, n);
    case FamilyId::IsmailMassonRational: {
      const Complex pref = (1.0 + t1 * t2 * std::pow(q, static_cast<double>(n - 2))) /
                           (1.0 + t1 * t2 * std::pow(q, static_cast<double>(2 * n - 2)));
      const Complex m12 = poch_inf(-t1 * t2 * std::pow(q, static_cast<double>(n - 1)), b);
      if (t3 == Complex{0.0, 0.0} && t4 == Complex{0.0, 0.0}) {
        return pref * m12 * poch(Complex{q, 0.0}, b, n) * std::pow(q, 0.5 * n * (n - 3)) *
               ipow(t1 * t2, n);
      }
      const Complex P = t1 * t2 * t3 * t4 * std::pow(q, -3.0);
      Complex cross{1.0, 0.0};  // pairs (1,3),(1,4),(2,3),(2,4),(3,4)
      for (Complex pr : {t1 * t3, t1 * t4, t2 * t3, t2 * t4, t3 * t4})
        cross *= poch_inf(-pr / q, b);
      return pref * ipow(P, n) * poch(Complex{q, 0.0}, b, n) *
             poch(-q * q / (t3 * t4), b, n) / poch(P, b, n) * m12 * cross / poch_inf(P, b);
    }
  }
  throw Error("unreachable");
}

NormConstant norm_constant(const FamilySpec& spec, long n) {
  // Domain guards for the positivity statements attached to each relation.
  const double q = spec.base.q();
  auto real_in = [&](Complex t, double lo, double hi) {
    return std::abs(t.imag()) < 1e-14 && t.real() > lo && t.real() < hi;
  };
  switch (spec.id) {
    case FamilyId::ASChihara:
      if (!real_in(spec.p.t1, -1.0, 1.0) || !real_in(spec.p.t2, -1.0, 1.0))
        throw DomainViolation("norm constant valid for real t1, t2 in (-1,1)");
      break;
    case FamilyId::AskeyWilson:
      for (Complex t : {spec.p.t1, spec.p.t2, spec.p.t3, spec.p.t4})
        if (!real_in(t, -1.0, 1.0))
          throw DomainViolation("norm constant valid for real |t_j| < 1");
      break;
    case FamilyId::Pastro: {
      const double r = std::sqrt(q);
      if (!real_in(spec.p.t1, -r, r) || !real_in(spec.p.t2, -r, r))
        throw DomainViolation("norm constant valid for real |t1|, |t2| < sqrt(q)");
      break;
    }
    case FamilyId::ASVermaRational:
      if (std::abs(spec.p.a * spec.p.t1 * spec.p.t2) >= q)
        throw DomainViolation("norm constant valid for |a t1 t2| < q");
      break;
    case FamilyId::ASChiharaQinv: {
      const Complex prod = spec.p.t1 * spec.p.t2;
      const bool conj_pair = std::abs(spec.p.t1 - std::conj(spec.p.t2)) < 1e-14;
      const bool real_pos = std::abs(prod.imag()) < 1e-14 && prod.real() >= 0.0;
      if (!conj_pair && !real_pos)
        throw DomainViolation("positive case needs t2 = conj(t1) or real t1 t2 >= 0");
      break;
    }
    default:
      break;
  }
  const Complex v = norm_value(spec, n);
  const double value = real_checked(v, "norm constant");
  if (!(value > 0.0)) throw DomainViolation("norm constant not positive in this domain");
  return {spec.id, n, value};
}

// ---- generating functions ----------------------------------------------

namespace {

// c_{n+1}/c_n for the family's generating-function coefficient sequence.
Complex gen_coeff_ratio(const FamilySpec& s, long n) {
  const double q = s.base.q();
  const double qn = std::pow(q, static_cast<double>(n));
  const double qn1 = qn * q;
  switch (s.id) {
    case FamilyId::ContinuousQHermite:
    case FamilyId::DiscreteQHermite:
    case FamilyId::ASCarlitzU:
    case FamilyId::SzegoCircle:
      return Complex{1.0 - qn1, 0.0};
    case FamilyId::QInvHermite:
      return Complex{(1.0 - qn1) / qn, 0.0};
    case FamilyId::ASCarlitzV:
      return Complex{-(1.0 - qn1) / qn, 0.0};
    case FamilyId::ASChihara:
      return s.p.t1 * (1.0 - qn1) / (1.0 - s.p.t1 * s.p.t2 * qn);
    case FamilyId::AskeyWilson:
      return (1.0 - qn1) * (1.0 - s.p.t1 * s.p.t2 * qn) * (1.0 - s.p.t3 * s.p.t4 * qn);
    case FamilyId::Pastro:
    case FamilyId::ASChiharaQinv:
      return Complex{1.0, 0.0};
    default:
      throw Error(std::string("no generating function for ") + family_name(s.id));
  }
}

}  // namespace

double gen_function_disc(const FamilySpec& spec, const EvalPoint& pt) {
  const double q = spec.base.q();
  const double inf = std::numeric_limits<double>::infinity();
  switch (spec.id) {
    case FamilyId::ContinuousQHermite:
    case FamilyId::ASChihara:
    case FamilyId::AskeyWilson:
      return 1.0;
    case FamilyId::DiscreteQHermite:
    case FamilyId::ASCarlitzU: {
      const double x = std::abs(line_x(pt));
      return x > 0.0 ? 1.0 / x : inf;
    }
    case FamilyId::ASCarlitzV:
      return std::min(1.0, 1.0 / spec.p.a);
    case FamilyId::QInvHermite:
      return inf;
    case FamilyId::SzegoCircle:
    case FamilyId::Pastro:
      return std::min(1.0, std::sqrt(q) / std::abs(pt.z()));
    case FamilyId::ASChiharaQinv: {
      double r = inf;
      for (Complex t : {spec.p.t1, spec.p.t2})
        if (std::abs(t) > 0.0) r = std::min(r, q / std::abs(t));
      return r;
    }
    default:
      throw Error(std::string("no generating function for ") + family_name(spec.id));
  }
}

Complex gen_function_partial(const FamilySpec& spec, Complex t, const EvalPoint& pt,
                             long n_terms) {
  if (std::abs(t) >= gen_function_disc(spec, pt))
    throw OutsideDisc("generating-function argument outside the convergence disc");
  const std::vector<Complex> p = family_values(spec, n_terms, pt);
  Complex sum{0.0, 0.0};
  Complex tn{1.0, 0.0};
  Complex cn{1.0, 0.0};
  for (long n = 0; n <= n_terms; ++n) {
    sum += p[n] * tn / cn;
    tn *= t;
    cn *= gen_coeff_ratio(spec, n);
  }
  return sum;
}

Complex gen_function_closed(const FamilySpec& spec, Complex t, const EvalPoint& pt) {
  const QBase& b = spec.base;
  const double q = b.q();
  switch (spec.id) {
    case FamilyId::ContinuousQHermite: {
      const Complex w = trig_w(pt);
      return 1.0 / poch_multi_inf({t * w, t / w}, b);
    }
    case FamilyId::DiscreteQHermite:
      return poch_multi_inf({t, -t}, b) / poch_inf(t * line_x(pt), b);
    case FamilyId::ASCarlitzU:
      return poch_multi_inf({t, spec.p.a * t}, b) / poch_inf(t * line_x(pt), b);
    case FamilyId::ASCarlitzV:
      return poch_inf(t * line_x(pt), b) / poch_multi_inf({t, spec.p.a * t}, b);
    case FamilyId::QInvHermite:
      return chi(t, hyper_e(pt), b);
    case FamilyId::ASChihara: {
      const Complex w = trig_w(pt);
      return poch_multi_inf({t * spec.p.t1, t * spec.p.t2}, b) /
             poch_multi_inf({t / w, t * w}, b);
    }
    case FamilyId::AskeyWilson: {
      const Complex w = trig_w(pt);
      const Complex f1 =
          phi({spec.p.t1 * w, spec.p.t2 * w}, {spec.p.t1 * spec.p.t2}, t / w, b).value;
      const Complex f2 =
          phi({spec.p.t3 / w, spec.p.t4 / w}, {spec.p.t3 * spec.p.t4}, t * w, b).value;
      return f1 * f2;
    }
    case FamilyId::SzegoCircle:
      return 1.0 / poch_multi_inf({t, t * pt.z() / std::sqrt(q)}, b);
    case FamilyId::Pastro: {
      const Complex z = pt.z();
      return poch_multi_inf({spec.p.t1 * t * z * std::sqrt(q), spec.p.t2 * t}, b) /
             poch_multi_inf({t * z / std::sqrt(q), t}, b);
    }
    case FamilyId::ASChiharaQinv: {
      const Complex e = hyper_e(pt);
      return chi(t, e, b) / poch_multi_inf({-spec.p.t1 * t / q, -spec.p.t2 * t / q}, b);
    }
    default:
      throw Error(std::string("no generating function for ") + family_name(spec.id));
  }
}

Complex chi(Complex t, Complex exp_xi, const QBase& base) {
  return poch_multi_inf({-t * exp_xi, t / exp_xi}, base);
}

Complex chi_from_x(Complex t, double x, const QBase& base) {
  const double s = std::sqrt(x * x + 1.0);
  return poch_multi_inf({-t * (s + x), t * (s - x)}, base);
}

std::vector<double> log_radius_terms(const FamilySpec& spec, long n_max) {
  const double q = spec.base.q();
  const double lq = std::log(q);
  const double l2pi = std::log(2.0 * std::numbers::pi);
  // ln (q;q)_inf
  double lqinf = 0.0;
  for (long k = 1;; ++k) {
    const double f = std::pow(q, static_cast<double>(k));
    if (f < 1e-18) break;
    lqinf += std::log1p(-f);
  }
  std::vector<double> out(n_max + 1);
  double lpq = 0.0;  // ln (q;q)_n
  auto labs = [&](Complex v) { return std::log(std::abs(v)); };
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) lpq += std::log1p(-std::pow(q, static_cast<double>(n)));
    double lz = 0.0, lc = 0.0;
    switch (spec.id) {
      case FamilyId::ContinuousQHermite:
        lz = l2pi + lpq - lqinf;
        lc = lpq;
        break;
      case FamilyId::DiscreteQHermite:
        lz = lpq + 0.5 * n * (n - 1) * lq;
        lc = lpq;
        break;
      case FamilyId::QInvHermite:
        lz = -0.5 * n * (n + 1) * lq + lpq;
        lc = -0.5 * n * (n - 1) * lq + lpq;
        break;
      case FamilyId::ASCarlitzU:
        lz = n * std::log(-spec.p.a) + 0.5 * n * (n - 1) * lq + lpq;
        lc = lpq;
        break;
      case FamilyId::ASCarlitzV:
        lz = n * std::log(spec.p.a) - n * static_cast<double>(n) * lq + lpq;
        lc = -0.5 * n * (n - 1) * lq + lpq;
        break;
      case FamilyId::ASChihara:
        lz = l2pi + lpq + 2.0 * n * std::log(std::abs(spec.p.t1)) - lqinf -
             labs(poch_inf(spec.p.t1 * spec.p.t2, spec.base)) -
             labs(poch(spec.p.t1 * spec.p.t2, spec.base, n));
        lc = n * std::log(std::abs(spec.p.t1)) + lpq -
             labs(poch(spec.p.t1 * spec.p.t2, spec.base, n));
        break;
      case FamilyId::AskeyWilson:
        lz = labs(norm_value(spec, n));
        lc = lpq + labs(poch(spec.p.t1 * spec.p.t2, spec.base, n)) +
             labs(poch(spec.p.t3 * spec.p.t4, spec.base, n));
        break;
      case FamilyId::SzegoCircle:
        lz = lpq - n * lq - lqinf;
        lc = lpq;
        break;
      case FamilyId::Pastro:
        lz = labs(poch(spec.p.t1 * spec.p.t2 * q, spec.base, n)) - n * lq - lpq;
        lc = 0.0;
        break;
      case FamilyId::ASChiharaQinv: {
        // log |(-t1 t2 q^{-n-1};q)_n| summed directly; the plain product
        // overflows well before the degree cap.
        double lp = 0.0;
        const Complex tt = spec.p.t1 * spec.p.t2;
        for (long j = 0; j < n; ++j)
          lp += std::log(std::abs(1.0 + tt * std::pow(q, static_cast<double>(j - n - 1))));
        lz = 0.5 * n * (n - 3) * lq + lp - lpq;
        lc = 0.0;
        break;
      }
      default:
        throw Error(std::string("no generating function for ") + family_name(spec.id));
    }
    out[n] = 0.5 * lz - lc;
  }
  return out;
}

// ---- parameter-map variants ----------------------------------------------

Complex andrews_askey_p(long n, Complex y, Complex alpha, Complex beta, Complex gamma,
                        const QBase& base) {
  for (Complex v : {y, alpha, beta, gamma})
    if (std::abs(v.imag()) > 1e-14)
      throw DomainViolation("andrews-askey evaluation expects real arguments");
  const std::vector<qcore::QPowTerm> num{
      {dd::from(1.0), -n},
      {dd::two_prod(alpha.real(), beta.real()), n + 1},
      {dd::from(y.real()), 0}};
  const std::vector<qcore::QPowTerm> den{{dd::from(alpha.real()), 1},
                                         {dd::from(gamma.real()), 1}};
  return Complex{qcore::phi_terminating_structured(num, den, base, n), 0.0};
}

Complex al_salam_verma_r(long n, Complex y, Complex alpha, Complex beta, Complex gamma,
                         Complex delta, const QBase& base) {
  for (Complex v : {y, alpha, beta, gamma, delta})
    if (std::abs(v.imag()) > 1e-14)
      throw DomainViolation("al-salam-verma R evaluation expects real arguments");
  const dd::DD ag_over_d =
      dd::div(dd::two_prod(alpha.real(), gamma.real()), dd::from(delta.real()));
  const std::vector<qcore::QPowTerm> num{
      {dd::from(beta.real()), 0}, {ag_over_d, 0}, {dd::from(1.0), -n}};
  const std::vector<qcore::QPowTerm> den{
      {dd::two_prod(beta.real(), gamma.real()), -1},
      {dd::two_prod(alpha.real(), y.real()), 1}};
  return Complex{qcore::phi_terminating_structured(num, den, base, n), 0.0};
}

Complex pastro_tilde(long n, Complex z, Complex t1, Complex t2, const QBase& base) {
  const double q = base.q();
  return phi({{std::pow(q, static_cast<double>(-n)), 0.0}, t1 * std::sqrt(q) * z, t1 * q},
             {{0.0, 0.0}, t1 * t2 * q}, {q, 0.0}, base)
      .value;
}

Complex pastro_tilde_factor(long n, Complex t1, Complex t2, const QBase& base) {
  const double q = base.q();
  return poch(Complex{q, 0.0}, base, n) * ipow(t1 * q, n) / poch(t1 * t2 * q, base, n);
}

double qinv_orthonormal_multiplier(long n, const QBase& base) {
  const double q = base.q();
  return std::pow(q, 0.25 * n * (n + 1)) /
         std::sqrt(poch(Complex{q, 0.0}, base, n).real());
}

}  // namespace qortho::families
