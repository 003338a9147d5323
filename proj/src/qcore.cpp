#include "qortho/qcore.hpp"

#include <algorithm>
#include <cmath>

namespace qortho::qcore {

namespace {

// Exact integer powers; std::pow on negative/complex bases takes the
// principal branch and would leak spurious imaginary parts.
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

double ipow(double b, long e) {
  if (e < 0) return 1.0 / ipow(b, -e);
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace

QSeriesValue qpoch(Complex a, const QBase& base, long n) {
  if (n < 0) throw Error("qpoch: negative order");
  Complex v{1.0, 0.0};
  Complex aq = a;
  const double q = base.q();
  for (long k = 0; k < n; ++k) {
    v *= (1.0 - aq);
    aq *= q;
  }
  return {v, 0.0, n};
}

QSeriesValue qpoch_inf(Complex a, const QBase& base, double eps_prod) {
  if (a == Complex{0.0, 0.0}) return {Complex{1.0, 0.0}, 0.0, 0};
  const double q = base.q();
  const double mag = std::abs(a);
  long K = static_cast<long>(std::ceil(std::log(eps_prod * (1.0 - q) / mag) / std::log(q)));
  K = std::max<long>(K, 1);
  Complex v{1.0, 0.0};
  Complex aq = a;
  for (long k = 0; k < K; ++k) {
    v *= (1.0 - aq);
    aq *= q;
  }
  const double tail = mag * std::pow(q, static_cast<double>(K)) / (1.0 - q);
  return {v, tail * std::abs(v), K};
}

LogPoch qpoch_inf_log_real(double a, const QBase& base, double eps_prod) {
  LogPoch out;
  if (a == 0.0) return out;
  const double q = base.q();
  long K = static_cast<long>(std::ceil(std::log(eps_prod * (1.0 - q) / std::abs(a)) / std::log(q)));
  K = std::max<long>(K, 1);
  double aq = a;
  for (long k = 0; k < K; ++k) {
    const double f = 1.0 - aq;
    if (f == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    if (f < 0.0) out.sign = -out.sign;
    out.log_abs += std::log(std::abs(f));
    aq *= q;
  }
  return out;
}

QSeriesValue qpoch_multi(std::span<const Complex> params, const QBase& base,
                         std::optional<long> n, double eps_prod) {
  if (params.empty()) throw Error("qpoch_multi: empty parameter list");
  Complex v{1.0, 0.0};
  double rel = 0.0;
  long terms = 0;
  for (Complex a : params) {
    QSeriesValue f = n ? qpoch(a, base, *n) : qpoch_inf(a, base, eps_prod);
    terms += f.terms_used;
    if (f.value == Complex{0.0, 0.0}) return {Complex{0.0, 0.0}, 0.0, terms};
    rel += f.err_bound / std::abs(f.value);
    v *= f.value;
  }
  return {v, rel * std::abs(v), terms};
}

bool is_negative_q_power(Complex b, const QBase& base, long* order, double tol) {
  if (std::abs(b.imag()) > tol * std::max(1.0, std::abs(b))) return false;
  const double re = b.real();
  if (re < 1.0 - tol) return false;
  const double m_hat = -std::log(re) / base.log_q();
  const long m = std::lround(m_hat);
  if (m < 0 || m > 4000) return false;
  const double target = std::pow(base.q(), static_cast<double>(-m));
  if (std::abs(b - Complex{target, 0.0}) <= tol * std::max(1.0, target)) {
    if (order) *order = m;
    return true;
  }
  return false;
}

PhiSeries::PhiSeries(std::vector<Complex> numerator, std::vector<Complex> denominator,
                     Complex argument, QBase q)
    : num(std::move(numerator)), den(std::move(denominator)), z(argument), base(q) {
  for (Complex b : den) {
    long m = 0;
    if (is_negative_q_power(b, base, &m))
      throw DenominatorPole("phi series denominator parameter at q^-" + std::to_string(m));
  }
}

long PhiSeries::terminating_order() const {
  long best = -1;
  for (Complex a : num) {
    long m = 0;
    // Looser tol than the pole check: a numerator parameter within 1e-12 of
    // q^{-m} zeroes every term past m to that order.
    if (is_negative_q_power(a, base, &m, 1e-12)) {
      if (best < 0 || m < best) best = m;
    }
  }
  return best;
}

QSeriesValue phi_eval(const PhiSeries& s, long max_terms, double eps_series) {
  const double q = s.base.q();
  const int exc = s.excess();
  const long stop = s.terminating_order();

  if (stop < 0) {
    if (exc < 0)
      throw NonConvergent("nonterminating series with r > s+1 diverges");
    if (exc == 0 && std::abs(s.z) >= 1.0)
      throw NonConvergent("r = s+1 series requires |z| < 1");
  }
  if (stop == 0) return {Complex{1.0, 0.0}, 0.0, 1};
  if (stop > max_terms)
    throw NonConvergent("terminating series longer than the term budget");

  Complex term{1.0, 0.0};
  Complex sum{1.0, 0.0};
  double prev_mag = 1.0;
  double abs_sum = 1.0;  // sum of |term|, for the rounding part of err_bound
  int ok_streak = 0;

  for (long n = 1; n <= max_terms; ++n) {
    // term_n / term_{n-1}; the -q^{n-1} factor advances the
    // ((-1)^n q^{n(n-1)/2})^{s+1-r} correction one step.
    Complex ratio = s.z;
    const double qn1 = std::pow(q, static_cast<double>(n - 1));
    for (Complex a : s.num) ratio *= (1.0 - a * qn1);
    Complex den = Complex{1.0 - std::pow(q, static_cast<double>(n)), 0.0};
    for (Complex b : s.den) {
      const Complex f = 1.0 - b * qn1;
      if (std::abs(f) < kPoleTol * (1.0 + std::abs(b) * qn1))
        throw DenominatorPole("phi series denominator factor vanished at term " +
                              std::to_string(n));
      den *= f;
    }
    ratio /= den;
    if (exc != 0) ratio *= ipow(-qn1, exc);
    term *= ratio;
    sum += term;

    if (stop >= 0) {
      if (n >= stop) return {sum, 0.0, n + 1};
      continue;
    }

    const double tmag = std::abs(term);
    abs_sum += tmag;
    const double smag = std::abs(sum) + 1e-300;
    const double r = tmag / (prev_mag + 1e-300);
    prev_mag = tmag;
    if (n >= 4 && tmag <= eps_series * smag && r < 1.0) {
      const double tail = tmag * r / (1.0 - r);
      if (tail <= eps_series * smag) {
        if (++ok_streak >= 2) {
          // Rounding accumulates along the term recursion; cancelled sums can
          // carry absolute error well above the truncation tail.
          const double fp = 1.1e-16 * abs_sum * (0.5 * n + 2.0);
          return {sum, tail + tmag + fp, n + 1};
        }
        continue;
      }
    }
    ok_streak = 0;
  }
  throw NonConvergent("series did not converge within the term budget");
}

namespace xp {

// Floating-point expansions (Shewchuk): a value stored as a short sum of
// nonoverlapping doubles, components in increasing magnitude. Compressed to
// six components (~95 significant digits), which comfortably absorbs the
// q^{-n(n-1)/2} cancellation of terminating series up to the degree cap.
using Ex = std::vector<double>;

constexpr std::size_t kMaxLen = 6;

inline Ex from(double x) { return x == 0.0 ? Ex{} : Ex{x}; }

inline double val(const Ex& e) {
  double s = 0.0;
  for (double c : e) s += c;
  return s;
}

inline Ex grow(const Ex& e, double b) {
  Ex h;
  h.reserve(e.size() + 1);
  double q = b;
  for (double ei : e) {
    const dd::DD s = dd::two_sum(q, ei);
    if (s.lo != 0.0) h.push_back(s.lo);
    q = s.hi;
  }
  if (q != 0.0 || h.empty()) h.push_back(q);
  return h;
}

inline Ex compress(Ex e) {
  if (e.size() <= kMaxLen) return e;
  // Roll the small components into the kept ones; the dropped mass is below
  // the ulp of the last kept component.
  Ex kept(e.end() - kMaxLen, e.end());
  double small = 0.0;
  for (std::size_t i = 0; i + kMaxLen < e.size(); ++i) small += e[i];
  return grow(kept, small);
}

inline Ex add(const Ex& a, const Ex& b) {
  Ex r = a;
  for (double c : b) r = grow(r, c);
  return compress(std::move(r));
}

inline Ex scale(const Ex& e, double b) {
  if (b == 0.0) return {};
  Ex r;
  for (double c : e) {
    const dd::DD p = dd::two_prod(c, b);
    if (p.lo != 0.0) r = grow(r, p.lo);
    if (p.hi != 0.0) r = grow(r, p.hi);
  }
  return compress(std::move(r));
}

inline Ex mul(const Ex& a, const Ex& b) {
  Ex r;
  for (double c : b) r = add(r, scale(a, c));
  return r;
}

inline Ex neg(Ex e) {
  for (double& c : e) c = -c;
  return e;
}

inline Ex recip(const Ex& d) {
  // Newton iterations from a double seed; each squares the error.
  Ex x = from(1.0 / val(d));
  for (int it = 0; it < 3; ++it) {
    Ex dx = mul(d, x);
    Ex corr = add(from(2.0), neg(dx));
    x = mul(x, corr);
  }
  return x;
}

inline Ex qpow(double q, long e) {
  const bool neg_e = e < 0;
  unsigned long m = neg_e ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Ex r = from(1.0);
  Ex b = from(q);
  while (m > 0) {
    if (m & 1UL) r = mul(r, b);
    b = mul(b, b);
    m >>= 1UL;
  }
  return neg_e ? recip(r) : r;
}

}  // namespace xp

double phi_terminating_structured(std::span<const QPowTerm> num,
                                  std::span<const QPowTerm> den, const QBase& base,
                                  long stop) {
  if (den.size() + 1 != num.size())
    throw Error("phi_terminating_structured: only balanced shapes (s+1 == r)");
  using xp::Ex;
  const double q = base.q();
  // Running parameter values coeff * q^{exponent + k}.
  std::vector<Ex> pn, pd;
  for (const QPowTerm& t : num)
    pn.push_back(xp::mul(xp::qpow(q, t.exponent), xp::add(xp::from(t.coeff.hi),
                                                          xp::from(t.coeff.lo))));
  for (const QPowTerm& t : den)
    pd.push_back(xp::mul(xp::qpow(q, t.exponent), xp::add(xp::from(t.coeff.hi),
                                                          xp::from(t.coeff.lo))));
  Ex qn = xp::from(q);
  Ex term = xp::from(1.0);
  Ex sum = xp::from(1.0);
  const Ex one = xp::from(1.0);
  for (long n = 1; n <= stop; ++n) {
    Ex ratio = xp::from(q);  // argument z = q
    for (Ex& p : pn) {
      ratio = xp::mul(ratio, xp::add(one, xp::neg(p)));
      p = xp::scale(p, q);
    }
    Ex denom = xp::add(one, xp::neg(qn));
    for (Ex& p : pd) {
      denom = xp::mul(denom, xp::add(one, xp::neg(p)));
      p = xp::scale(p, q);
    }
    if (std::abs(xp::val(denom)) < kPoleTol)
      throw DenominatorPole("phi series denominator factor vanished at term " +
                            std::to_string(n));
    term = xp::mul(term, xp::mul(ratio, xp::recip(denom)));
    sum = xp::add(sum, term);
    qn = xp::scale(qn, q);
  }
  return xp::val(sum);
}

CheckResult qpoch_shift_identity_check(Complex a, const QBase& base, long n, long k,
                                       double tol) {
  if (k < 0 || k > n) throw Error("qpoch_shift_identity_check: need 0 <= k <= n");
  if (a == Complex{0.0, 0.0}) throw Error("qpoch_shift_identity_check: a must be nonzero");
  const double q = base.q();

  const Complex lhs = poch(a, base, n - k);
  const Complex denom = poch(std::pow(q, 1.0 - static_cast<double>(n)) / a, base, k);
  if (std::abs(denom) < kPoleTol)
    throw DenominatorPole("shift identity: (q^{1-n}/a;q)_k vanished");
  const Complex rhs = poch(a, base, n) / denom * ipow(-q / a, k) *
                      std::pow(q, static_cast<double>(-k * n) + 0.5 * k * (k - 1));

  // Reversal variant.
  const Complex lhs2 = poch(a, base, k);
  const Complex rhs2 = poch(std::pow(q, 1.0 - static_cast<double>(k)) / a, base, k) *
                       ipow(-a, k) * std::pow(q, 0.5 * k * (k - 1));

  CheckResult r = finish_check(
      "POCH_2_12", "(2.12)",
      {{"q", q}, {"a_re", a.real()}, {"a_im", a.imag()},
       {"n", static_cast<double>(n)}, {"k", static_cast<double>(k)}},
      lhs, rhs, tol);
  const double rel2 = std::abs(lhs2 - rhs2) / std::max({std::abs(lhs2), std::abs(rhs2), 1e-300});
  r.pass = r.pass && rel2 <= tol;
  r.rel_err = std::max(r.rel_err, rel2);
  return r;
}

}  // namespace qortho::qcore
