#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "qortho/check.hpp"
#include "qortho/dd.hpp"
#include "qortho/errors.hpp"

// Scalar kernel: q-shifted factorials, infinite products with rigorous
// truncation bounds, and basic hypergeometric series over complex doubles.

namespace qortho::qcore {

using qortho::Complex;

inline constexpr double kQMin = 1e-6;
inline constexpr double kQMax = 1.0 - 1e-6;
inline constexpr double kEpsProd = 1e-16;    // infinite-product truncation
inline constexpr double kEpsSeries = 1e-15;  // nonterminating series truncation
inline constexpr long kMaxTerms = 10000;
inline constexpr double kPoleTol = 1e-13;

// The base q, restricted to (0,1) away from both endpoints.
class QBase {
 public:
  explicit QBase(double q) : q_(q) {
    if (!(q >= kQMin && q <= kQMax))
      throw DomainViolation("q must lie in [1e-6, 1-1e-6], got " + std::to_string(q));
  }
  double q() const { return q_; }
  double log_q() const { return std::log(q_); }

 private:
  double q_;
};

// Numeric result of a product/series together with a truncation-error bound.
// Finite products and terminating series carry err_bound == 0 exactly.
struct QSeriesValue {
  Complex value{1.0, 0.0};
  double err_bound = 0.0;
  long terms_used = 0;
};

// (a;q)_n, finite product. Total on n >= 0.
QSeriesValue qpoch(Complex a, const QBase& base, long n);

// (a;q)_inf truncated at K = ceil(log(eps*(1-q)/|a|)/log q); the reported
// err_bound |a| q^K/(1-q) * |value| is a first-order bound on the dropped tail.
QSeriesValue qpoch_inf(Complex a, const QBase& base, double eps_prod = kEpsProd);

// log |(a;q)_inf| and the sign of the product, for real a. Used where the
// plain value would overflow the double range.
struct LogPoch {
  double log_abs = 0.0;
  int sign = 1;
};
LogPoch qpoch_inf_log_real(double a, const QBase& base, double eps_prod = kEpsProd);

// (a1,...,ak;q)_n with n finite or infinite; error bounds combine first order.
QSeriesValue qpoch_multi(std::span<const Complex> params, const QBase& base,
                         std::optional<long> n, double eps_prod = kEpsProd);

// Bare-value conveniences used pervasively by the higher modules.
inline Complex poch(Complex a, const QBase& b, long n) { return qpoch(a, b, n).value; }
inline Complex poch_inf(Complex a, const QBase& b) { return qpoch_inf(a, b).value; }
inline Complex poch_multi_inf(std::initializer_list<Complex> params, const QBase& b) {
  std::vector<Complex> v(params);
  return qpoch_multi(v, b, std::nullopt).value;
}

// An r-phi-s series: numerator/denominator parameter lists, argument, base.
// Construction rejects denominator parameters at exact negative q-powers of
// the base (poles of 1/(b;q)_k) within a relative tolerance of 1e-13.
struct PhiSeries {
  std::vector<Complex> num;
  std::vector<Complex> den;
  Complex z;
  QBase base;

  PhiSeries(std::vector<Complex> numerator, std::vector<Complex> denominator,
            Complex argument, QBase q);

  // Smallest m >= 0 with some numerator parameter equal to q^{-m}; -1 if the
  // series does not terminate.
  long terminating_order() const;

  // s + 1 - r; sign of the (-1)^n q^{n(n-1)/2} correction exponent.
  int excess() const { return static_cast<int>(den.size()) + 1 - static_cast<int>(num.size()); }
};

// Evaluates the series. Terminating series are summed exactly (err_bound 0);
// nonterminating ones stop once both the current term and a geometric-ratio
// tail bound fall below eps_series relative to the partial sum.
QSeriesValue phi_eval(const PhiSeries& series, long max_terms = kMaxTerms,
                      double eps_series = kEpsSeries);

inline QSeriesValue phi(std::vector<Complex> num, std::vector<Complex> den, Complex z,
                        const QBase& base, long max_terms = kMaxTerms) {
  return phi_eval(PhiSeries(std::move(num), std::move(den), z, base), max_terms);
}

// A real series parameter in the structured form coeff * q^exponent. The
// coefficient is carried in double-double and the q-power by exponent so the
// q^{-n}-type parameters stay exactly coherent with the base.
struct QPowTerm {
  dd::DD coeff;
  long exponent = 0;
};

// Terminating series with all-real parameters, stop+1 terms, summed in
// double-double arithmetic. Only balanced shapes (s+1 == r, argument q) are
// needed here. Terminating sums with q^{-n} numerator parameters reach
// intermediate terms of order q^{-n(n-1)/2}; plain double summation loses the
// result entirely once that exceeds ~1e16.
double phi_terminating_structured(std::span<const QPowTerm> num,
                                  std::span<const QPowTerm> den, const QBase& base,
                                  long stop);

// Verifies the index-shift identity
//   (a;q)_{n-k} = (a;q)_n / (q^{1-n}/a;q)_k * (-q/a)^k q^{-kn+k(k-1)/2}
// together with its reversal variant
//   (a;q)_k = (q^{1-k}/a;q)_k (-a)^k q^{k(k-1)/2}.
// The returned record carries both sides of the first identity; pass requires
// both residuals under tolerance.
CheckResult qpoch_shift_identity_check(Complex a, const QBase& base, long n, long k,
                                       double tol = 1e-12);

// True when b equals q^{-m} for some integer m >= 0 up to relative tol.
bool is_negative_q_power(Complex b, const QBase& base, long* order = nullptr,
                         double tol = kPoleTol);

}  // namespace qortho::qcore
