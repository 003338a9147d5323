#pragma once

#include <vector>

#include "qortho/errors.hpp"
#include "qortho/qcore.hpp"

// Polynomial and rational-function families of the q-Hermite hierarchy.
// Every polynomial family is evaluable two independent ways (a three-term
// recurrence or degree ladder, and an explicit series representation) so the
// two routes can be cross-validated; norm constants are the closed-form
// diagonal values of the corresponding (bi)orthogonality relations.

namespace qortho::families {

using qcore::QBase;

inline constexpr long kDegreeCap = 64;

enum class FamilyId {
  ContinuousQHermite,
  DiscreteQHermite,
  QInvHermite,
  ASCarlitzU,
  ASCarlitzV,
  ASChihara,
  AskeyWilson,
  BigQJacobi,
  SzegoCircle,
  Pastro,
  ASVermaRational,
  ASChiharaQinv,
  IsmailMassonRational,
};

const char* family_name(FamilyId id);
FamilyId family_from_name(const std::string& name);
bool is_rational(FamilyId id);
bool has_recurrence(FamilyId id);        // includes the circle-family ladders
bool has_gen_function(FamilyId id);

struct FamilyParams {
  Complex t1{0.0, 0.0};
  Complex t2{0.0, 0.0};
  Complex t3{0.0, 0.0};
  Complex t4{0.0, 0.0};
  double a = 0.0;
  double gamma = 0.0;
};

struct FamilySpec {
  FamilyId id;
  QBase base;
  FamilyParams p;

  FamilySpec(FamilyId family, QBase q, FamilyParams params = {});
};

// A point in one of the four variable parametrizations. Hyper points store
// e^xi directly so measure atoms with exactly known e^xi lose nothing.
struct EvalPoint {
  enum class Kind { Trig, Hyper, Line, Circle };
  Kind kind;
  double u = 0.0;             // theta (Trig, Circle) or x (Line)
  Complex exp_xi{1.0, 0.0};   // Hyper only

  static EvalPoint trig(double theta);
  static EvalPoint hyper_xi(double xi);
  static EvalPoint hyper_exp(Complex exp_xi);
  static EvalPoint line(double x);
  static EvalPoint circle(double theta);
  static EvalPoint circle_z(Complex z);  // |z| = 1 within 1e-14

  Complex z() const;          // e^{i theta} on the circle
  double x() const;           // real coordinate where defined
};

// Degree-n value by forward recursion from the family's recurrence (the
// reference normalization; monic for Al-Salam-Chihara). Circle families use
// exact degree ladders. Rational families throw NoRecurrence.
Complex eval_recurrence(const FamilySpec& spec, long n, const EvalPoint& pt);

// Degree-n value from the explicit (hypergeometric or derived-sum)
// representation.
Complex eval_explicit(const FamilySpec& spec, long n, const EvalPoint& pt);

// Scalar multiplier M with eval_explicit = M * eval_recurrence.
Complex normalization_map(const FamilySpec& spec, long n);

// All explicit-normalization values p_0..p_N at one point (recurrence-backed
// where possible). This is the evaluation path the Gram engines use.
std::vector<Complex> family_values(const FamilySpec& spec, long n_max, const EvalPoint& pt);

struct NormConstant {
  FamilyId id;
  long n;
  double value;
};

// Closed-form diagonal of the family's (bi)orthogonality relation, complex
// version (no domain checks beyond construction).
Complex norm_value(const FamilySpec& spec, long n);

// Domain-checked positive norm constant.
NormConstant norm_constant(const FamilySpec& spec, long n);

// Generating functions: partial sum of p_n(x) t^n / c_n against the family's
// coefficient sequence, the closed-form right side, and the convergence disc.
Complex gen_function_partial(const FamilySpec& spec, Complex t, const EvalPoint& pt, long n_terms);
Complex gen_function_closed(const FamilySpec& spec, Complex t, const EvalPoint& pt);
double gen_function_disc(const FamilySpec& spec, const EvalPoint& pt);

// chi_t(sinh xi) = (-t e^xi, t e^-xi; q)_inf.
Complex chi(Complex t, Complex exp_xi, const QBase& base);
// Same function through the algebraic form with sqrt(x^2+1).
Complex chi_from_x(Complex t, double x, const QBase& base);

// log |sqrt(zeta_n)/c_n| for the radius-of-convergence estimate; supported for
// families with a stated generating function.
std::vector<double> log_radius_terms(const FamilySpec& spec, long n_max);

// Parameter-map variants -------------------------------------------------

// Big q-Jacobi in the Andrews-Askey normalization and the parameter
// translation onto it: phi_n(x; a, t1, t2) = P_n(x t1; t1/q, a t2/q, a t1/q).
Complex andrews_askey_p(long n, Complex y, Complex alpha, Complex beta, Complex gamma,
                        const QBase& base);

// Al-Salam-Verma rational functions R_n and the translation
// psi_n(x; a, t1, t2) = R_n(t1 x/(alpha q); alpha, t1, a t2, alpha t2/t1),
// valid for any nonzero scale alpha.
Complex al_salam_verma_r(long n, Complex y, Complex alpha, Complex beta, Complex gamma,
                         Complex delta, const QBase& base);

// The 3phi2 companion normalization of the Pastro polynomials and the factor
// relating it to them: tilde_p_n = (q;q)_n (t1 q)^n / (t1 t2 q;q)_n * p_n.
Complex pastro_tilde(long n, Complex z, Complex t1, Complex t2, const QBase& base);
Complex pastro_tilde_factor(long n, Complex t1, Complex t2, const QBase& base);

// q^{n(n+1)/4} / sqrt((q;q)_n), the orthonormalizing multiplier of the
// q^{-1}-Hermite family.
double qinv_orthonormal_multiplier(long n, const QBase& base);

}  // namespace qortho::families
