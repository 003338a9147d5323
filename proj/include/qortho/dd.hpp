#pragma once

#include <cmath>

// Minimal double-double arithmetic (~31 significant digits) for terminating
// basic hypergeometric sums whose q^{-n} parameters make plain doubles cancel
// catastrophically.

namespace qortho::dd {

struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD add(DD a, double b) { return add(a, DD{b, 0.0}); }

inline DD sub(DD a, DD b) { return add(a, DD{-b.hi, -b.lo}); }

inline DD mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD mul(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline DD div(DD a, DD b) {
  const double q1 = a.hi / b.hi;
  DD r = sub(a, mul(b, q1));
  const double q2 = r.hi / b.hi;
  r = sub(r, mul(b, q2));
  const double q3 = r.hi / b.hi;
  DD s = quick_two_sum(q1, q2);
  s.lo += q3;
  return quick_two_sum(s.hi, s.lo);
}

inline DD from(double x) { return {x, 0.0}; }

}  // namespace qortho::dd
