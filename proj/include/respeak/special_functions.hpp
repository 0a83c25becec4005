#pragma once

#include <cmath>
#include <limits>

namespace respeak {

namespace detail {

// Continued fraction for the incomplete beta function, evaluated with the
// modified Lentz method.
template <typename Scalar>
Scalar beta_continued_fraction(Scalar a, Scalar b, Scalar x) {
  using std::abs;
  const Scalar tiny = std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon();
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar qab = a + b;
  const Scalar qap = a + Scalar(1);
  const Scalar qam = a - Scalar(1);
  Scalar c = Scalar(1);
  Scalar d = Scalar(1) - qab * x / qap;
  if (abs(d) < tiny) d = tiny;
  d = Scalar(1) / d;
  Scalar h = d;
  for (int m = 1; m <= 10000; ++m) {
    const Scalar m2 = Scalar(2 * m);
    Scalar aa = Scalar(m) * (b - Scalar(m)) * x / ((qam + m2) * (a + m2));
    d = Scalar(1) + aa * d;
    if (abs(d) < tiny) d = tiny;
    c = Scalar(1) + aa / c;
    if (abs(c) < tiny) c = tiny;
    d = Scalar(1) / d;
    h *= d * c;
    aa = -(a + Scalar(m)) * (qab + Scalar(m)) * x / ((a + m2) * (qap + m2));
    d = Scalar(1) + aa * d;
    if (abs(d) < tiny) d = tiny;
    c = Scalar(1) + aa / c;
    if (abs(c) < tiny) c = tiny;
    d = Scalar(1) / d;
    const Scalar del = d * c;
    h *= del;
    if (abs(del - Scalar(1)) <= eps) break;
  }
  return h;
}

}  // namespace detail

/// Regularized incomplete beta function I_x(a, b) for a, b > 0.
template <typename Scalar>
Scalar regularized_incomplete_beta(Scalar a, Scalar b, Scalar x) {
  using std::exp;
  using std::lgamma;
  using std::log;
  if (x <= Scalar(0)) return Scalar(0);
  if (x >= Scalar(1)) return Scalar(1);
  const Scalar log_front = lgamma(a + b) - lgamma(a) - lgamma(b) + a * log(x) +
                           b * log(Scalar(1) - x);
  const Scalar front = exp(log_front);
  if (x < (a + Scalar(1)) / (a + b + Scalar(2))) {
    return front * detail::beta_continued_fraction(a, b, x) / a;
  }
  return Scalar(1) - front * detail::beta_continued_fraction(b, a, Scalar(1) - x) / b;
}

/// Two-sided Student-t tail probability P(|T| >= |t|) with `df` degrees of
/// freedom.
template <typename Scalar>
Scalar t_sf(Scalar t, Scalar df) {
  using std::isinf;
  if (isinf(t)) return Scalar(0);
  const Scalar x = df / (df + t * t);
  return regularized_incomplete_beta(df / Scalar(2), Scalar(0.5), x);
}

}  // namespace respeak
