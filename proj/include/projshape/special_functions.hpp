#pragma once

namespace projshape {

/// log I0(kappa), modified Bessel function of the first kind, order zero.
/// Ascending series for kappa <= 15, asymptotic expansion beyond; the two
/// branches agree to ~1e-13 at the seam.
double log_bessel_i0(double kappa);

/// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// Regularized incomplete beta I_x(a, b).
double regularized_beta(double x, double a, double b);

/// Upper tail P(X > x) for X ~ chi-squared with df degrees of freedom.
double chi_squared_tail(double x, double df);

/// Upper tail P(F > f) for F ~ F(d1, d2).
double f_tail(double f, double d1, double d2);

}  // namespace projshape
