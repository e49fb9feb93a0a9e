#include "projshape/special_functions.hpp"

#include <cmath>
#include <limits>

#include "projshape/errors.hpp"

namespace projshape {

namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;

// Lentz continued fraction for the upper incomplete gamma Q(a, x), x > a + 1.
double gamma_q_continued_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

// Ascending series for the lower incomplete gamma P(a, x), x <= a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for the incomplete beta function.
double beta_continued_fraction(double x, double a, double b) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double log_bessel_i0(double kappa) {
  const double x = std::abs(kappa);
  if (x <= 15.0) {
    // sum_k (x^2/4)^k / (k!)^2
    const double y = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
      term *= y / (static_cast<double>(k) * k);
      sum += term;
      if (term < sum * kEps) break;
    }
    return std::log(sum);
  }
  // I0(x) ~ e^x / sqrt(2 pi x) * sum_k ((2k-1)!!)^2 / (k! (8x)^k); all terms
  // positive, truncated at the smallest term.
  double term = 1.0;
  double sum = 1.0;
  double prev = std::numeric_limits<double>::max();
  for (int k = 1; k < 64; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= odd * odd / (8.0 * x * k);
    if (term >= prev) break;  // asymptotic series started diverging
    sum += term;
    prev = term;
    if (term < sum * kEps) break;
  }
  return x - 0.5 * std::log(2.0 * M_PI * x) + std::log(sum);
}

double regularized_gamma_p(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw ArgumentError("regularized_gamma_p: require a > 0, x >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_continued_fraction(a, x);
}

double regularized_gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw ArgumentError("regularized_gamma_q: require a > 0, x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_continued_fraction(a, x);
}

double regularized_beta(double x, double a, double b) {
  if (a <= 0.0 || b <= 0.0) throw ArgumentError("regularized_beta: require a, b > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front =
      std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  if (x < (a + 1.0) / (a + b + 2.0))
    return std::exp(ln_front) * beta_continued_fraction(x, a, b) / a;
  return 1.0 - std::exp(ln_front) * beta_continued_fraction(1.0 - x, b, a) / b;
}

double chi_squared_tail(double x, double df) {
  if (df <= 0.0) throw ArgumentError("chi_squared_tail: require df > 0");
  if (x <= 0.0) return 1.0;
  return regularized_gamma_q(0.5 * df, 0.5 * x);
}

double f_tail(double f, double d1, double d2) {
  if (d1 <= 0.0 || d2 <= 0.0) throw ArgumentError("f_tail: require positive degrees of freedom");
  if (f <= 0.0) return 1.0;
  return regularized_beta(d2 / (d2 + d1 * f), 0.5 * d2, 0.5 * d1);
}

}  // namespace projshape
