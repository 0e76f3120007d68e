#pragma once

namespace shockmetrics {

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
// Series expansion for x < a + 1, Lentz continued fraction otherwise.
// Absolute error below 1e-12 for a <= 500, x <= 1e4; stays well conditioned
// far beyond that range (both branches work in log space).
// Throws std::domain_error for a <= 0 or x < 0.
double reg_lower_inc_gamma(double a, double x);

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed on the
// branch that is accurate near zero (continued fraction for large x).
double reg_upper_inc_gamma(double a, double x);

// log Q(a, x), usable when Q underflows (survival exponents in the
// NHPP bound need log survival directly).
double log_reg_upper_inc_gamma(double a, double x);

}  // namespace shockmetrics
