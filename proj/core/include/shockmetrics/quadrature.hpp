#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace shockmetrics {

// Integral of f over the finite interval [a, b] by adaptive bisection.
// Each panel is evaluated with a 15-point Gauss-Legendre rule; the
// difference against the embedded 7-point rule drives refinement.
// Throws non_convergence (carrying the partial value and the estimate)
// if the panel budget runs out before abs_tol is met.
double integrate_finite(const std::function<double(double)>& f, double a, double b,
                        double abs_tol);

// Integral of a survival-type integrand over [0, infinity):
// substitutes t = u/(1-u) onto [0, 1) and integrates adaptively to abs_tol
// (default 1e-8).  The upper limit is cut where f drops below 1e-13, found
// by doubling; a geometric tail bound for the discarded mass is added to
// the error estimate.  f is expected to decay to 0 (monotonicity is the
// caller's contract and is not enforced).
// Throws non_convergence when the estimate cannot be brought under abs_tol
// or the integrand never decays.
double integrate_survival(const std::function<double(double)>& f, double abs_tol = 1e-8);

// Fixed-order Gauss-Legendre quadrature of f over [a, b] (order 64),
// used for the smooth environment-mixing integrals.
double gauss_legendre_64(const std::function<double(double)>& f, double a, double b);

// The same rule's abscissae and weights mapped to [a, b], for callers that
// evaluate the integrand at the nodes themselves.
std::vector<std::pair<double, double>> gauss_legendre_64_nodes(double a, double b);

}  // namespace shockmetrics
