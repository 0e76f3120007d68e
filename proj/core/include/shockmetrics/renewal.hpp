#pragma once

#include "shockmetrics/dist.hpp"

namespace shockmetrics {

// Renewal counting process N(t) with i.i.d. inter-arrival law.  Analytic count
// probabilities exist for Gamma / Exponential / Dirac / Empty inter-arrivals
// (m-fold convolution of Gamma(k, rho) is Gamma(m*k, rho)); other families
// must go through the simulator and raise unsupported_family here.
struct CountingProcess {
    DistributionSpec interarrival;
    double truncation_tol = 1e-12;
};

// P(N(t) = m) = G^{*m}(t) - G^{*(m+1)}(t) with G^{*0} == 1.
double count_pmf(const CountingProcess& cp, int m, double t);

// E[s^{N(t)}] for 0 <= s <= 1.  The series over m is reorganized by summation
// by parts into 1 - ((1-s)/s) * sum_{m>=1} s^m G^{*m}(t) and evaluated in
// three regimes: a closed geometric head where G^{*m}(t) is 1 to machine
// precision, an explicit central window around m*shape ~ rho*t, and a
// second-order cumulant approximation when the expected count is so large
// (> 2e7) that the window itself is the bottleneck.  Truncation error is kept
// below truncation_tol.
double count_pgf(const CountingProcess& cp, double s, double t);

// [survival_interarrival(t)]^(1-s): the pgf of the non-homogeneous Poisson
// process that dominates N(t) when the inter-arrival law is NBU.  Guaranteed
// <= count_pgf under the NBU property (caller validates via check_nbu);
// without NBU the bound is silently void.
double nbu_pgf_lower_bound(const CountingProcess& cp, double s, double t);

}  // namespace shockmetrics
