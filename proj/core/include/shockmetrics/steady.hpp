#pragma once

#include <vector>

#include "shockmetrics/model.hpp"

namespace shockmetrics {

struct SteadyStateResult {
    std::vector<double> p;        // per-node steady-state compromise probability
    std::vector<double> p_lower;  // closed-form lower bound (when computed)
    std::vector<double> p_upper;  // tighter of the two upper bounds (when computed)
    bool converged = false;
    int iterations = 0;
    double residual = 0.0;              // max_v |Phi(p)_v - p_v| at the reported p
    std::vector<double> bracket_lo;     // ascending-iteration limit (from p = 0)
    std::vector<double> bracket_hi;     // descending-iteration limit (from p = 1)
    bool bounds_unverified = false;     // preconditions (A4 / NBUE) failed
};

struct SteadyStateBounds {
    std::vector<double> lower;           // pull-only renewal-reward bound
    std::vector<double> upper;           // min(nbue closed form, integral form)
    std::vector<double> upper_nbue;      // harmonic closed form at env = degree
    std::vector<double> upper_integral;  // renewal-reward at env = degree
    bool a4_ok = true;
    bool nbue_ok = true;
};

// E[T_v] under the mean-field substitution: push environment is the
// real-valued sum of in-neighbor compromise probabilities, pull environment is
// the sustainment mean.
double mean_field_expected_ttc(const AttackDefenseModel& m, int v,
                               const std::vector<double>& p);

// Solves p_v = E[R_v] / (E[R_v] + E[T_v](p)) by monotone iteration from both
// endpoints (0 and 1).  The map is componentwise monotone, so the two runs
// bracket every fixed point; they agree => unique fixed point (converged),
// else both limits are reported as a bracket.  threads caps the per-iteration
// node parallelism (0 = environment default).
SteadyStateResult solve_steady_state(const AttackDefenseModel& m, int threads = 0);

SteadyStateBounds steady_state_bounds(const AttackDefenseModel& m);

// The scalar regular-graph family used throughout: Weibull magnitudes with
// scale proportional to the environment, Gamma inter-arrivals with rate
// proportional to the environment, pull sustainment frozen at theta.
struct RegularGraphParams {
    double alpha = 2.0;          // push magnitude shape
    double beta = 3.5;           // push inter-arrival shape
    double gamma = 1.0;          // pull magnitude shape
    double lambda = 1.5;         // pull inter-arrival shape
    double theta = 4.0;          // sustainment level
    double recovery_mean = 4.0;  // E[R]
    double c1 = 2.0;
    double c2 = 2.0;
};

struct RegularCell {
    double p = 0.0;        // fixed point of the scalar mean-field equation
    double p_lower = 0.0;
    double p_upper = 0.0;
};

// Scalar fixed point on a k-regular graph: every node carries probability p,
// the push environment is k*p, and the fixed point is found by bisection on
// [p_lower, p_upper].  Throws bracket_error when the residual does not change
// sign across the bracket.
RegularCell regular_graph_steady_state(int k, const RegularGraphParams& params);

}  // namespace shockmetrics
