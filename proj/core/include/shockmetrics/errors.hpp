#pragma once

#include <stdexcept>
#include <string>

namespace shockmetrics {

// File or stream level failure (missing file, unreadable, write failure).
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structural failure while reading a config or graph file; message carries
// the offending line or field.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A model or argument invariant does not hold; message names the invariant.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative computation stopped before reaching its tolerance.  The
// partial value and the error estimate at the point of giving up are kept
// so callers can decide whether the result is still usable.
class non_convergence : public std::runtime_error {
public:
    non_convergence(const std::string& what, double partial, double estimate)
        : std::runtime_error(what), partial_value(partial), error_estimate(estimate) {}
    double partial_value;
    double error_estimate;
};

// Simulation safety valve: a replication generated the maximum number of
// arrivals without a compromise, or no active stream can ever succeed.
class cap_hit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The scalar fixed-point bracket [p_lower, p_upper] does not enclose a sign
// change; both residuals are reported raw.
class bracket_error : public std::runtime_error {
public:
    bracket_error(const std::string& what, double lo, double hi)
        : std::runtime_error(what), residual_lower(lo), residual_upper(hi) {}
    double residual_lower;
    double residual_upper;
};

// Analytic counting-process machinery asked to handle an inter-arrival
// family without a convolution-power form.
class unsupported_family : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace shockmetrics
