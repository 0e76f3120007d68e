#pragma once

#include "shockmetrics/steady.hpp"

namespace shockmetrics {

// Published reference values for the homogeneous k-regular benchmark
// (RegularGraphParams defaults, thresholds c1 = c2 = c): steady-state
// compromise probability p alongside its closed-form lower and upper bounds,
// rounded to two decimals.  The `reproduce` tool diffs fresh computations
// against these cells; the acceptance suite requires bound agreement to
// within the rounding (0.01) and fixed-point agreement to 0.02.
struct ReferenceCell {
    double c;
    int k;
    double p;
    double p_lower;
    double p_upper;
};

inline constexpr ReferenceCell kRegularReferenceCells[] = {
    {2.0, 5, 0.90, 0.87, 0.92},
    {2.0, 8, 0.92, 0.87, 0.94},
    {2.0, 10, 0.93, 0.87, 0.95},
    {2.0, 12, 0.94, 0.87, 0.95},
    {2.0, 15, 0.95, 0.87, 0.96},
    {2.0, 20, 0.96, 0.87, 0.97},
    {2.0, 25, 0.97, 0.87, 0.97},
    {2.0, 30, 0.97, 0.87, 0.98},
    {2.5, 5, 0.89, 0.85, 0.91},
    {2.5, 8, 0.92, 0.85, 0.93},
    {2.5, 10, 0.93, 0.85, 0.94},
    {2.5, 12, 0.94, 0.85, 0.95},
    {2.5, 15, 0.95, 0.85, 0.96},
    {2.5, 20, 0.96, 0.85, 0.97},
    {2.5, 25, 0.97, 0.85, 0.97},
    {2.5, 30, 0.97, 0.85, 0.98},
    {3.0, 5, 0.88, 0.83, 0.90},
    {3.0, 8, 0.91, 0.83, 0.93},
    {3.0, 10, 0.93, 0.83, 0.94},
    {3.0, 12, 0.94, 0.83, 0.95},
    {3.0, 15, 0.95, 0.83, 0.96},
    {3.0, 20, 0.96, 0.83, 0.96},
    {3.0, 25, 0.97, 0.83, 0.97},
    {3.0, 30, 0.97, 0.83, 0.97},
    {3.5, 5, 0.86, 0.82, 0.89},
    {3.5, 8, 0.90, 0.81, 0.92},
    {3.5, 10, 0.92, 0.82, 0.94},
    {3.5, 12, 0.93, 0.82, 0.94},
    {3.5, 15, 0.95, 0.82, 0.95},
    {3.5, 20, 0.96, 0.81, 0.96},
    {3.5, 25, 0.97, 0.82, 0.97},
    {3.5, 30, 0.97, 0.82, 0.97},
    {4.0, 5, 0.84, 0.80, 0.87},
    {4.0, 8, 0.90, 0.80, 0.92},
    {4.0, 10, 0.92, 0.80, 0.93},
    {4.0, 12, 0.93, 0.80, 0.94},
    {4.0, 15, 0.94, 0.80, 0.95},
    {4.0, 20, 0.96, 0.80, 0.96},
    {4.0, 25, 0.97, 0.80, 0.97},
    {4.0, 30, 0.97, 0.80, 0.97},
    {5.0, 5, 0.79, 0.75, 0.84},
    {5.0, 8, 0.88, 0.75, 0.90},
    {5.0, 10, 0.91, 0.75, 0.92},
    {5.0, 12, 0.92, 0.75, 0.94},
    {5.0, 15, 0.94, 0.75, 0.95},
    {5.0, 20, 0.96, 0.75, 0.96},
    {5.0, 25, 0.97, 0.75, 0.97},
    {5.0, 30, 0.97, 0.75, 0.97},
    {6.0, 5, 0.72, 0.70, 0.79},
    {6.0, 8, 0.84, 0.70, 0.88},
    {6.0, 10, 0.89, 0.70, 0.91},
    {6.0, 12, 0.91, 0.70, 0.93},
    {6.0, 15, 0.94, 0.70, 0.94},
    {6.0, 20, 0.95, 0.70, 0.96},
    {6.0, 25, 0.96, 0.70, 0.97},
    {6.0, 30, 0.97, 0.70, 0.97},
    {7.0, 5, 0.65, 0.65, 0.73},
    {7.0, 8, 0.79, 0.65, 0.86},
    {7.0, 10, 0.87, 0.65, 0.90},
    {7.0, 12, 0.90, 0.65, 0.92},
    {7.0, 15, 0.93, 0.65, 0.94},
    {7.0, 20, 0.95, 0.65, 0.96},
    {7.0, 25, 0.96, 0.65, 0.97},
    {7.0, 30, 0.97, 0.65, 0.97},
    {8.0, 5, 0.59, 0.59, 0.65},
    {8.0, 8, 0.67, 0.59, 0.83},
    {8.0, 10, 0.83, 0.59, 0.88},
    {8.0, 12, 0.89, 0.59, 0.91},
    {8.0, 15, 0.92, 0.59, 0.93},
    {8.0, 20, 0.95, 0.59, 0.95},
    {8.0, 25, 0.96, 0.59, 0.96},
    {8.0, 30, 0.97, 0.59, 0.97},
    {9.0, 5, 0.53, 0.53, 0.57},
    {9.0, 8, 0.54, 0.53, 0.79},
    {9.0, 10, 0.75, 0.52, 0.86},
    {9.0, 12, 0.87, 0.53, 0.90},
    {9.0, 15, 0.92, 0.53, 0.93},
    {9.0, 20, 0.95, 0.53, 0.95},
    {9.0, 25, 0.96, 0.52, 0.96},
    {9.0, 30, 0.97, 0.53, 0.97},
};

inline constexpr int kRegularReferenceCellCount = 80;

}  // namespace shockmetrics
