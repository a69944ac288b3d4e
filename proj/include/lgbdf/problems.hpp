#pragma once

#include "lgbdf/scheme.hpp"

namespace lgbdf {

// Transport benchmark with a known analytic solution on a box domain.
struct ManufacturedProblem {
    Vec2 lo, hi;
    double T = 0.0;
    double mu = 0.0;
    double a0 = 0.0;
    VelocityField velocity;
    SpaceTimeFn exact;   // c(x, t)
    SpaceTimeFn source;  // empty means 0

    TransportProblem transport(double t0 = 0.0) const;
};

// Traveling-peak benchmark on (-1,1)^2, T = 0.5:
// u = (1 + sin(t - x1), 1 + sin(t - x2)), c = exp(-(2 - cos(t-x1) - cos(t-x2))/mu),
// zero source, homogeneous natural boundary condition, a0 = 0.
ManufacturedProblem rui_tabata_problem(double mu = 0.01);

}  // namespace lgbdf
