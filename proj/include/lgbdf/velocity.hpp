#pragma once

#include <functional>

#include "lgbdf/geometry.hpp"

namespace lgbdf {

// Analytic flow field.  The divergence callback is required by the
// conservative transport variant and by convection assembly; div_bound is an
// optional sup-norm bound on the divergence used for Jacobian sanity checks
// (0 means unknown).
struct VelocityField {
    std::function<Vec2(Vec2, double)> value;
    std::function<double(Vec2, double)> divergence;
    double div_bound = 0.0;
};

inline VelocityField zero_velocity() {
    return {[](Vec2, double) { return Vec2{0.0, 0.0}; },
            [](Vec2, double) { return 0.0; },
            0.0};
}

}  // namespace lgbdf
