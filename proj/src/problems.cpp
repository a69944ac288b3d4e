#include "lgbdf/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace lgbdf {

TransportProblem ManufacturedProblem::transport(double t0) const {
    TransportProblem tp;
    tp.velocity = velocity;
    tp.exact = exact;
    tp.source = source;
    tp.t0 = t0;
    if (exact) {
        const SpaceTimeFn c = exact;
        tp.initial = [c, t0](Vec2 x) { return c(x, t0); };
    }
    return tp;
}

ManufacturedProblem rui_tabata_problem(double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("rui_tabata_problem: mu must be positive");
    ManufacturedProblem p;
    p.lo = {-1.0, -1.0};
    p.hi = {1.0, 1.0};
    p.T = 0.5;
    p.mu = mu;
    p.a0 = 0.0;
    p.velocity.value = [](Vec2 x, double t) {
        return Vec2{1.0 + std::sin(t - x.x), 1.0 + std::sin(t - x.y)};
    };
    p.velocity.divergence = [](Vec2 x, double t) {
        return -std::cos(t - x.x) - std::cos(t - x.y);
    };
    p.velocity.div_bound = 2.0;
    p.exact = [mu](Vec2 x, double t) {
        return std::exp(-(2.0 - std::cos(t - x.x) - std::cos(t - x.y)) / mu);
    };
    return p;
}

}  // namespace lgbdf
