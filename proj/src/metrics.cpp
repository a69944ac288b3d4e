#include "lgbdf/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "lgbdf/assembly.hpp"

namespace lgbdf {

double error_l2_final(const ScalarField& field, const ManufacturedProblem& problem, double t,
                      int quad_degree) {
    if (!problem.exact) throw std::invalid_argument("error_l2_final: analytic solution required");
    const SpaceTimeFn& c = problem.exact;
    const double num = integrate_with_field(field, quad_degree, [&](double v, Vec2 x) {
        const double d = v - c(x, t);
        return d * d;
    });
    const double den = integrate_with_field(field, quad_degree, [&](double, Vec2 x) {
        const double v = c(x, t);
        return v * v;
    });
    if (!(den > 0.0)) throw std::runtime_error("error_l2_final: zero-norm analytic solution");
    return std::sqrt(num / den);
}

double error_mass_final(const ScalarField& field, const ManufacturedProblem& problem, double t,
                        int quad_degree) {
    if (!problem.exact) throw std::invalid_argument("error_mass_final: analytic solution required");
    const SpaceTimeFn& c = problem.exact;
    const double num = integrate_with_field(
        field, quad_degree, [&](double v, Vec2 x) { return v - c(x, t); });
    const double den = integrate_with_field(
        field, quad_degree, [&](double, Vec2 x) { return c(x, t); });
    if (den == 0.0) throw std::runtime_error("error_mass_final: zero analytic mass");
    return std::abs(num) / std::abs(den);
}

void RTErrorTracker::observe(const ScalarField& field, double t) {
    const LagrangeSpace& space = *field.space;
    const ScalarField interp = interpolate(space, problem_.exact, t);
    ScalarField diff(space);
    for (int i = 0; i < space.ndof; ++i) diff.coeff[i] = field.coeff[i] - interp.coeff[i];

    const double diff_sq =
        integrate_with_field(diff, quad_degree_, [](double v, Vec2) { return v * v; });
    const double interp_sq =
        integrate_with_field(interp, quad_degree_, [](double v, Vec2) { return v * v; });
    max_diff_ = std::max(max_diff_, diff_sq);
    max_interp_ = std::max(max_interp_, interp_sq);
    last_diff_mass_ = integrate_field(space, diff, quad_degree_);
    last_interp_mass_ = integrate_field(space, interp, quad_degree_);
    ++levels_;
}

double RTErrorTracker::eh_l2() const {
    if (levels_ == 0) throw std::runtime_error("RTErrorTracker: no levels observed");
    if (!(max_interp_ > 0.0)) throw std::runtime_error("RTErrorTracker: zero interpolant norm");
    return std::sqrt(max_diff_) / std::sqrt(max_interp_);
}

double RTErrorTracker::eh_m() const {
    if (levels_ == 0) throw std::runtime_error("RTErrorTracker: no levels observed");
    if (last_interp_mass_ == 0.0) throw std::runtime_error("RTErrorTracker: zero interpolant mass");
    return std::abs(last_diff_mass_) / std::abs(last_interp_mass_);
}

std::pair<double, double> relative_errors_rt(const RunTrajectory& trajectory,
                                             const ManufacturedProblem& problem, int quad_degree) {
    if (trajectory.fields.empty() || trajectory.fields.size() != trajectory.times.size())
        throw std::invalid_argument("relative_errors_rt: empty or inconsistent trajectory");
    RTErrorTracker tracker(problem, quad_degree);
    for (std::size_t i = 0; i < trajectory.fields.size(); ++i)
        tracker.observe(trajectory.fields[i], trajectory.times[i]);
    return {tracker.eh_l2(), tracker.eh_m()};
}

}  // namespace lgbdf
