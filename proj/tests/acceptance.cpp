// Verification gates for the transport solver. Each invocation checks one
// numbered criterion and prints a single [PASS]/[FAIL] line plus the measured
// numbers behind it; the exit code is nonzero when the gate fails.
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "lgbdf/basis.hpp"
#include "lgbdf/characteristics.hpp"
#include "lgbdf/mesh.hpp"
#include "lgbdf/metrics.hpp"
#include "lgbdf/parallel.hpp"
#include "lgbdf/problems.hpp"
#include "lgbdf/quadrature.hpp"
#include "lgbdf/scheme.hpp"
#include "lgbdf/space.hpp"

using lgbdf::Vec2;

namespace {

std::string format(const char* f, ...) {
    char buf[1024];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

bool verdict(int criterion, bool pass, const std::string& summary) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, summary.c_str());
    return pass;
}

// ---------------------------------------------------------------- criterion 1

bool criterion1() {
    double worst_sum = 0.0, worst_exact = 0.0;
    for (int q = 1; q <= 5; ++q) {
        const lgbdf::BdfCoefficients bdf = lgbdf::bdf_coefficients(q);
        double sum = 0.0;
        for (int i = 0; i <= q; ++i) sum += bdf.alpha[i];
        worst_sum = std::max(worst_sum, std::abs(sum));
        const double t = 0.83, dt = 0.07;
        for (int deg = 0; deg <= q; ++deg) {
            double lhs = 0.0;
            for (int i = 0; i <= q; ++i) lhs += bdf.alpha[i] * std::pow(t - i * dt, deg);
            const double rhs = dt * (deg == 0 ? 0.0 : deg * std::pow(t, deg - 1));
            worst_exact = std::max(worst_exact, std::abs(lhs - rhs));
        }
    }
    const lgbdf::BdfCoefficients b1 = lgbdf::bdf_coefficients(1);
    const lgbdf::BdfCoefficients b2 = lgbdf::bdf_coefficients(2);
    const bool tables = b1.alpha[0] == 1.0 && b1.alpha[1] == -1.0 && b2.alpha[0] == 1.5 &&
                        b2.alpha[1] == -2.0 && b2.alpha[2] == 0.5;
    const bool pass = worst_sum <= 1e-11 && worst_exact <= 1e-11 && tables;
    return verdict(1, pass,
                   format("coefficient sums <= %.2e, derivative exactness <= %.2e (gate 1e-11), "
                          "one/two-step tables %s",
                          worst_sum, worst_exact, tables ? "exact" : "WRONG"));
}

// ---------------------------------------------------------------- criterion 2

// Dense Cholesky used by the independent reference path below.
struct DenseSpd {
    int n = 0;
    std::vector<double> chol;  // lower factor, row-major

    void factor(std::vector<double> a) {
        chol = std::move(a);
        for (int j = 0; j < n; ++j) {
            double d = chol[j * n + j];
            for (int s = 0; s < j; ++s) d -= chol[j * n + s] * chol[j * n + s];
            d = std::sqrt(d);
            chol[j * n + j] = d;
            for (int i = j + 1; i < n; ++i) {
                double v = chol[i * n + j];
                for (int s = 0; s < j; ++s) v -= chol[i * n + s] * chol[j * n + s];
                chol[i * n + j] = v / d;
            }
        }
    }

    std::vector<double> solve(std::vector<double> b) const {
        for (int i = 0; i < n; ++i) {
            double v = b[i];
            for (int s = 0; s < i; ++s) v -= chol[i * n + s] * b[s];
            b[i] = v / chol[i * n + i];
        }
        for (int i = n - 1; i >= 0; --i) {
            double v = b[i];
            for (int s = i + 1; s < n; ++s) v -= chol[s * n + i] * b[s];
            b[i] = v / chol[i * n + i];
        }
        return b;
    }
};

bool criterion2() {
    const int n = 16, nsteps = 20;
    const double dt = 0.01, mu = 0.01;
    lgbdf::ManufacturedProblem rt = lgbdf::rui_tabata_problem(mu);
    lgbdf::Mesh mesh = lgbdf::build_uniform_square_mesh(rt.lo, rt.hi, n);
    lgbdf::LagrangeSpace space = lgbdf::build_space(mesh, 1);

    // frozen velocity: the scheme must reduce to plain backward-Euler heat
    lgbdf::TransportProblem problem;
    problem.velocity = lgbdf::zero_velocity();
    problem.initial = [&rt](Vec2 x) { return rt.exact(x, 0.0); };

    lgbdf::SchemeConfig config;
    config.q = 1;
    config.dt = dt;
    config.mu = mu;
    config.a0 = 0.0;
    config.solver.rel_tol = 1e-14;

    std::vector<std::vector<double>> levels;
    lgbdf::run(space, problem, config, nsteps * dt,
               [&](const lgbdf::LevelRecord&, const lgbdf::ScalarField& f) {
                   levels.push_back(f.coeff);
               });
    if (static_cast<int>(levels.size()) != nsteps + 1)
        return verdict(2, false, format("expected %d levels, recorded %zu", nsteps + 1, levels.size()));

    // independently coded piecewise-linear heat step: closed-form element
    // matrices on the same triangulation, dense Cholesky instead of CG
    const int nd = space.ndof;
    std::vector<double> mass(static_cast<std::size_t>(nd) * nd, 0.0);
    std::vector<double> stiff(static_cast<std::size_t>(nd) * nd, 0.0);
    for (int l = 0; l < mesh.num_elements(); ++l) {
        const Vec2 p0 = mesh.vertices[mesh.elements[l][0]];
        const Vec2 p1 = mesh.vertices[mesh.elements[l][1]];
        const Vec2 p2 = mesh.vertices[mesh.elements[l][2]];
        const double det = (p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y);
        const double area = std::abs(det) / 2.0;
        const Vec2 b[3] = {{p1.y - p2.y, p2.x - p1.x},
                           {p2.y - p0.y, p0.x - p2.x},
                           {p0.y - p1.y, p1.x - p0.x}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const std::size_t at =
                    static_cast<std::size_t>(space.dof(l, i)) * nd + space.dof(l, j);
                stiff[at] += (b[i].x * b[j].x + b[i].y * b[j].y) / (4.0 * area);
                mass[at] += area / 12.0 * (i == j ? 2.0 : 1.0);
            }
    }
    DenseSpd be;
    be.n = nd;
    {
        std::vector<double> s(mass.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = mass[i] + dt * mu * stiff[i];
        be.factor(std::move(s));
    }

    std::vector<double> c(nd);
    for (int i = 0; i < nd; ++i) c[i] = problem.initial(space.dof_coords[i]);

    double worst = 0.0;
    for (int i = 0; i < nd; ++i) worst = std::max(worst, std::abs(levels[0][i] - c[i]));
    for (int s = 1; s <= nsteps; ++s) {
        std::vector<double> rhs(nd, 0.0);
        for (int i = 0; i < nd; ++i) {
            double v = 0.0;
            for (int j = 0; j < nd; ++j) v += mass[static_cast<std::size_t>(i) * nd + j] * c[j];
            rhs[i] = v;
        }
        c = be.solve(std::move(rhs));
        for (int i = 0; i < nd; ++i) worst = std::max(worst, std::abs(levels[s][i] - c[i]));
    }
    const bool pass = worst <= 1e-12;
    return verdict(2, pass,
                   format("frozen-velocity trajectory vs independent heat solve: "
                          "max per-step linf difference %.3e over %d steps (gate 1e-12)",
                          worst, nsteps));
}

// ---------------------------------------------------------------- criterion 3

bool criterion3() {
    lgbdf::Mesh mesh = lgbdf::build_uniform_square_mesh({-1.0, -1.0}, {1.0, 1.0}, 16);
    lgbdf::LagrangeSpace space = lgbdf::build_space(mesh, 2);
    const lgbdf::QuadratureRule& quad = lgbdf::simplex_quadrature(6);
    const int tqp = 3;
    const double dt = 0.05, t_base = 0.3;

    // solid rotation: divergence-free, factor must be exactly one
    lgbdf::VelocityField rotation;
    rotation.value = [](Vec2 x, double) { return Vec2{-x.y, x.x}; };
    rotation.divergence = [](Vec2, double) { return 0.0; };
    double worst_rot = 0.0;
    {
        const int q = 2;
        lgbdf::NodeTrajectories traj = lgbdf::trace_nodes(
            space, t_base, lgbdf::step_level_times(t_base, dt, q, tqp), dt, rotation, {});
        for (int l = 0; l < mesh.num_elements(); ++l)
            for (int g = 0; g < quad.size(); ++g)
                for (int i = 1; i <= q; ++i) {
                    const double j =
                        lgbdf::jacobian_tilde(space, traj, rotation, l, quad.points[g], i, tqp);
                    worst_rot = std::max(worst_rot, std::abs(j - 1.0));
                }
    }

    // uniform expansion: constant divergence two, factor has a closed form
    lgbdf::VelocityField radial;
    radial.value = [](Vec2 x, double) { return Vec2{x.x, x.y}; };
    radial.divergence = [](Vec2, double) { return 2.0; };
    double worst_radial = 0.0, sample_two = 0.0;
    {
        const int q = 2;
        lgbdf::NodeTrajectories traj = lgbdf::trace_nodes(
            space, t_base, lgbdf::step_level_times(t_base, dt, q, tqp), dt, radial, {});
        for (int l = 0; l < mesh.num_elements(); ++l)
            for (int g = 0; g < quad.size(); ++g)
                for (int i = 1; i <= q; ++i) {
                    const double j =
                        lgbdf::jacobian_tilde(space, traj, radial, l, quad.points[g], i, tqp);
                    worst_radial = std::max(worst_radial, std::abs(j - std::exp(-2.0 * i * dt)));
                    if (i == 2) sample_two = j;
                }
    }
    const double frozen = 0.818730753077981858;  // exp(-0.2) to 18 digits
    const double frozen_diff = std::abs(sample_two - frozen);

    // benchmark field: divergence between -2 and 2, factor inside the envelope
    lgbdf::ManufacturedProblem rt = lgbdf::rui_tabata_problem();
    bool bounds_ok = true;
    double worst_margin = 1.0;
    {
        const int q = 3;
        lgbdf::NodeTrajectories traj = lgbdf::trace_nodes(
            space, t_base, lgbdf::step_level_times(t_base, dt, q, tqp), dt, rt.velocity, {});
        for (int l = 0; l < mesh.num_elements(); ++l)
            for (int g = 0; g < quad.size(); ++g)
                for (int i = 1; i <= q; ++i) {
                    const double j =
                        lgbdf::jacobian_tilde(space, traj, rt.velocity, l, quad.points[g], i, tqp);
                    const double lo = std::exp(-2.0 * i * dt), hi = std::exp(2.0 * i * dt);
                    if (j < lo - 1e-12 || j > hi + 1e-12) bounds_ok = false;
                    worst_margin = std::min(worst_margin, std::min(j - lo, hi - j));
                }
    }

    const bool pass =
        worst_rot <= 1e-12 && worst_radial <= 1e-10 && frozen_diff <= 1e-10 && bounds_ok;
    std::printf("  divergence-free |J-1| <= %.3e (gate 1e-12)\n", worst_rot);
    std::printf("  constant-divergence |J-closed form| <= %.3e, frozen-value diff %.3e (gate 1e-10)\n",
                worst_radial, frozen_diff);
    std::printf("  benchmark-field envelope %s (worst margin %.3e)\n",
                bounds_ok ? "holds" : "VIOLATED", worst_margin);
    return verdict(3, pass, format("flow-volume factor identities: rotation %.2e, expansion %.2e, "
                                   "envelope %s",
                                   worst_rot, worst_radial, bounds_ok ? "ok" : "violated"));
}

// ------------------------------------------------------- shared run machinery

struct DriveResult {
    std::vector<double> coeff;   // final-level coefficients
    std::vector<double> masses;  // one entry per recorded level
    double e_l2 = 0.0;
    double e_m = 0.0;
    double eh_l2 = 0.0;
    double eh_m = 0.0;
};

DriveResult drive_case(int n, int k, int q, double dt, lgbdf::Variant variant, double T = 0.5) {
    lgbdf::ManufacturedProblem problem = lgbdf::rui_tabata_problem();
    lgbdf::Mesh mesh = lgbdf::build_uniform_square_mesh(problem.lo, problem.hi, n);
    lgbdf::LagrangeSpace space = lgbdf::build_space(mesh, k);

    lgbdf::SchemeConfig config;
    config.q = q;
    config.dt = dt;
    config.mu = problem.mu;
    config.a0 = problem.a0;
    config.variant = variant;
    config.startup_mode = lgbdf::StartupMode::exact;
    config.solver.rel_tol = 1e-12;

    const int qd = config.effective_quad_degree(k);
    lgbdf::RTErrorTracker tracker(problem, qd);
    DriveResult out;
    const lgbdf::RunResult result =
        lgbdf::run(space, problem.transport(), config, T,
                   [&](const lgbdf::LevelRecord& rec, const lgbdf::ScalarField& field) {
                       tracker.observe(field, rec.t);
                       out.masses.push_back(rec.mass);
                   });
    const double t_final = result.levels.back().t;
    out.e_l2 = lgbdf::error_l2_final(result.final_field, problem, t_final, qd);
    out.e_m = lgbdf::error_mass_final(result.final_field, problem, t_final, qd);
    out.eh_l2 = tracker.eh_l2();
    out.eh_m = tracker.eh_m();
    out.coeff = result.final_field.coeff;
    return out;
}

// ---------------------------------------------------------------- criterion 4

bool criterion4() {
    const double dts[3] = {0.05, 0.025, 0.0125};
    bool pass = true;
    double overall[4] = {0, 0, 0, 0};
    for (int q = 1; q <= 3; ++q) {
        double e[3];
        for (int j = 0; j < 3; ++j) e[j] = drive_case(32, 4, q, dts[j], lgbdf::Variant::conservative).e_l2;
        const double pair01 = std::log2(e[0] / e[1]);
        const double pair12 = std::log2(e[1] / e[2]);
        overall[q] = std::log2(e[0] / e[2]) / 2.0;
        const bool ok = std::abs(overall[q] - q) <= 0.35;
        pass = pass && ok;
        std::printf("  q=%d: e_L2 %.6e / %.6e / %.6e, pair orders %.3f %.3f, overall %.3f "
                    "(window %d +- 0.35) %s\n",
                    q, e[0], e[1], e[2], pair01, pair12, overall[q], q, ok ? "ok" : "OUT");
    }
    return verdict(4, pass,
                   format("time-refinement orders at fixed spatial resolution: "
                          "q=1 %.2f, q=2 %.2f, q=3 %.2f (each within q +- 0.35)",
                          overall[1], overall[2], overall[3]));
}

// ---------------------------------------------------------------- criterion 5

bool criterion5() {
    const int ns[3] = {8, 16, 32};
    double e[3];
    for (int j = 0; j < 3; ++j) e[j] = drive_case(ns[j], 2, 4, 0.01, lgbdf::Variant::conservative).e_l2;
    const double o01 = std::log2(e[0] / e[1]);
    const double o12 = std::log2(e[1] / e[2]);
    const bool pass = o01 >= 2.0 && o12 >= 2.0;
    std::printf("  e_L2 %.6e / %.6e / %.6e over mesh halvings\n", e[0], e[1], e[2]);
    return verdict(5, pass,
                   format("mesh-refinement orders %.2f and %.2f (gate: each >= 2.0)", o01, o12));
}

// ---------------------------------------------------------------- criterion 6

bool criterion6() {
    const DriveResult cons = drive_case(32, 3, 3, 0.01, lgbdf::Variant::conservative);
    const DriveResult nonc = drive_case(32, 3, 3, 0.01, lgbdf::Variant::nonconservative);
    const double ratio = nonc.e_m / cons.e_m;
    const bool pass = ratio >= 10.0;
    std::printf("  weighted-transport e_m %.6e, unit-weight e_m %.6e\n", cons.e_m, nonc.e_m);
    return verdict(6, pass, format("mass-error ratio %.3g (gate >= 10)", ratio));
}

// ---------------------------------------------------------------- criterion 7

bool criterion7() {
    const int ns[3] = {16, 32, 64};
    double e[3];
    for (int j = 0; j < 3; ++j)
        e[j] = drive_case(ns[j], 1, 1, 2.0 / ns[j], lgbdf::Variant::conservative).eh_l2;
    const bool monotone = e[0] > e[1] && e[1] > e[2];
    const double o01 = std::log2(e[0] / e[1]);
    const double o12 = std::log2(e[1] / e[2]);
    const bool in_window = std::abs(o01 - 1.0) <= 0.3 && std::abs(o12 - 1.0) <= 0.3;
    const bool pass = monotone && in_window;
    std::printf("  eh_L2 %.6e / %.6e / %.6e with the step tied to the mesh\n", e[0], e[1], e[2]);
    return verdict(7, pass,
                   format("run-wide error orders %.2f and %.2f (window 1 +- 0.3), %s",
                          o01, o12, monotone ? "monotone" : "NOT monotone"));
}

// ---------------------------------------------------------------- criterion 8

double binom(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

bool criterion8() {
    // monomial exactness of the area rules
    double worst_quad = 0.0;
    for (int deg = 1; deg <= 14; ++deg) {
        const lgbdf::QuadratureRule& rule = lgbdf::simplex_quadrature(deg);
        for (int a = 0; a + 0 <= deg; ++a)
            for (int b = 0; a + b <= deg; ++b) {
                double sum = 0.0;
                for (int g = 0; g < rule.size(); ++g)
                    sum += rule.weights[g] * std::pow(rule.points[g].x, a) *
                           std::pow(rule.points[g].y, b);
                const double exact = 1.0 / (binom(a + b, a) * (a + b + 1.0) * (a + b + 2.0));
                worst_quad = std::max(worst_quad, std::abs(sum - exact));
            }
    }

    // locate/map round-trips on a small mesh family
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    double worst_loc = 0.0;
    int failures = 0;
    const struct {
        int n;
        lgbdf::DiagonalSplit split;
    } meshes[] = {{7, lgbdf::DiagonalSplit::lower_left},
                  {12, lgbdf::DiagonalSplit::crisscross},
                  {16, lgbdf::DiagonalSplit::lower_left}};
    for (const auto& m : meshes) {
        const lgbdf::Mesh mesh =
            lgbdf::build_uniform_square_mesh({-1.0, -1.0}, {1.0, 1.0}, m.n, m.split);
        for (int trial = 0; trial < 1000; ++trial) {
            const Vec2 x{coord(rng), coord(rng)};
            const lgbdf::PointLocation loc = lgbdf::locate_point(mesh, x);
            if (loc.element < 0 || loc.clamped) {
                ++failures;
                continue;
            }
            const Vec2 y = lgbdf::map_to_physical(mesh, loc.element, loc.ref);
            const double err = std::hypot(y.x - x.x, y.y - x.y);
            worst_loc = std::max(worst_loc, err);
            const double bary0 = 1.0 - loc.ref.x - loc.ref.y;
            if (bary0 < -1e-9 || loc.ref.x < -1e-9 || loc.ref.y < -1e-9) ++failures;
        }
    }

    // partition of unity and nodal duality of the element bases
    double worst_unity = 0.0, worst_duality = 0.0;
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int k = 1; k <= 5; ++k) {
        double phi[lgbdf::max_local_nodes];
        for (int trial = 0; trial < 50; ++trial) {
            double r1 = u01(rng), r2 = u01(rng);
            if (r1 + r2 > 1.0) {
                r1 = 1.0 - r1;
                r2 = 1.0 - r2;
            }
            lgbdf::lagrange_basis(k, {r1, r2}, phi);
            double sum = 0.0;
            for (int j = 0; j < lgbdf::simplex_node_count(k); ++j) sum += phi[j];
            worst_unity = std::max(worst_unity, std::abs(sum - 1.0));
        }
        const std::vector<Vec2>& nodes = lgbdf::local_node_coords(k);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            lgbdf::lagrange_basis(k, nodes[i], phi);
            for (std::size_t j = 0; j < nodes.size(); ++j)
                worst_duality =
                    std::max(worst_duality, std::abs(phi[j] - (i == j ? 1.0 : 0.0)));
        }
    }

    const bool pass = worst_quad <= 1e-13 && failures == 0 && worst_loc <= 1e-10 &&
                      worst_unity <= 1e-13 && worst_duality <= 1e-12;
    std::printf("  monomial exactness through degree 14: worst %.3e (gate 1e-13)\n", worst_quad);
    std::printf("  locate/map round-trips: worst %.3e, misses %d (gates 1e-10, 0)\n", worst_loc,
                failures);
    std::printf("  partition of unity %.3e (gate 1e-13), nodal duality %.3e (gate 1e-12)\n",
                worst_unity, worst_duality);
    return verdict(8, pass,
                   format("geometry/quadrature/basis property suites: %.1e / %.1e / %.1e / %.1e",
                          worst_quad, worst_loc, worst_unity, worst_duality));
}

// ---------------------------------------------------------------- criterion 9

struct Workload {
    int n, k, q;
    double dt;
    lgbdf::Variant variant;
};

std::vector<Workload> determinism_workloads() {
    std::vector<Workload> loads;
    for (int q = 1; q <= 3; ++q)
        for (double dt : {0.05, 0.025, 0.0125})
            loads.push_back({32, 4, q, dt, lgbdf::Variant::conservative});
    for (int n : {8, 16, 32}) loads.push_back({n, 2, 4, 0.01, lgbdf::Variant::conservative});
    loads.push_back({32, 3, 3, 0.01, lgbdf::Variant::conservative});
    loads.push_back({32, 3, 3, 0.01, lgbdf::Variant::nonconservative});
    for (int n : {16, 32, 64}) loads.push_back({n, 1, 1, 2.0 / n, lgbdf::Variant::conservative});
    return loads;
}

bool criterion9() {
    const std::vector<Workload> loads = determinism_workloads();
    std::vector<DriveResult> base;
    lgbdf::set_num_threads(1);
    for (const Workload& w : loads) base.push_back(drive_case(w.n, w.k, w.q, w.dt, w.variant));

    lgbdf::set_num_threads(2);
    int mismatches = 0;
    for (std::size_t i = 0; i < loads.size(); ++i) {
        const Workload& w = loads[i];
        const DriveResult again = drive_case(w.n, w.k, w.q, w.dt, w.variant);
        const bool same =
            again.coeff.size() == base[i].coeff.size() &&
            again.masses.size() == base[i].masses.size() &&
            std::memcmp(again.coeff.data(), base[i].coeff.data(),
                        again.coeff.size() * sizeof(double)) == 0 &&
            std::memcmp(again.masses.data(), base[i].masses.data(),
                        again.masses.size() * sizeof(double)) == 0;
        if (!same) {
            ++mismatches;
            std::printf("  MISMATCH at N=%d k=%d q=%d dt=%g variant=%d\n", w.n, w.k, w.q, w.dt,
                        static_cast<int>(w.variant));
        }
    }
    const bool pass = mismatches == 0;
    return verdict(9, pass,
                   format("%zu runs compared bitwise across 1 and 2 worker threads, "
                          "%d mismatches",
                          loads.size(), mismatches));
}

}  // namespace

int main(int argc, char** argv) {
    int criterion = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            criterion = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: acceptance --criterion <1..9>\n");
            return 2;
        }
    }
    if (criterion < 1 || criterion > 9) {
        std::fprintf(stderr, "usage: acceptance --criterion <1..9>\n");
        return 2;
    }
    lgbdf::set_num_threads(1);
    try {
        bool pass = false;
        switch (criterion) {
            case 1: pass = criterion1(); break;
            case 2: pass = criterion2(); break;
            case 3: pass = criterion3(); break;
            case 4: pass = criterion4(); break;
            case 5: pass = criterion5(); break;
            case 6: pass = criterion6(); break;
            case 7: pass = criterion7(); break;
            case 8: pass = criterion8(); break;
            case 9: pass = criterion9(); break;
        }
        return pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::printf("[FAIL] criterion %d: unhandled exception: %s\n", criterion, e.what());
        return 1;
    }
}
