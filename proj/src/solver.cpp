#include "lgbdf/solver.hpp"

#include <cmath>

namespace lgbdf {

namespace {

// Fixed blocked summation so the result does not depend on thread count.
double dot_blocked(const std::vector<double>& a, const std::vector<double>& b) {
    constexpr std::size_t block = 4096;
    double total = 0.0;
    for (std::size_t lo = 0; lo < a.size(); lo += block) {
        const std::size_t hi = std::min(a.size(), lo + block);
        double part = 0.0;
        for (std::size_t i = lo; i < hi; ++i) part += a[i] * b[i];
        total += part;
    }
    return total;
}

}  // namespace

SolveStats cg_solve(const SparseOperator& a, const std::vector<double>& b, std::vector<double>& x,
                    const SolverConfig& cfg) {
    const int n = a.rows;
    if (a.cols != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("cg_solve: dimension mismatch");
    if (cfg.rel_tol <= 0.0) throw std::invalid_argument("cg_solve: tolerance must be positive");
    x.resize(n, 0.0);

    const double norm_b = std::sqrt(dot_blocked(b, b));
    if (norm_b == 0.0) {
        std::fill(x.begin(), x.end(), 0.0);
        return {0, 0.0};
    }

    std::vector<double> inv_diag;
    if (cfg.preconditioner == Preconditioner::jacobi) {
        inv_diag = a.diagonal();
        for (double& d : inv_diag) {
            if (d <= 0.0)
                throw SolverFailure("cg_solve: matrix not positive definite (diagonal entry " +
                                        std::to_string(d) + ")",
                                    1.0, 0);
            d = 1.0 / d;
        }
    }
    auto apply_precond = [&](const std::vector<double>& r, std::vector<double>& z) {
        if (inv_diag.empty()) z = r;
        else {
            z.resize(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) z[i] = inv_diag[i] * r[i];
        }
    };

    std::vector<double> r(n), z(n), p(n), q(n);
    a.matvec(x.data(), q.data());
    for (int i = 0; i < n; ++i) r[i] = b[i] - q[i];

    double norm_r = std::sqrt(dot_blocked(r, r));
    const double target = cfg.rel_tol * norm_b;
    if (norm_r <= target) return {0, norm_r / norm_b};

    apply_precond(r, z);
    p = z;
    double rz = dot_blocked(r, z);

    const int max_it = cfg.max_iterations > 0 ? cfg.max_iterations : 10 * n;
    for (int it = 1; it <= max_it; ++it) {
        a.matvec(p.data(), q.data());
        const double pq = dot_blocked(p, q);
        if (!(pq > 0.0))
            throw SolverFailure("cg_solve: matrix not positive definite (p'Ap = " +
                                    std::to_string(pq) + ")",
                                norm_r / norm_b, it);
        const double alpha = rz / pq;
        for (int i = 0; i < n; ++i) x[i] += alpha * p[i];
        for (int i = 0; i < n; ++i) r[i] -= alpha * q[i];
        norm_r = std::sqrt(dot_blocked(r, r));
        if (norm_r <= target) return {it, norm_r / norm_b};
        apply_precond(r, z);
        const double rz_new = dot_blocked(r, z);
        const double beta = rz_new / rz;
        for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
        rz = rz_new;
    }
    throw SolverFailure("cg_solve: no convergence in " + std::to_string(max_it) +
                            " iterations (relative residual " + std::to_string(norm_r / norm_b) + ")",
                        norm_r / norm_b, max_it);
}

}  // namespace lgbdf
