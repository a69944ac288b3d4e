#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lgbdf/sparse.hpp"

namespace lgbdf {

enum class Preconditioner { none, jacobi };

struct SolverConfig {
    double rel_tol = 1e-12;
    int max_iterations = 0;  // 0 -> 10 * ndof
    Preconditioner preconditioner = Preconditioner::jacobi;
};

struct SolverFailure : std::runtime_error {
    SolverFailure(const std::string& what, double residual_, int iterations_)
        : std::runtime_error(what), residual(residual_), iterations(iterations_) {}
    double residual;
    int iterations;
};

struct SolveStats {
    int iterations = 0;
    double residual = 0.0;  // final ||b - Ax|| / ||b||
};

// Preconditioned conjugate gradients for SPD systems; x carries the warm
// start in and the solution out.  Deterministic: reductions run in fixed
// blocked order independent of thread count.
SolveStats cg_solve(const SparseOperator& a, const std::vector<double>& b, std::vector<double>& x,
                    const SolverConfig& cfg);

}  // namespace lgbdf
