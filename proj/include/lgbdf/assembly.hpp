#pragma once

#include <functional>

#include "lgbdf/quadrature.hpp"
#include "lgbdf/solver.hpp"
#include "lgbdf/space.hpp"
#include "lgbdf/sparse.hpp"
#include "lgbdf/velocity.hpp"

namespace lgbdf {

using SpaceTimeFn = std::function<double(Vec2, double)>;

// Basis values and reference gradients tabulated at the points of one rule.
struct BasisTable {
    int nloc = 0;
    int nq = 0;
    std::vector<double> values;  // nq * nloc
    std::vector<Vec2> grads;     // nq * nloc

    const double* values_at(int g) const { return values.data() + static_cast<std::size_t>(g) * nloc; }
    const Vec2* grads_at(int g) const { return grads.data() + static_cast<std::size_t>(g) * nloc; }
};

BasisTable tabulate_basis(int k, const QuadratureRule& quad);

// Sparsity pattern coupling all dofs that share an element.
SparseOperator build_pattern(const LagrangeSpace& space);

SparseOperator assemble_mass(const LagrangeSpace& space, int quad_degree);
SparseOperator assemble_stiffness(const LagrangeSpace& space, int quad_degree);

// mu * stiffness + a0 * mass.
SparseOperator assemble_reaction_diffusion(const LagrangeSpace& space, double mu, double a0,
                                           int quad_degree);

// C_ij = integral of (u . grad(chi_j) + div(u) chi_j) chi_i.
SparseOperator assemble_convection(const LagrangeSpace& space, const VelocityField& velocity,
                                   double t, int quad_degree);

std::vector<double> assemble_load(const LagrangeSpace& space, const SpaceTimeFn& f, double t,
                                  int quad_degree);

ScalarField interpolate(const LagrangeSpace& space, const SpaceTimeFn& f, double t);
ScalarField l2_project(const LagrangeSpace& space, const SpaceTimeFn& f, double t, int quad_degree,
                       const SolverConfig& solver);

double integrate_field(const LagrangeSpace& space, const ScalarField& field, int quad_degree);

// integral of g(c_h(x), x) over the domain; used by the error metrics.
double integrate_with_field(const ScalarField& field, int quad_degree,
                            const std::function<double(double value, Vec2 x)>& g);

}  // namespace lgbdf
