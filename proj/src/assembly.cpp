#include "lgbdf/assembly.hpp"

#include <cmath>
#include <stdexcept>

#include "lgbdf/parallel.hpp"

namespace lgbdf {

BasisTable tabulate_basis(int k, const QuadratureRule& quad) {
    BasisTable tab;
    tab.nloc = simplex_node_count(k);
    tab.nq = quad.size();
    tab.values.resize(static_cast<std::size_t>(tab.nq) * tab.nloc);
    tab.grads.resize(static_cast<std::size_t>(tab.nq) * tab.nloc);
    for (int g = 0; g < tab.nq; ++g) {
        lagrange_basis(k, quad.points[g], &tab.values[static_cast<std::size_t>(g) * tab.nloc]);
        lagrange_basis_grad(k, quad.points[g], &tab.grads[static_cast<std::size_t>(g) * tab.nloc]);
    }
    return tab;
}

SparseOperator build_pattern(const LagrangeSpace& space) {
    const int ne = space.mesh->num_elements();
    std::vector<std::vector<int>> cols(space.ndof);
    for (int l = 0; l < ne; ++l) {
        for (int i = 0; i < space.nloc; ++i) {
            auto& row = cols[space.dof(l, i)];
            for (int j = 0; j < space.nloc; ++j) row.push_back(space.dof(l, j));
        }
    }
    SparseOperator op;
    op.rows = op.cols = space.ndof;
    op.row_ptr.resize(space.ndof + 1, 0);
    for (int r = 0; r < space.ndof; ++r) {
        auto& row = cols[r];
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        op.row_ptr[r + 1] = op.row_ptr[r] + static_cast<int>(row.size());
    }
    op.col_idx.reserve(op.row_ptr.back());
    for (const auto& row : cols) op.col_idx.insert(op.col_idx.end(), row.begin(), row.end());
    op.values.assign(op.col_idx.size(), 0.0);
    return op;
}

namespace {

using ElementKernel = std::function<void(int element, double* local)>;

// Computes all element matrices in parallel, then merges them in ascending
// element order so the result is independent of the thread count.
SparseOperator assemble_operator(const LagrangeSpace& space, const ElementKernel& kernel,
                                 bool symmetric) {
    const int ne = space.mesh->num_elements();
    const int nloc = space.nloc;
    std::vector<double> local(static_cast<std::size_t>(ne) * nloc * nloc, 0.0);
    parallel_for(0, static_cast<std::size_t>(ne), [&](std::size_t l) {
        kernel(static_cast<int>(l), &local[l * nloc * nloc]);
    });

    SparseOperator op = build_pattern(space);
    op.symmetric = symmetric;
    for (int l = 0; l < ne; ++l) {
        const double* lm = &local[static_cast<std::size_t>(l) * nloc * nloc];
        for (int i = 0; i < nloc; ++i) {
            const int gi = space.dof(l, i);
            for (int j = 0; j < nloc; ++j) op.at(gi, space.dof(l, j)) += lm[i * nloc + j];
        }
    }
    return op;
}

void check_quad_degree(const LagrangeSpace& space, int quad_degree) {
    if (quad_degree < 2 * space.degree)
        throw std::invalid_argument("assembly: quadrature degree below 2k");
}

}  // namespace

SparseOperator assemble_mass(const LagrangeSpace& space, int quad_degree) {
    check_quad_degree(space, quad_degree);
    const QuadratureRule& quad = simplex_quadrature(quad_degree);
    const BasisTable tab = tabulate_basis(space.degree, quad);
    const Mesh& mesh = *space.mesh;
    return assemble_operator(
        space,
        [&](int l, double* lm) {
            for (int g = 0; g < tab.nq; ++g) {
                const double w = quad.weights[g] * mesh.map_det[l];
                const double* phi = tab.values_at(g);
                for (int i = 0; i < tab.nloc; ++i)
                    for (int j = 0; j < tab.nloc; ++j) lm[i * tab.nloc + j] += w * phi[i] * phi[j];
            }
        },
        true);
}

SparseOperator assemble_stiffness(const LagrangeSpace& space, int quad_degree) {
    check_quad_degree(space, quad_degree);
    const QuadratureRule& quad = simplex_quadrature(quad_degree);
    const BasisTable tab = tabulate_basis(space.degree, quad);
    const Mesh& mesh = *space.mesh;
    return assemble_operator(
        space,
        [&](int l, double* lm) {
            const auto& bi = mesh.map_binv[l];
            Vec2 grad[max_local_nodes];
            for (int g = 0; g < tab.nq; ++g) {
                const double w = quad.weights[g] * mesh.map_det[l];
                const Vec2* gref = tab.grads_at(g);
                for (int j = 0; j < tab.nloc; ++j) {
                    grad[j].x = bi[0] * gref[j].x + bi[2] * gref[j].y;
                    grad[j].y = bi[1] * gref[j].x + bi[3] * gref[j].y;
                }
                for (int i = 0; i < tab.nloc; ++i)
                    for (int j = 0; j < tab.nloc; ++j)
                        lm[i * tab.nloc + j] += w * dot(grad[i], grad[j]);
            }
        },
        true);
}

SparseOperator assemble_reaction_diffusion(const LagrangeSpace& space, double mu, double a0,
                                           int quad_degree) {
    if (mu <= 0.0) throw std::invalid_argument("assemble_reaction_diffusion: mu must be positive");
    if (a0 < 0.0) throw std::invalid_argument("assemble_reaction_diffusion: a0 must be nonnegative");
    const SparseOperator k = assemble_stiffness(space, quad_degree);
    if (a0 == 0.0) {
        SparseOperator out = k;
        for (double& v : out.values) v *= mu;
        return out;
    }
    return combine(mu, k, a0, assemble_mass(space, quad_degree));
}

SparseOperator assemble_convection(const LagrangeSpace& space, const VelocityField& velocity,
                                   double t, int quad_degree) {
    check_quad_degree(space, quad_degree);
    if (!velocity.value || !velocity.divergence)
        throw std::invalid_argument("assemble_convection: velocity and divergence required");
    const QuadratureRule& quad = simplex_quadrature(quad_degree);
    const BasisTable tab = tabulate_basis(space.degree, quad);
    const Mesh& mesh = *space.mesh;
    return assemble_operator(
        space,
        [&](int l, double* lm) {
            const auto& bi = mesh.map_binv[l];
            Vec2 grad[max_local_nodes];
            for (int g = 0; g < tab.nq; ++g) {
                const double w = quad.weights[g] * mesh.map_det[l];
                const Vec2 x = map_to_physical(mesh, l, quad.points[g]);
                const Vec2 u = velocity.value(x, t);
                const double div_u = velocity.divergence(x, t);
                if (!finite(u) || !std::isfinite(div_u))
                    throw std::invalid_argument("assemble_convection: non-finite velocity data");
                const double* phi = tab.values_at(g);
                const Vec2* gref = tab.grads_at(g);
                for (int j = 0; j < tab.nloc; ++j) {
                    grad[j].x = bi[0] * gref[j].x + bi[2] * gref[j].y;
                    grad[j].y = bi[1] * gref[j].x + bi[3] * gref[j].y;
                }
                for (int i = 0; i < tab.nloc; ++i)
                    for (int j = 0; j < tab.nloc; ++j)
                        lm[i * tab.nloc + j] += w * (dot(u, grad[j]) + div_u * phi[j]) * phi[i];
            }
        },
        false);
}

std::vector<double> assemble_load(const LagrangeSpace& space, const SpaceTimeFn& f, double t,
                                  int quad_degree) {
    const QuadratureRule& quad = simplex_quadrature(quad_degree);
    const BasisTable tab = tabulate_basis(space.degree, quad);
    const Mesh& mesh = *space.mesh;
    const int ne = mesh.num_elements();
    std::vector<double> local(static_cast<std::size_t>(ne) * tab.nloc, 0.0);
    parallel_for(0, static_cast<std::size_t>(ne), [&](std::size_t l) {
        double* lv = &local[l * tab.nloc];
        for (int g = 0; g < tab.nq; ++g) {
            const Vec2 x = map_to_physical(mesh, static_cast<int>(l), quad.points[g]);
            const double fx = f(x, t);
            if (!std::isfinite(fx)) throw std::invalid_argument("assemble_load: non-finite source");
            const double w = quad.weights[g] * mesh.map_det[l] * fx;
            const double* phi = tab.values_at(g);
            for (int j = 0; j < tab.nloc; ++j) lv[j] += w * phi[j];
        }
    });
    std::vector<double> b(space.ndof, 0.0);
    for (int l = 0; l < ne; ++l)
        for (int j = 0; j < tab.nloc; ++j) b[space.dof(l, j)] += local[static_cast<std::size_t>(l) * tab.nloc + j];
    return b;
}

ScalarField interpolate(const LagrangeSpace& space, const SpaceTimeFn& f, double t) {
    ScalarField field(space);
    for (int i = 0; i < space.ndof; ++i) {
        const double v = f(space.dof_coords[i], t);
        if (!std::isfinite(v)) throw std::invalid_argument("interpolate: non-finite value at dof");
        field.coeff[i] = v;
    }
    return field;
}

ScalarField l2_project(const LagrangeSpace& space, const SpaceTimeFn& f, double t, int quad_degree,
                       const SolverConfig& solver) {
    const SparseOperator m = assemble_mass(space, quad_degree);
    const std::vector<double> b = assemble_load(space, f, t, quad_degree);
    ScalarField field(space);
    cg_solve(m, b, field.coeff, solver);
    return field;
}

double integrate_with_field(const ScalarField& field, int quad_degree,
                            const std::function<double(double, Vec2)>& g) {
    const LagrangeSpace& space = *field.space;
    const QuadratureRule& quad = simplex_quadrature(quad_degree);
    const BasisTable tab = tabulate_basis(space.degree, quad);
    const Mesh& mesh = *space.mesh;
    const int ne = mesh.num_elements();
    std::vector<double> partial(ne, 0.0);
    parallel_for(0, static_cast<std::size_t>(ne), [&](std::size_t l) {
        double acc = 0.0;
        for (int gq = 0; gq < tab.nq; ++gq) {
            const double* phi = tab.values_at(gq);
            double value = 0.0;
            for (int j = 0; j < tab.nloc; ++j)
                value += field.coeff[space.dof(static_cast<int>(l), j)] * phi[j];
            const Vec2 x = map_to_physical(mesh, static_cast<int>(l), quad.points[gq]);
            acc += quad.weights[gq] * mesh.map_det[l] * g(value, x);
        }
        partial[l] = acc;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

double integrate_field(const LagrangeSpace& space, const ScalarField& field, int quad_degree) {
    if (field.space != &space) throw std::invalid_argument("integrate_field: field/space mismatch");
    return integrate_with_field(field, quad_degree, [](double v, Vec2) { return v; });
}

}  // namespace lgbdf
