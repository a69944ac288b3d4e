#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lgbdf/basis.hpp"
#include "lgbdf/mesh.hpp"

namespace lgbdf {

// Continuous Lagrange space of degree k on a fixed mesh.  Global dof order:
// mesh vertices, then edge blocks (edges numbered by first appearance in
// element order, nodes walked from the lower to the higher vertex id), then
// per-element interior blocks.
struct LagrangeSpace {
    const Mesh* mesh = nullptr;
    int degree = 0;
    int ndof = 0;
    int nloc = 0;
    std::vector<int> connectivity;  // num_elements * nloc
    std::vector<Vec2> dof_coords;

    int dof(int element, int local) const { return connectivity[element * nloc + local]; }
};

LagrangeSpace build_space(const Mesh& mesh, int k);

struct ScalarField {
    const LagrangeSpace* space = nullptr;
    std::vector<double> coeff;

    ScalarField() = default;
    explicit ScalarField(const LagrangeSpace& s) : space(&s), coeff(s.ndof, 0.0) {}

    // Value at reference point of an element.
    double eval(int element, Vec2 ref) const;
};

void dump_field(const ScalarField& field, std::ostream& out);
void load_field(ScalarField& field, std::istream& in);
void dump_field_file(const ScalarField& field, const std::string& path);
void load_field_file(ScalarField& field, const std::string& path);

}  // namespace lgbdf
