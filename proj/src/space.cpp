#include "lgbdf/space.hpp"

#include <array>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace lgbdf {

LagrangeSpace build_space(const Mesh& mesh, int k) {
    if (k < 1 || k > max_element_degree)
        throw std::invalid_argument("build_space: degree must be in 1..5");
    if (mesh.num_elements() == 0) throw std::invalid_argument("build_space: empty mesh");

    LagrangeSpace space;
    space.mesh = &mesh;
    space.degree = k;
    space.nloc = simplex_node_count(k);

    const int ne = mesh.num_elements();
    const int nv = mesh.num_vertices();
    space.connectivity.assign(static_cast<std::size_t>(ne) * space.nloc, -1);

    // Edge dof blocks keyed by sorted vertex pair, numbered by first appearance.
    std::map<std::pair<int, int>, int> edge_base;
    int next_base = nv;
    if (k > 1) {
        for (int l = 0; l < ne; ++l) {
            for (int s = 0; s < 3; ++s) {
                const auto key = std::minmax(mesh.elements[l][s], mesh.elements[l][(s + 1) % 3]);
                if (edge_base.emplace(key, next_base).second) next_base += k - 1;
            }
        }
    }
    int interior_base = next_base;

    const auto& layout = local_node_layout(k);
    const int ninterior = (k - 1) * (k - 2) / 2;
    for (int l = 0; l < ne; ++l) {
        const auto& ev = mesh.elements[l];
        int interior_seen = 0;
        for (int j = 0; j < space.nloc; ++j) {
            const BaryIndex& n = layout[j];
            int gid;
            if (n.a == k || n.b == k || n.c == k) {
                gid = ev[n.b == k ? 1 : (n.c == k ? 2 : 0)];
            } else if (n.c == 0 || n.a == 0 || n.b == 0) {
                int first, second, r;
                if (n.c == 0) {        // edge (v0,v1), step r = b
                    first = ev[0]; second = ev[1]; r = n.b;
                } else if (n.a == 0) {  // edge (v1,v2), step r = c
                    first = ev[1]; second = ev[2]; r = n.c;
                } else {               // edge (v2,v0), step r = a
                    first = ev[2]; second = ev[0]; r = n.a;
                }
                const int base = edge_base.at(std::minmax(first, second));
                gid = first < second ? base + (r - 1) : base + (k - 1 - r);
            } else {
                gid = interior_base + l * ninterior + interior_seen;
                ++interior_seen;
            }
            space.connectivity[static_cast<std::size_t>(l) * space.nloc + j] = gid;
        }
    }
    space.ndof = interior_base + ne * ninterior;

    space.dof_coords.assign(space.ndof, {});
    const auto& ref_nodes = local_node_coords(k);
    for (int l = 0; l < ne; ++l)
        for (int j = 0; j < space.nloc; ++j)
            space.dof_coords[space.dof(l, j)] = map_to_physical(mesh, l, ref_nodes[j]);
    return space;
}

double ScalarField::eval(int element, Vec2 ref) const {
    double values[max_local_nodes];
    lagrange_basis(space->degree, ref, values);
    double acc = 0.0;
    for (int j = 0; j < space->nloc; ++j) acc += coeff[space->dof(element, j)] * values[j];
    return acc;
}

void dump_field(const ScalarField& field, std::ostream& out) {
    out << std::setprecision(17);
    for (double c : field.coeff) out << c << '\n';
}

void load_field(ScalarField& field, std::istream& in) {
    for (auto& c : field.coeff)
        if (!(in >> c)) throw std::invalid_argument("load_field: truncated coefficient list");
}

void dump_field_file(const ScalarField& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("dump_field_file: cannot open " + path);
    dump_field(field, out);
}

void load_field_file(ScalarField& field, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_field_file: cannot open " + path);
    load_field(field, in);
}

}  // namespace lgbdf
