#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lgbdf/geometry.hpp"

namespace lgbdf {

enum class DiagonalSplit {
    lower_left,  // every cell split by the diagonal from its lower-left corner
    crisscross,  // diagonal direction alternates in a checkerboard pattern
};

struct StructuredGrid {
    int n = 0;  // segments per edge
    Vec2 lo, hi;
    DiagonalSplit split = DiagonalSplit::lower_left;
};

// Fixed conforming triangulation with counterclockwise elements and
// precomputed affine maps x = B x_ref + a per element.
struct Mesh {
    std::vector<Vec2> vertices;
    std::vector<std::array<int, 3>> elements;

    // Derived connectivity, built by finalize().
    std::vector<std::array<int, 3>> neighbors;  // across local edge e = (v_e, v_{e+1}); -1 on boundary
    std::vector<std::vector<int>> vertex_elements;
    std::vector<std::array<int, 2>> boundary_edges;  // vertex pairs, walk order along elements

    // Affine map data: columns of B are edge vectors from vertex 0.
    std::vector<std::array<double, 4>> map_b;     // {b00, b01, b10, b11}
    std::vector<std::array<double, 4>> map_binv;
    std::vector<double> map_det;                  // positive for valid meshes
    std::vector<Vec2> map_a;

    std::optional<StructuredGrid> grid;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_elements() const { return static_cast<int>(elements.size()); }

    double element_area(int l) const { return 0.5 * map_det[l]; }
    double total_area() const;

    // Builds adjacency and map data; validates orientation and conformity.
    void finalize();
};

Mesh build_uniform_square_mesh(Vec2 lo, Vec2 hi, int n,
                               DiagonalSplit split = DiagonalSplit::lower_left);

Vec2 map_to_physical(const Mesh& mesh, int element, Vec2 ref);
Vec2 map_to_reference(const Mesh& mesh, int element, Vec2 phys);

struct PointLocation {
    int element = -1;
    Vec2 ref;
    bool clamped = false;
};

// Finds an element containing y (barycentric tolerance tol).  Points outside
// the mesh are projected onto the nearest boundary point and flagged.  Points
// on shared edges resolve to the lowest containing element index.
PointLocation locate_point(const Mesh& mesh, Vec2 y, int hint = -1, double tol = 1e-10);

// Nearest point of the closed mesh domain; sets *moved when y was outside.
Vec2 project_into_domain(const Mesh& mesh, Vec2 y, bool* moved = nullptr);

// Plain-text round-trip: header "d nv ne", vertex lines, element lines.
void dump_mesh(const Mesh& mesh, std::ostream& out);
Mesh load_mesh(std::istream& in);
void dump_mesh_file(const Mesh& mesh, const std::string& path);
Mesh load_mesh_file(const std::string& path);

}  // namespace lgbdf
