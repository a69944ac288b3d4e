#include "lgbdf/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lgbdf {

double Mesh::total_area() const {
    double s = 0.0;
    for (int l = 0; l < num_elements(); ++l) s += element_area(l);
    return s;
}

void Mesh::finalize() {
    const int ne = num_elements();
    const int nv = num_vertices();

    map_b.assign(ne, {});
    map_binv.assign(ne, {});
    map_det.assign(ne, 0.0);
    map_a.assign(ne, {});
    for (int l = 0; l < ne; ++l) {
        const auto& e = elements[l];
        for (int v : e)
            if (v < 0 || v >= nv) throw std::invalid_argument("mesh: element vertex index out of range");
        const Vec2 p0 = vertices[e[0]], p1 = vertices[e[1]], p2 = vertices[e[2]];
        const double b00 = p1.x - p0.x, b01 = p2.x - p0.x;
        const double b10 = p1.y - p0.y, b11 = p2.y - p0.y;
        const double det = b00 * b11 - b01 * b10;
        if (det <= 0.0) throw std::invalid_argument("mesh: element " + std::to_string(l) +
                                                    " is degenerate or clockwise");
        map_b[l] = {b00, b01, b10, b11};
        map_binv[l] = {b11 / det, -b01 / det, -b10 / det, b00 / det};
        map_det[l] = det;
        map_a[l] = p0;
    }

    vertex_elements.assign(nv, {});
    for (int l = 0; l < ne; ++l)
        for (int v : elements[l]) vertex_elements[v].push_back(l);

    // Edge-based adjacency; a conforming mesh has every edge in 1 or 2 elements.
    std::map<std::pair<int, int>, std::pair<int, int>> edge_owner;  // (vmin,vmax) -> (element, local edge)
    neighbors.assign(ne, {-1, -1, -1});
    boundary_edges.clear();
    for (int l = 0; l < ne; ++l) {
        for (int s = 0; s < 3; ++s) {
            const int a = elements[l][s], b = elements[l][(s + 1) % 3];
            const auto key = std::minmax(a, b);
            auto it = edge_owner.find(key);
            if (it == edge_owner.end()) {
                edge_owner[key] = {l, s};
            } else if (it->second.first >= 0) {
                neighbors[l][s] = it->second.first;
                neighbors[it->second.first][it->second.second] = l;
                it->second.first = -2;  // seen twice
            } else {
                throw std::invalid_argument("mesh: edge shared by more than 2 elements");
            }
        }
    }
    for (int l = 0; l < ne; ++l)
        for (int s = 0; s < 3; ++s)
            if (neighbors[l][s] < 0)
                boundary_edges.push_back({elements[l][s], elements[l][(s + 1) % 3]});
}

Mesh build_uniform_square_mesh(Vec2 lo, Vec2 hi, int n, DiagonalSplit split) {
    if (n < 1) throw std::invalid_argument("build_uniform_square_mesh: need n >= 1");
    if (!(hi.x > lo.x) || !(hi.y > lo.y))
        throw std::invalid_argument("build_uniform_square_mesh: degenerate box");

    Mesh mesh;
    const double hx = (hi.x - lo.x) / n, hy = (hi.y - lo.y) / n;
    mesh.vertices.reserve((n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            mesh.vertices.push_back({lo.x + i * hx, lo.y + j * hy});

    auto vid = [n](int i, int j) { return j * (n + 1) + i; };
    mesh.elements.reserve(2 * n * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int v00 = vid(i, j), v10 = vid(i + 1, j);
            const int v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
            const bool rising = split == DiagonalSplit::lower_left || ((i + j) % 2 == 0);
            if (rising) {
                mesh.elements.push_back({v00, v10, v11});
                mesh.elements.push_back({v00, v11, v01});
            } else {
                mesh.elements.push_back({v00, v10, v01});
                mesh.elements.push_back({v10, v11, v01});
            }
        }
    }
    mesh.grid = StructuredGrid{n, lo, hi, split};
    mesh.finalize();
    return mesh;
}

Vec2 map_to_physical(const Mesh& mesh, int element, Vec2 ref) {
    const auto& b = mesh.map_b[element];
    const Vec2 a = mesh.map_a[element];
    return {a.x + b[0] * ref.x + b[1] * ref.y, a.y + b[2] * ref.x + b[3] * ref.y};
}

Vec2 map_to_reference(const Mesh& mesh, int element, Vec2 phys) {
    const auto& bi = mesh.map_binv[element];
    const Vec2 d = phys - mesh.map_a[element];
    return {bi[0] * d.x + bi[1] * d.y, bi[2] * d.x + bi[3] * d.y};
}

namespace {

// Smallest barycentric coordinate; nonnegative means inside.
double containment_margin(const Mesh& mesh, int element, Vec2 y, Vec2* ref_out) {
    const Vec2 r = map_to_reference(mesh, element, y);
    if (ref_out) *ref_out = r;
    return std::min({1.0 - r.x - r.y, r.x, r.y});
}

// Walks toward y across the edge with the most negative barycentric
// coordinate; returns the containing element or -1.
int walk_to(const Mesh& mesh, Vec2 y, int start, double tol, int max_steps) {
    int cur = start;
    int prev = -1;
    for (int it = 0; it < max_steps; ++it) {
        Vec2 r;
        const double margin = containment_margin(mesh, cur, y, &r);
        if (margin >= -tol) return cur;
        // barycentric coords (l0,l1,l2); local edge s lies opposite vertex s+2
        const double bary[3] = {1.0 - r.x - r.y, r.x, r.y};
        int order[3] = {0, 1, 2};
        std::sort(order, order + 3, [&](int a, int b) { return bary[a] < bary[b]; });
        int next = -1;
        for (int cand : order) {
            if (bary[cand] >= 0.0) break;
            // negative l0 -> cross edge (v1,v2) = local edge 1, etc.
            const int edge = (cand + 1) % 3;
            const int nb = mesh.neighbors[cur][edge];
            if (nb >= 0 && nb != prev) {
                next = nb;
                break;
            }
        }
        if (next < 0) return -1;
        prev = cur;
        cur = next;
    }
    return -1;
}

int structured_candidate(const Mesh& mesh, Vec2 y) {
    const auto& g = *mesh.grid;
    const double hx = (g.hi.x - g.lo.x) / g.n, hy = (g.hi.y - g.lo.y) / g.n;
    int i = static_cast<int>(std::floor((y.x - g.lo.x) / hx));
    int j = static_cast<int>(std::floor((y.y - g.lo.y) / hy));
    i = std::clamp(i, 0, g.n - 1);
    j = std::clamp(j, 0, g.n - 1);
    return 2 * (j * g.n + i);
}

Vec2 closest_point_on_segment(Vec2 a, Vec2 b, Vec2 y) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    const double t = len2 > 0.0 ? std::clamp(dot(y - a, ab) / len2, 0.0, 1.0) : 0.0;
    return a + t * ab;
}

}  // namespace

Vec2 project_into_domain(const Mesh& mesh, Vec2 y, bool* moved) {
    if (moved) *moved = false;
    if (mesh.grid) {
        const auto& g = *mesh.grid;
        const Vec2 p{std::clamp(y.x, g.lo.x, g.hi.x), std::clamp(y.y, g.lo.y, g.hi.y)};
        if (moved) *moved = (p.x != y.x || p.y != y.y);
        return p;
    }
    for (int l = 0; l < mesh.num_elements(); ++l)
        if (containment_margin(mesh, l, y, nullptr) >= -1e-12) return y;
    Vec2 best = y;
    double best_d = std::numeric_limits<double>::max();
    for (const auto& e : mesh.boundary_edges) {
        const Vec2 p = closest_point_on_segment(mesh.vertices[e[0]], mesh.vertices[e[1]], y);
        const double d = norm(p - y);
        if (d < best_d) {
            best_d = d;
            best = p;
        }
    }
    if (moved) *moved = true;
    return best;
}

PointLocation locate_point(const Mesh& mesh, Vec2 y, int hint, double tol) {
    if (!finite(y)) throw std::invalid_argument("locate_point: non-finite point");
    if (mesh.num_elements() == 0) throw std::invalid_argument("locate_point: empty mesh");

    bool clamped = false;
    Vec2 p = project_into_domain(mesh, y, &clamped);

    int found = -1;
    if (hint >= 0 && hint < mesh.num_elements())
        found = walk_to(mesh, p, hint, tol, 2 * mesh.num_elements());
    if (found < 0 && mesh.grid) {
        const int cand = structured_candidate(mesh, p);
        if (containment_margin(mesh, cand, p, nullptr) >= -tol) found = cand;
        else if (containment_margin(mesh, cand + 1, p, nullptr) >= -tol) found = cand + 1;
        else found = walk_to(mesh, p, cand, tol, 64);
    }
    if (found < 0) {
        for (int l = 0; l < mesh.num_elements(); ++l) {
            if (containment_margin(mesh, l, p, nullptr) >= -tol) {
                found = l;
                break;
            }
        }
    }
    if (found < 0) {
        // p was projected onto the closed domain, so roundoff is the only way
        // to get here; retry with a looser margin before giving up.
        double best_margin = -std::numeric_limits<double>::max();
        for (int l = 0; l < mesh.num_elements(); ++l) {
            const double m = containment_margin(mesh, l, p, nullptr);
            if (m > best_margin) {
                best_margin = m;
                found = l;
            }
        }
        if (best_margin < -1e4 * tol)
            throw std::runtime_error("locate_point: no containing element after projection");
    }

    // Deterministic tie-break: a point within tolerance of a shared edge or
    // vertex belongs to the lowest-indexed element containing it.
    Vec2 ref;
    double margin = containment_margin(mesh, found, p, &ref);
    if (margin <= tol) {
        int best = found;
        for (int v : mesh.elements[found]) {
            for (int cand : mesh.vertex_elements[v]) {
                if (cand < best && containment_margin(mesh, cand, p, nullptr) >= -tol) best = cand;
            }
        }
        if (best != found) {
            found = best;
            containment_margin(mesh, found, p, &ref);
        }
    }
    (void)margin;
    return {found, ref, clamped};
}

void dump_mesh(const Mesh& mesh, std::ostream& out) {
    out << "2 " << mesh.num_vertices() << ' ' << mesh.num_elements() << '\n';
    out << std::setprecision(17);
    for (const auto& v : mesh.vertices) out << v.x << ' ' << v.y << '\n';
    for (const auto& e : mesh.elements) out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
}

Mesh load_mesh(std::istream& in) {
    int dim = 0, nv = 0, ne = 0;
    if (!(in >> dim >> nv >> ne) || dim != 2 || nv < 3 || ne < 1)
        throw std::invalid_argument("load_mesh: bad header");
    Mesh mesh;
    mesh.vertices.resize(nv);
    for (auto& v : mesh.vertices)
        if (!(in >> v.x >> v.y)) throw std::invalid_argument("load_mesh: truncated vertex list");
    mesh.elements.resize(ne);
    for (auto& e : mesh.elements)
        if (!(in >> e[0] >> e[1] >> e[2])) throw std::invalid_argument("load_mesh: truncated element list");
    mesh.finalize();
    return mesh;
}

void dump_mesh_file(const Mesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("dump_mesh_file: cannot open " + path);
    dump_mesh(mesh, out);
}

Mesh load_mesh_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_mesh_file: cannot open " + path);
    return load_mesh(in);
}

}  // namespace lgbdf
