#include "lgbdf/basis.hpp"

#include <stdexcept>

namespace lgbdf {

namespace {

void check_degree(int k) {
    if (k < 1 || k > max_element_degree)
        throw std::invalid_argument("lagrange basis: degree must be in 1..5, got " +
                                    std::to_string(k));
}

std::vector<BaryIndex> make_layout(int k) {
    std::vector<BaryIndex> nodes;
    nodes.reserve(simplex_node_count(k));
    nodes.push_back({k, 0, 0});
    nodes.push_back({0, k, 0});
    nodes.push_back({0, 0, k});
    for (int r = 1; r < k; ++r) nodes.push_back({k - r, r, 0});  // edge (v0,v1)
    for (int r = 1; r < k; ++r) nodes.push_back({0, k - r, r});  // edge (v1,v2)
    for (int r = 1; r < k; ++r) nodes.push_back({r, 0, k - r});  // edge (v2,v0)
    for (int a = 1; a < k; ++a)
        for (int b = 1; a + b < k; ++b) nodes.push_back({a, b, k - a - b});
    return nodes;
}

// One-dimensional factor p_m(t) = prod_{r<m} (t-r)/(m-r) and its derivative.
inline void silvester(int m, double t, double& value, double& deriv) {
    value = 1.0;
    deriv = 0.0;
    for (int s = 0; s < m; ++s) {
        deriv = deriv * (t - s) + value;
        value *= (t - s);
    }
    double scale = 1.0;
    for (int r = 0; r < m; ++r) scale *= (m - r);
    value /= scale;
    deriv /= scale;
}

}  // namespace

const std::vector<BaryIndex>& local_node_layout(int k) {
    check_degree(k);
    static const std::vector<std::vector<BaryIndex>> layouts = [] {
        std::vector<std::vector<BaryIndex>> all;
        for (int d = 1; d <= max_element_degree; ++d) all.push_back(make_layout(d));
        return all;
    }();
    return layouts[k - 1];
}

const std::vector<Vec2>& local_node_coords(int k) {
    check_degree(k);
    static const std::vector<std::vector<Vec2>> coords = [] {
        std::vector<std::vector<Vec2>> all;
        for (int d = 1; d <= max_element_degree; ++d) {
            std::vector<Vec2> pts;
            for (const auto& n : make_layout(d))
                pts.push_back({static_cast<double>(n.b) / d, static_cast<double>(n.c) / d});
            all.push_back(std::move(pts));
        }
        return all;
    }();
    return coords[k - 1];
}

void lagrange_basis(int k, Vec2 ref, double* values) {
    const auto& layout = local_node_layout(k);
    const double l0 = 1.0 - ref.x - ref.y, l1 = ref.x, l2 = ref.y;
    for (size_t j = 0; j < layout.size(); ++j) {
        double pa, pb, pc, unused;
        silvester(layout[j].a, k * l0, pa, unused);
        silvester(layout[j].b, k * l1, pb, unused);
        silvester(layout[j].c, k * l2, pc, unused);
        values[j] = pa * pb * pc;
    }
}

void lagrange_basis_grad(int k, Vec2 ref, Vec2* grads) {
    const auto& layout = local_node_layout(k);
    const double l0 = 1.0 - ref.x - ref.y, l1 = ref.x, l2 = ref.y;
    for (size_t j = 0; j < layout.size(); ++j) {
        double pa, pb, pc, da, db, dc;
        silvester(layout[j].a, k * l0, pa, da);
        silvester(layout[j].b, k * l1, pb, db);
        silvester(layout[j].c, k * l2, pc, dc);
        // d(l0)/dx = d(l0)/dy = -1, d(l1)/dx = 1, d(l2)/dy = 1
        grads[j].x = k * (db * pa * pc - da * pb * pc);
        grads[j].y = k * (dc * pa * pb - da * pb * pc);
    }
}

}  // namespace lgbdf
