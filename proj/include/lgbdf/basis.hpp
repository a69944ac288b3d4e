#pragma once

#include <vector>

#include "lgbdf/geometry.hpp"

namespace lgbdf {

inline constexpr int max_element_degree = 5;

constexpr int simplex_node_count(int k) { return (k + 1) * (k + 2) / 2; }

inline constexpr int max_local_nodes = simplex_node_count(max_element_degree);

// Barycentric integer index (a,b,c), a+b+c = k, for the equispaced node at
// reference position (b/k, c/k).  Local ordering: the 3 vertices, then the
// k-1 nodes of each edge walked from its first to its second vertex (edges
// (0,1), (1,2), (2,0)), then interior nodes in lexicographic (a,b) order.
struct BaryIndex {
    int a = 0, b = 0, c = 0;
};

const std::vector<BaryIndex>& local_node_layout(int k);
const std::vector<Vec2>& local_node_coords(int k);

// Nodal Lagrange basis on the reference triangle; values/grads are filled in
// local node order (buffers of at least simplex_node_count(k) entries).
void lagrange_basis(int k, Vec2 ref, double* values);
void lagrange_basis_grad(int k, Vec2 ref, Vec2* grads);

}  // namespace lgbdf
