#pragma once

#include <vector>

#include "lgbdf/geometry.hpp"

namespace lgbdf {

// Quadrature rule on the reference triangle (0,0)-(1,0)-(0,1).
// Weights sum to the reference area 1/2.
struct QuadratureRule {
    int degree = 0;
    std::vector<Vec2> points;
    std::vector<double> weights;

    int size() const { return static_cast<int>(points.size()); }
};

// Positive-weight interior-point rule exact for polynomials of total
// degree <= degree.  Supported range: 1..14.
const QuadratureRule& simplex_quadrature(int degree);

inline constexpr int max_quadrature_degree = 14;

// Gauss-Legendre rule on [0,1], 1..5 points (exact degree 2n-1).
struct GaussRule01 {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule01& gauss_legendre_01(int npoints);

}  // namespace lgbdf
