#include "lgbdf/quadrature.hpp"

#include <stdexcept>

namespace lgbdf {

namespace {
#include "quadrature_tables.inc"
}  // namespace

const QuadratureRule& simplex_quadrature(int degree) {
    if (degree < 1 || degree > max_quadrature_degree)
        throw std::invalid_argument("simplex_quadrature: degree must be in 1..14, got " +
                                    std::to_string(degree));
    static const std::vector<QuadratureRule> rules = [] {
        std::vector<QuadratureRule> all;
        all.reserve(max_quadrature_degree);
        for (int d = 1; d <= max_quadrature_degree; ++d) {
            const auto& tab = kTriRules[d - 1];
            QuadratureRule r;
            r.degree = d;
            r.points.reserve(tab.n);
            r.weights.reserve(tab.n);
            for (int i = 0; i < tab.n; ++i) {
                r.points.push_back({tab.rows[i][0], tab.rows[i][1]});
                r.weights.push_back(tab.rows[i][2]);
            }
            all.push_back(std::move(r));
        }
        return all;
    }();
    return rules[degree - 1];
}

const GaussRule01& gauss_legendre_01(int npoints) {
    if (npoints < 1 || npoints > 5)
        throw std::invalid_argument("gauss_legendre_01: point count must be in 1..5");
    static const std::vector<GaussRule01> rules = [] {
        std::vector<GaussRule01> all;
        for (int n = 1; n <= 5; ++n) {
            const auto& tab = kGaussLegendre01[n - 1];
            GaussRule01 r;
            for (int i = 0; i < tab.n; ++i) {
                r.nodes.push_back(tab.rows[i][0]);
                r.weights.push_back(tab.rows[i][1]);
            }
            all.push_back(std::move(r));
        }
        return all;
    }();
    return rules[npoints - 1];
}

}  // namespace lgbdf
