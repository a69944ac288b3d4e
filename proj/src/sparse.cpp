#include "lgbdf/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lgbdf/parallel.hpp"

namespace lgbdf {

double& SparseOperator::at(int row, int col) {
    const auto begin = col_idx.begin() + row_ptr[row];
    const auto end = col_idx.begin() + row_ptr[row + 1];
    const auto it = std::lower_bound(begin, end, col);
    if (it == end || *it != col) throw std::out_of_range("SparseOperator::at: entry not in pattern");
    return values[it - col_idx.begin()];
}

double SparseOperator::get(int row, int col) const {
    const auto begin = col_idx.begin() + row_ptr[row];
    const auto end = col_idx.begin() + row_ptr[row + 1];
    const auto it = std::lower_bound(begin, end, col);
    return (it == end || *it != col) ? 0.0 : values[it - col_idx.begin()];
}

void SparseOperator::matvec(const double* x, double* y) const {
    parallel_for(0, static_cast<std::size_t>(rows), [&](std::size_t r) {
        double acc = 0.0;
        for (int p = row_ptr[r]; p < row_ptr[r + 1]; ++p) acc += values[p] * x[col_idx[p]];
        y[r] = acc;
    });
}

std::vector<double> SparseOperator::matvec(const std::vector<double>& x) const {
    std::vector<double> y(rows);
    matvec(x.data(), y.data());
    return y;
}

std::vector<double> SparseOperator::diagonal() const {
    std::vector<double> d(rows);
    for (int r = 0; r < rows; ++r) d[r] = get(r, r);
    return d;
}

std::vector<double> SparseOperator::row_sums() const {
    std::vector<double> s(rows, 0.0);
    for (int r = 0; r < rows; ++r)
        for (int p = row_ptr[r]; p < row_ptr[r + 1]; ++p) s[r] += values[p];
    return s;
}

double SparseOperator::symmetry_defect() const {
    double max_abs = 0.0, max_diff = 0.0;
    for (int r = 0; r < rows; ++r) {
        for (int p = row_ptr[r]; p < row_ptr[r + 1]; ++p) {
            max_abs = std::max(max_abs, std::abs(values[p]));
            max_diff = std::max(max_diff, std::abs(values[p] - get(col_idx[p], r)));
        }
    }
    return max_abs > 0.0 ? max_diff / max_abs : 0.0;
}

SparseOperator combine(double c1, const SparseOperator& a, double c2, const SparseOperator& b) {
    if (a.rows != b.rows || a.cols != b.cols || a.row_ptr != b.row_ptr || a.col_idx != b.col_idx)
        throw std::invalid_argument("combine: operators have different patterns");
    SparseOperator out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = c1 * a.values[i] + c2 * b.values[i];
    out.symmetric = a.symmetric && b.symmetric;
    return out;
}

}  // namespace lgbdf
