#pragma once

#include <vector>

namespace lgbdf {

// Compressed sparse row matrix with sorted column indices per row.
struct SparseOperator {
    int rows = 0;
    int cols = 0;
    bool symmetric = false;
    std::vector<int> row_ptr;   // rows + 1
    std::vector<int> col_idx;
    std::vector<double> values;

    double& at(int row, int col);           // existing entry only
    double get(int row, int col) const;     // 0 for entries outside the pattern

    void matvec(const double* x, double* y) const;
    std::vector<double> matvec(const std::vector<double>& x) const;
    std::vector<double> diagonal() const;
    std::vector<double> row_sums() const;

    double symmetry_defect() const;  // max |A_ij - A_ji| / max |A_ij|
};

// c1*a + c2*b for operators with identical patterns.
SparseOperator combine(double c1, const SparseOperator& a, double c2, const SparseOperator& b);

}  // namespace lgbdf
