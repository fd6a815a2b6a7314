#include "polyfactor/linalg.hpp"

#include <stdexcept>

#include "polyfactor/errors.hpp"

namespace polyfactor {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, rat(0)) {}

RatMatrix::RatMatrix(int rows, int cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("RatMatrix: entry count mismatch");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = rat(1);
    return m;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RrefResult reduced_row_echelon(const RatMatrix& m) {
    RatMatrix a = m;
    int rows = a.rows(), cols = a.cols();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        // pick the nonzero entry with the smallest bit footprint
        int best = -1;
        size_t best_size = 0;
        for (int r = row; r < rows; ++r) {
            if (a.at(r, col) == 0) continue;
            size_t sz = rat_bit_size(a.at(r, col));
            if (best < 0 || sz < best_size) {
                best = r;
                best_size = sz;
            }
        }
        if (best < 0) continue;
        if (best != row)
            for (int c = col; c < cols; ++c) std::swap(a.at(best, c), a.at(row, c));
        Rat inv = rat(1) / a.at(row, col);
        for (int c = col; c < cols; ++c) a.at(row, c) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a.at(r, col) == 0) continue;
            Rat f = a.at(r, col);
            for (int c = col; c < cols; ++c) a.at(r, c) -= f * a.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    RatMatrix out(static_cast<int>(pivots.size()), cols);
    for (int r = 0; r < out.rows(); ++r)
        for (int c = 0; c < cols; ++c) out.at(r, c) = a.at(r, c);
    return {std::move(out), std::move(pivots)};
}

RatMatrix left_kernel_basis(const RatMatrix& m) {
    // left kernel of m == nullspace of m^T
    RatMatrix t = m.transposed();
    RrefResult r = reduced_row_echelon(t);
    int n = t.cols(); // dimension of the ambient space
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);

    RatMatrix basis(static_cast<int>(free_cols.size()), n);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(static_cast<int>(k), fc) = rat(1);
        for (int pr = 0; pr < r.rref.rows(); ++pr)
            basis.at(static_cast<int>(k), r.pivots[static_cast<size_t>(pr)]) = -r.rref.at(pr, fc);
    }
    return reduced_row_echelon(basis).rref;
}

std::vector<Rat> solve_affine_system(const RatMatrix& m, const std::vector<Rat>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows())
        throw std::invalid_argument("solve_affine_system: rhs size mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = rhs[static_cast<size_t>(r)];
    }
    RrefResult rr = reduced_row_echelon(aug);
    for (int p : rr.pivots)
        if (p == m.cols()) throw Inconsistent("affine system has no solution");
    if (static_cast<int>(rr.pivots.size()) < m.cols())
        throw Underdetermined("affine system has multiple solutions");
    std::vector<Rat> x(static_cast<size_t>(m.cols()), rat(0));
    for (int r = 0; r < rr.rref.rows(); ++r)
        x[static_cast<size_t>(rr.pivots[static_cast<size_t>(r)])] = rr.rref.at(r, m.cols());
    return x;
}

} // namespace polyfactor
