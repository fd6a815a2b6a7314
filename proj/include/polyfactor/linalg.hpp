#ifndef POLYFACTOR_LINALG_HPP
#define POLYFACTOR_LINALG_HPP

#include <vector>

#include "polyfactor/rat.hpp"

namespace polyfactor {

// Dense row-major matrix over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);
    RatMatrix(int rows, int cols, std::vector<Rat> entries);

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    RatMatrix transposed() const;
    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

struct RrefResult {
    RatMatrix rref;             // zero rows dropped, rows sorted by pivot column
    std::vector<int> pivots;    // pivot column per row
};

// Exact reduced row echelon form. Pivot choice within a column takes the
// entry with the smallest combined numerator/denominator bit length.
RrefResult reduced_row_echelon(const RatMatrix& m);

// Reduced echelon basis of { v : v * m = 0 }, one basis vector per row.
// A matrix with zero columns has the full space as kernel (identity basis).
RatMatrix left_kernel_basis(const RatMatrix& m);

// Unique solution of m * x = rhs. Throws Inconsistent / Underdetermined.
std::vector<Rat> solve_affine_system(const RatMatrix& m, const std::vector<Rat>& rhs);

} // namespace polyfactor

#endif
