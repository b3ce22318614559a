#ifndef TORI_LINALG_HPP
#define TORI_LINALG_HPP

#include "tori/rational.hpp"

#include <vector>

namespace tori {

// Dense matrix of exact rationals, row-major. No floating point anywhere.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    RationalMatrix transpose() const;
    static RationalMatrix identity(int n);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

// Exact rank over Q by Bareiss fraction-free elimination over big integers
// (denominators cleared per row; first-nonzero pivoting, rows top-down).
int rank_bareiss(const RationalMatrix& m);

// Q-basis of the right kernel, cols - rank vectors. Each vector is scaled to
// integers of content 1 with positive first nonzero entry; deterministic.
std::vector<std::vector<Int>> kernel_basis(const RationalMatrix& m);

// Independent oracle: plain rational Gaussian elimination, pivoting on the
// entry of largest absolute value. Guards rows*cols <= 10^6.
int rank_naive_oracle(const RationalMatrix& m);

// Exact determinant of a square integer matrix (fraction-free elimination).
Int det_integer(const std::vector<std::vector<Int>>& m);

} // namespace tori

#endif
