#pragma once

#include <cstddef>
#include <vector>

#include "pyjama/numeric.hpp"

namespace pyjama {

/// Integer matrix, row-major. Rows are the unit of interest throughout:
/// they carry lattice basis vectors and generator vectors.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    static IntMat identity(std::size_t n);
    static IntMat from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    void append_row(const std::vector<Int>& r);

    IntMat transposed() const;

    friend bool operator==(const IntMat& a, const IntMat& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// Row-style Hermite normal form of the row lattice of M: upper-echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot),
/// zero rows removed. Canonical: equal row lattices give equal outputs.
IntMat hnf(IntMat m);

/// HNF together with the unimodular transform: u * input = h. Zero rows of
/// h are kept at the bottom so u's rows stay aligned (rows of u beside zero
/// rows of h span the left kernel of the input).
struct HnfTransform {
    IntMat h;
    IntMat u;
    std::size_t rank;
};
HnfTransform hnf_with_transform(IntMat m);

/// HNF basis of the integer kernel {v in Z^cols | M v = 0} of a rational
/// matrix, given as a list of rows (possibly empty). Denominators are
/// cleared row-wise first. An empty result means the kernel is {0}.
IntMat rat_kernel_basis(const std::vector<RatVec>& rows, std::size_t cols);

}  // namespace pyjama
