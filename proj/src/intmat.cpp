#include "pyjama/intmat.hpp"

#include <stdexcept>
#include <utility>

namespace pyjama {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntMat();
    IntMat m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMat::row(std::size_t i) const {
    return std::vector<Int>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void IntMat::append_row(const std::vector<Int>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("append_row: size mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

namespace {

// Elementary row operations applied to m and mirrored on u when tracking.
struct RowOps {
    IntMat& m;
    IntMat* u;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
        if (u)
            for (std::size_t j = 0; j < u->cols(); ++j) std::swap(u->at(a, j), u->at(b, j));
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
        if (u)
            for (std::size_t j = 0; j < u->cols(); ++j) u->at(a, j) = -u->at(a, j);
    }
    // row a -= q * row b
    void submul_row(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
        if (u)
            for (std::size_t j = 0; j < u->cols(); ++j) u->at(a, j) -= q * u->at(b, j);
    }
};

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::size_t hnf_in_place(IntMat& m, IntMat* u) {
    RowOps ops{m, u};
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        // Euclid on the column below `row` until one nonzero entry is left.
        for (;;) {
            std::size_t pivot = m.rows();
            for (std::size_t i = row; i < m.rows(); ++i) {
                if (m.at(i, col) == 0) continue;
                if (pivot == m.rows() ||
                    cmp(abs(m.at(i, col)), abs(m.at(pivot, col))) < 0)
                    pivot = i;
            }
            if (pivot == m.rows()) goto next_col;
            ops.swap_rows(row, pivot);
            {
                bool clean = true;
                for (std::size_t i = row + 1; i < m.rows(); ++i) {
                    if (m.at(i, col) == 0) continue;
                    ops.submul_row(i, row, floor_div(m.at(i, col), m.at(row, col)));
                    if (m.at(i, col) != 0) clean = false;
                }
                if (clean) break;
            }
        }
        if (m.at(row, col) < 0) ops.negate_row(row);
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < row; ++i)
            ops.submul_row(i, row, floor_div(m.at(i, col), m.at(row, col)));
        ++row;
    next_col:;
    }
    return row;
}

}  // namespace

IntMat hnf(IntMat m) {
    std::size_t rank = hnf_in_place(m, nullptr);
    IntMat out(rank, m.cols());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

HnfTransform hnf_with_transform(IntMat m) {
    IntMat u = IntMat::identity(m.rows());
    std::size_t rank = hnf_in_place(m, &u);
    return {std::move(m), std::move(u), rank};
}

IntMat rat_kernel_basis(const std::vector<RatVec>& rows, std::size_t cols) {
    // Clear denominators row-wise; the integer kernel is unchanged.
    IntMat a(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("rat_kernel_basis: row size mismatch");
        Int lcm = 1;
        for (const Rat& x : rows[i]) {
            Int l;
            mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
            lcm = l;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            Rat scaled = rows[i][j] * Rat(lcm);
            a.at(i, j) = scaled.get_num();  // denominator is 1 now
        }
    }

    // Row-reduce the transpose while tracking the transform; transform rows
    // aligned with zero rows of the echelon form span {v | a v = 0}.
    HnfTransform t = hnf_with_transform(a.transposed());
    IntMat kernel;
    for (std::size_t i = t.rank; i < t.u.rows(); ++i) kernel.append_row(t.u.row(i));
    if (kernel.rows() == 0) return IntMat(0, cols);
    return hnf(std::move(kernel));
}

}  // namespace pyjama
