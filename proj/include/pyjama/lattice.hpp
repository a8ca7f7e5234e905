#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pyjama/intmat.hpp"
#include "pyjama/numeric.hpp"

namespace pyjama {

/// Integer lattice given by a canonical HNF basis (rows). Two lattices are
/// equal iff their LatticeBasis matrices compare equal.
struct LatticeBasis {
    long n = 0;  // ambient dimension
    IntMat basis;

    std::size_t rank() const { return basis.rows(); }
};

/// The generating set of the lattice of vanishing sums of n-th roots of
/// unity: one vector per (prime p | n, offset 0 <= i < n/p), with ones at
/// positions i, i + n/p, ..., i + (p-1) n/p. Positions are 0-based; the
/// coefficient at position k multiplies the rotation e^{2 pi i k / n}.
struct GeneratorSet {
    struct Generator {
        long p;       // prime divisor of n
        long offset;  // 0 <= offset < n/p
    };

    long n = 0;
    std::vector<Generator> gens;

    std::size_t size() const { return gens.size(); }
    std::vector<Int> vector_of(std::size_t idx) const;
    IntMat matrix() const;
};

/// All generators 1_p (x) e(i, n/p) for primes p | n. Requires n >= 2.
GeneratorSet lambda_generators(long n);

/// Exact test for sum_k l_k e^{2 pi i k / n} = 0, decided by divisibility
/// of sum l_k X^k by the n-th cyclotomic polynomial. l must have length n.
bool is_vanishing(const std::vector<Int>& l, long n);

/// HNF basis of the lattice spanned by lambda_generators(n).
LatticeBasis lambda_basis(long n);

/// Independent route to the same lattice: HNF of the coefficient vectors of
/// X^i * Phi_n(X) mod X^n - 1 for i = 0..n-1.
LatticeBasis ideal_basis_oracle(long n);

/// Integer vectors orthogonal to a complex vector alpha with exact rational
/// real and imaginary parts: the kernel of the 2 x n matrix (Re alpha; Im alpha).
LatticeBasis general_lambda(const std::vector<std::pair<Rat, Rat>>& alpha);

/// Membership of v in the row lattice, by back-substitution on the HNF.
bool lattice_contains(const LatticeBasis& basis, const std::vector<Int>& v);

}  // namespace pyjama
