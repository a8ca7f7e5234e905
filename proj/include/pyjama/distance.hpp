#pragma once

#include <optional>
#include <vector>

#include "pyjama/intpoly.hpp"
#include "pyjama/lattice.hpp"
#include "pyjama/numeric.hpp"

namespace pyjama {

enum class DeltaMethod { closed_form, rank_one, oracle };

/// Exact distance delta with its provenance. For n a power of two the
/// distance is 0 and smallest_odd_prime is absent; otherwise it is 1/(2p).
struct DeltaResult {
    long n = 0;
    Rat delta;
    DeltaMethod method = DeltaMethod::closed_form;
    std::optional<long> smallest_odd_prime;
};

/// The extremal vector: xi_j = (p - eps_j) / (2p) with eps_j = +-1. Both
/// lattice membership and the exact distance 1/(2p) from the half-ones
/// center are verified at construction.
struct XiVector {
    long n = 0;
    long p = 0;
    std::vector<int> eps;
    RatVec xi;
};

/// (1/2, 1/2, ..., 1/2), the center all distances are measured from.
RatVec half_ones(long n);

/// True iff every row of `rows` has an integral inner product with xi.
bool integral_inner_products(const IntMat& rows, const RatVec& xi);

/// Membership of xi in the dual-integrality set of the lattice: l . xi
/// integral for every basis row (equivalently, every lattice element).
bool in_E(const RatVec& xi, const LatticeBasis& basis);

/// Exact l-infinity distance from center c to the hyperplane l . x = m:
/// |m - l . c| / ||l||_1. Rejects l = 0.
Rat hyperplane_linf_distance(const std::vector<Int>& l, const Int& m, const RatVec& c);

/// Distance for a rank-one lattice spanned by a primitive vector l:
/// 0 when ||l||_1 is even, else 1/(2 ||l||_1). Rejects non-primitive l.
Rat delta_rank_one(const std::vector<Int>& l);

/// Least odd prime dividing n, absent when n is a power of two. n >= 2.
std::optional<long> smallest_odd_prime_divisor(long n);

/// Closed-form delta_n: 0 for powers of two, else 1/(2p). n >= 2.
DeltaResult delta_closed_form(long n);

/// 1/2 - delta_n: the supremum of margins epsilon admitting a witness.
Rat epsilon_bound(long n);

/// Building blocks of the extremal construction, for n not a power of two
/// with smallest odd prime divisor p:
///   psi(2) = X - 1,  psi(p) = Phi_p,
///   psi(q) = sum_{i < (q+p)/2} X^i - sum_{(q+p)/2 <= i < q} X^i   (q > p),
/// so that psi(q)(1) = p for every odd prime q.
IntPoly psi_poly(long q, long p);

/// The product (1 + X + ... + X^{n/m - 1}) * prod_{q | n} psi(q)(X^{n/q}),
/// m the squarefree part of n: exactly n monomials, all coefficients +-1,
/// exponents pairwise incongruent mod n. Rejects powers of two.
IntPoly t_poly(long n);

/// Coefficients of t_poly(n) folded mod X^n - 1. Every entry is checked to
/// be +-1; a violation throws invariant_violation.
std::vector<int> sign_vector(long n);

/// The checked extremal vector for n not a power of two.
XiVector xi_vector(long n);

/// For n a power of two: membership of the half-ones center itself.
bool half_ones_in_E(long n);

}  // namespace pyjama
