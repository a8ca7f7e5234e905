#pragma once

#include <vector>

#include "pyjama/intmat.hpp"
#include "pyjama/lattice.hpp"
#include "pyjama/numeric.hpp"

namespace pyjama {

/// Simultaneous hyperplane system: one equation l_g . x = rhs_g per row of
/// `lattice_rows`, with distances measured from `center`.
struct AffineSystem {
    IntMat lattice_rows;
    std::vector<Int> rhs;
    RatVec center;
};

struct LpResult {
    bool feasible = false;
    Rat value;      // min l-infinity distance from center, when feasible
    RatVec argmin;  // a point attaining it, exactly
};

/// Exact Chebyshev projection: min ||x - center||_inf subject to
/// lattice_rows . x = rhs, solved by a rational two-phase simplex with
/// Bland's rule. Infeasible systems are a result, not an error.
/// Rejects zero rows.
LpResult chebyshev_min_linf(const AffineSystem& sys);

/// Brute-force recomputation of delta: enumerate the integer right-hand
/// sides M with |M - l.c| <= ||l||_1 * upper for each basis row, solve the
/// Chebyshev projection for every combination, return the least value.
/// `upper` must be a valid upper bound for delta; if the search box turns
/// out empty the bound is doubled (capped at 1/2, which always suffices).
/// A rank-0 basis gives 0 immediately. Rejects upper < 0.
Rat delta_oracle(const LatticeBasis& basis, const RatVec& c, const Rat& upper);

}  // namespace pyjama
