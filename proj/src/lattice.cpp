#include "pyjama/lattice.hpp"

#include <stdexcept>

#include "pyjama/intpoly.hpp"

namespace pyjama {

std::vector<Int> GeneratorSet::vector_of(std::size_t idx) const {
    const Generator& g = gens.at(idx);
    std::vector<Int> v(static_cast<std::size_t>(n), Int(0));
    const long block = n / g.p;
    for (long k = 0; k < g.p; ++k) v[static_cast<std::size_t>(g.offset + k * block)] = 1;
    return v;
}

IntMat GeneratorSet::matrix() const {
    IntMat m(gens.size(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Generator& g = gens[i];
        const long block = n / g.p;
        for (long k = 0; k < g.p; ++k)
            m.at(i, static_cast<std::size_t>(g.offset + k * block)) = 1;
    }
    return m;
}

GeneratorSet lambda_generators(long n) {
    if (n < 2) throw std::invalid_argument("lambda_generators: n must be >= 2");
    GeneratorSet set;
    set.n = n;
    for (long p : prime_divisors(n))
        for (long i = 0; i < n / p; ++i) set.gens.push_back({p, i});
    return set;
}

bool is_vanishing(const std::vector<Int>& l, long n) {
    if (static_cast<long>(l.size()) != n)
        throw std::invalid_argument("is_vanishing: vector length must equal n");
    auto [q, r] = poly_divrem(IntPoly(std::vector<Int>(l)), cyclotomic_poly(n));
    (void)q;
    return r.is_zero();
}

LatticeBasis lambda_basis(long n) {
    return {n, hnf(lambda_generators(n).matrix())};
}

LatticeBasis ideal_basis_oracle(long n) {
    if (n < 2) throw std::invalid_argument("ideal_basis_oracle: n must be >= 2");
    const IntPoly phi = cyclotomic_poly(n);
    IntMat shifts(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        IntPoly shifted = poly_mod_cyclic(IntPoly::monomial(1, static_cast<std::size_t>(i)) * phi, n);
        for (long j = 0; j < n; ++j)
            shifts.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                shifted.coeff(static_cast<std::size_t>(j));
    }
    return {n, hnf(std::move(shifts))};
}

LatticeBasis general_lambda(const std::vector<std::pair<Rat, Rat>>& alpha) {
    const std::size_t n = alpha.size();
    std::vector<RatVec> rows(2, RatVec(n));
    for (std::size_t j = 0; j < n; ++j) {
        rows[0][j] = alpha[j].first;
        rows[1][j] = alpha[j].second;
    }
    return {static_cast<long>(n), rat_kernel_basis(rows, n)};
}

bool lattice_contains(const LatticeBasis& basis, const std::vector<Int>& v) {
    if (static_cast<long>(v.size()) != basis.n)
        throw std::invalid_argument("lattice_contains: dimension mismatch");
    std::vector<Int> w = v;
    for (std::size_t i = 0; i < basis.basis.rows(); ++i) {
        std::size_t pivot = 0;
        while (pivot < w.size() && basis.basis.at(i, pivot) == 0) ++pivot;
        if (pivot == w.size()) continue;
        const Int& d = basis.basis.at(i, pivot);
        if (!mpz_divisible_p(w[pivot].get_mpz_t(), d.get_mpz_t())) return false;
        Int q = w[pivot] / d;
        if (q == 0) continue;
        for (std::size_t j = pivot; j < w.size(); ++j) w[j] -= q * basis.basis.at(i, j);
    }
    for (const Int& x : w)
        if (x != 0) return false;
    return true;
}

}  // namespace pyjama
