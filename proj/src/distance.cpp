#include "pyjama/distance.hpp"

#include <stdexcept>
#include <string>

namespace pyjama {

RatVec half_ones(long n) {
    return RatVec(static_cast<std::size_t>(n), make_rat(1, 2));
}

bool integral_inner_products(const IntMat& rows, const RatVec& xi) {
    if (rows.rows() > 0 && rows.cols() != xi.size())
        throw std::invalid_argument("integral_inner_products: dimension mismatch");
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        Rat dot = 0;
        for (std::size_t j = 0; j < xi.size(); ++j) {
            if (rows.at(i, j) != 0) dot += Rat(rows.at(i, j)) * xi[j];
        }
        if (dot.get_den() != 1) return false;
    }
    return true;
}

bool in_E(const RatVec& xi, const LatticeBasis& basis) {
    if (static_cast<long>(xi.size()) != basis.n)
        throw std::invalid_argument("in_E: dimension mismatch");
    return integral_inner_products(basis.basis, xi);
}

Rat hyperplane_linf_distance(const std::vector<Int>& l, const Int& m, const RatVec& c) {
    if (l.size() != c.size())
        throw std::invalid_argument("hyperplane_linf_distance: dimension mismatch");
    Int norm1 = 0;
    Rat dot = 0;
    for (std::size_t j = 0; j < l.size(); ++j) {
        norm1 += abs(l[j]);
        if (l[j] != 0) dot += Rat(l[j]) * c[j];
    }
    if (norm1 == 0) throw std::invalid_argument("hyperplane_linf_distance: l must be nonzero");
    return rat_abs(Rat(m) - dot) / Rat(norm1);
}

Rat delta_rank_one(const std::vector<Int>& l) {
    Int g = 0, norm1 = 0;
    for (const Int& x : l) {
        Int a;
        mpz_gcd(a.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        g = a;
        norm1 += abs(x);
    }
    if (g != 1) throw std::invalid_argument("delta_rank_one: l must be primitive (gcd 1)");
    if (mpz_even_p(norm1.get_mpz_t())) return Rat(0);
    return make_rat(Int(1), 2 * norm1);
}

std::optional<long> smallest_odd_prime_divisor(long n) {
    if (n < 2) throw std::invalid_argument("smallest_odd_prime_divisor: n must be >= 2");
    while (n % 2 == 0) n /= 2;
    if (n == 1) return std::nullopt;
    for (long p = 3; p * p <= n; p += 2)
        if (n % p == 0) return p;
    return n;
}

DeltaResult delta_closed_form(long n) {
    if (n < 2) throw std::invalid_argument("delta_closed_form: n must be >= 2");
    DeltaResult r;
    r.n = n;
    r.method = DeltaMethod::closed_form;
    r.smallest_odd_prime = smallest_odd_prime_divisor(n);
    r.delta = r.smallest_odd_prime ? make_rat(1, 2 * *r.smallest_odd_prime) : Rat(0);
    return r;
}

Rat epsilon_bound(long n) { return make_rat(1, 2) - delta_closed_form(n).delta; }

IntPoly psi_poly(long q, long p) {
    auto is_prime = [](long v) {
        if (v < 2) return false;
        for (long d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    };
    if (!is_prime(q)) throw std::invalid_argument("psi_poly: q must be prime");
    if (q == 2) {
        return IntPoly(std::vector<Int>{-1, 1});  // X - 1
    }
    if (!is_prime(p) || p % 2 == 0) throw std::invalid_argument("psi_poly: p must be an odd prime");
    if (q == p) return cyclotomic_poly(p);
    if (q < p) throw std::invalid_argument("psi_poly: odd q must satisfy q >= p");
    // Split chosen so psi(1) = (q+p)/2 - (q-p)/2 = p.
    std::vector<Int> c(static_cast<std::size_t>(q), Int(0));
    const long split = (q + p) / 2;
    for (long i = 0; i < q; ++i) c[static_cast<std::size_t>(i)] = i < split ? 1 : -1;
    return IntPoly(std::move(c));
}

IntPoly t_poly(long n) {
    if (n < 2) throw std::invalid_argument("t_poly: n must be >= 2");
    const auto p = smallest_odd_prime_divisor(n);
    if (!p) throw std::invalid_argument("t_poly: undefined for powers of two");

    const long m = radical(n);
    std::vector<Int> geo(static_cast<std::size_t>(n / m), Int(1));
    IntPoly t(std::move(geo));
    for (long q : prime_divisors(n)) {
        // psi(q) evaluated at X^{n/q}
        const IntPoly psi = psi_poly(q, *p);
        std::vector<Int> stretched(static_cast<std::size_t>(psi.degree() * (n / q)) + 1, Int(0));
        for (long i = 0; i <= psi.degree(); ++i)
            stretched[static_cast<std::size_t>(i * (n / q))] = psi.coeff(static_cast<std::size_t>(i));
        t = t * IntPoly(std::move(stretched));
    }

    long monomials = 0;
    for (const Int& c : t.coeffs()) {
        if (c == 0) continue;
        if (c != 1 && c != -1)
            throw invariant_violation("t_poly: coefficient outside {-1,0,1} at n=" + std::to_string(n));
        ++monomials;
    }
    if (monomials != n)
        throw invariant_violation("t_poly: expected exactly n signed monomials at n=" + std::to_string(n));
    return t;
}

std::vector<int> sign_vector(long n) {
    const IntPoly rho = poly_mod_cyclic(t_poly(n), n);
    std::vector<int> eps(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j) {
        const Int& c = rho.coeff(static_cast<std::size_t>(j));
        if (c != 1 && c != -1)
            throw invariant_violation("sign_vector: coefficient of X^" + std::to_string(j) +
                                      " is not +-1 at n=" + std::to_string(n));
        eps[static_cast<std::size_t>(j)] = c == 1 ? 1 : -1;
    }
    return eps;
}

XiVector xi_vector(long n) {
    XiVector v;
    v.n = n;
    const auto p = smallest_odd_prime_divisor(n);
    if (!p) throw std::invalid_argument("xi_vector: undefined for powers of two");
    v.p = *p;
    v.eps = sign_vector(n);
    v.xi.reserve(static_cast<std::size_t>(n));
    for (int e : v.eps) v.xi.push_back(make_rat(*p - e, 2 * *p));

    // Checked, not assumed: membership against the full generator set and
    // the exact distance from the half-ones center.
    if (!integral_inner_products(lambda_generators(n).matrix(), v.xi))
        throw invariant_violation("xi_vector: membership check failed at n=" + std::to_string(n));
    const Rat expected = make_rat(1, 2 * *p);
    Rat dist = 0;
    for (const Rat& x : v.xi) {
        Rat d = rat_abs(x - make_rat(1, 2));
        if (d > dist) dist = d;
    }
    if (dist != expected)
        throw invariant_violation("xi_vector: distance check failed at n=" + std::to_string(n));
    return v;
}

bool half_ones_in_E(long n) {
    if (!is_power_of_two(n) || n < 2)
        throw std::invalid_argument("half_ones_in_E: n must be a power of two, n >= 2");
    return in_E(half_ones(n), lambda_basis(n));
}

}  // namespace pyjama
