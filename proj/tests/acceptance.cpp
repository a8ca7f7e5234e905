// Acceptance suite: one line per criterion, exit 0 only if every criterion
// holds within its time budget. Checks are made against independent
// recomputations wherever one exists (trial division, generator matrices,
// the ideal-shift lattice, the rank-one closed form).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pyjama/distance.hpp"
#include "pyjama/lattice.hpp"
#include "pyjama/oracle.hpp"
#include "pyjama/witness.hpp"
#include "support.hpp"

using namespace pyjama;
using testsupport::SplitMix64;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

long smallest_odd_prime_by_trial(long n) {
    while (n % 2 == 0) n /= 2;
    if (n == 1) return 0;
    for (long p = 3; p * p <= n; p += 2)
        if (n % p == 0) return p;
    return n;
}

bool criterion_delta_table(std::string& detail) {
    for (long n = 2; n <= 200; ++n) {
        const Rat d = delta_closed_form(n).delta;
        const long p = smallest_odd_prime_by_trial(n);
        const Rat expect = p == 0 ? Rat(0) : make_rat(1, 2 * p);
        if (d != expect) {
            detail = "mismatch at n = " + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_extremal_construction(std::string& detail) {
    for (long n = 3; n <= 200; ++n) {
        if (is_power_of_two(n)) continue;
        XiVector v;
        try {
            v = xi_vector(n);
        } catch (const std::exception& e) {
            detail = "construction failed at n = " + std::to_string(n) + ": " + e.what();
            return false;
        }
        for (int e : v.eps)
            if (e != 1 && e != -1) {
                detail = "non-unit sign at n = " + std::to_string(n);
                return false;
            }
        if (!integral_inner_products(lambda_generators(n).matrix(), v.xi)) {
            detail = "membership failed at n = " + std::to_string(n);
            return false;
        }
        Rat dist = 0;
        for (const Rat& x : v.xi) dist = std::max(dist, rat_abs(x - make_rat(1, 2)));
        if (dist != make_rat(1, 2 * v.p)) {
            detail = "distance failed at n = " + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_lattice_oracle(std::string& detail) {
    for (long n = 2; n <= 30; ++n)
        if (!(lambda_basis(n).basis == ideal_basis_oracle(n).basis)) {
            detail = "basis mismatch at n = " + std::to_string(n);
            return false;
        }
    for (long n = 2; n <= 100; ++n)
        if (static_cast<long>(lambda_basis(n).rank()) != n - totient(n)) {
            detail = "rank mismatch at n = " + std::to_string(n);
            return false;
        }
    return true;
}

bool criterion_lp_oracle(std::string& detail) {
    for (long n : {2, 3, 4, 5, 6, 8, 9, 10, 12}) {
        if (delta_oracle(lambda_basis(n), half_ones(n), make_rat(1, 2)) !=
            delta_closed_form(n).delta) {
            detail = "oracle disagrees at n = " + std::to_string(n);
            return false;
        }
    }
    SplitMix64 rng(2024);
    int done = 0;
    while (done < 50) {
        const std::size_t dim = 1 + rng.next() % 6;
        std::vector<Int> l(dim);
        Int g = 0;
        for (auto& x : l) {
            x = rng.range(-5, 5);
            Int t;
            mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            g = t;
        }
        if (g != 1) continue;
        ++done;
        LatticeBasis basis{static_cast<long>(dim), IntMat::from_rows({l})};
        if (delta_oracle(basis, half_ones(static_cast<long>(dim)), make_rat(1, 2)) !=
            delta_rank_one(l)) {
            detail = "rank-one disagreement, trial " + std::to_string(done);
            return false;
        }
    }
    return true;
}

bool criterion_monotonicity(std::string& detail) {
    for (long n = 2; n <= 64; ++n)
        for (long m = 2; m <= n; ++m)
            if (n % m == 0 && delta_closed_form(m).delta > delta_closed_form(n).delta) {
                detail = "delta(" + std::to_string(m) + ") > delta(" + std::to_string(n) + ")";
                return false;
            }
    return true;
}

const std::vector<long> kWitnessSet{3, 4, 5, 6, 8, 9, 12, 15};

bool criterion_witness_lower(std::string& detail) {
    for (long n : kWitnessSet) {
        const Witness w = search_witness(n, default_search_config(n));
        const double bound = 0.5 - delta_closed_form(n).delta.get_d() - 1e-3;
        if (w.margin < bound) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "n = %ld: margin %.6f < %.6f", n, w.margin, bound);
            detail = buf;
            return false;
        }
    }
    return true;
}

bool criterion_witness_upper(std::string& detail) {
    for (long n : kWitnessSet) {
        try {
            sample_upper_check(n, 100000, 10.0, 1);
        } catch (const invariant_violation& e) {
            detail = "n = " + std::to_string(n) + ": " + e.what();
            return false;
        }
    }
    return true;
}

bool criterion_correction_regression(std::string& detail) {
    // psi(5) with the uncorrected split is 1 + X + X^2 + X^3 + X^4; the
    // resulting candidate at n = 15 must fail E-membership, the corrected
    // construction must pass.
    std::vector<Int> a(11, Int(0)), b(13, Int(0));
    for (long i : {0, 5, 10}) a[static_cast<std::size_t>(i)] = 1;
    for (long i : {0, 3, 6, 9, 12}) b[static_cast<std::size_t>(i)] = 1;
    const IntPoly rho = poly_mod_cyclic(IntPoly(std::move(a)) * IntPoly(std::move(b)), 15);
    RatVec candidate;
    for (long j = 0; j < 15; ++j)
        candidate.push_back(make_rat(3 - rho.coeff(static_cast<std::size_t>(j)).get_si(), 6));
    if (integral_inner_products(lambda_generators(15).matrix(), candidate)) {
        detail = "uncorrected candidate unexpectedly lies in E";
        return false;
    }
    if (!integral_inner_products(lambda_generators(15).matrix(), xi_vector(15).xi)) {
        detail = "corrected candidate fails membership";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"closed-form delta table, 2 <= n <= 200", 1.0, criterion_delta_table},
        {"extremal construction checks, non-power-of-two n <= 200", 10.0,
         criterion_extremal_construction},
        {"generator lattice equals ideal lattice (n <= 30), rank (n <= 100)", 30.0,
         criterion_lattice_oracle},
        {"LP oracle equals closed form and rank-one formula", 300.0, criterion_lp_oracle},
        {"divisor monotonicity of delta, n <= 64", 1.0, criterion_monotonicity},
        {"witness search reaches 1/2 - delta - 1e-3", 60.0, criterion_witness_lower},
        {"sampled margins never exceed 1/2 - delta + 1e-9", 30.0, criterion_witness_upper},
        {"uncorrected psi(5) split fails E-membership at n = 15", 1.0,
         criterion_correction_regression},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = secs < criteria[i].budget_seconds;
        if (!in_budget) detail = "time budget exceeded";
        const bool pass = ok && in_budget;
        failures += pass ? 0 : 1;
        std::printf("[%s] %zu. %s (%.2fs of %.0fs)%s%s\n", pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), secs, criteria[i].budget_seconds,
                    detail.empty() ? "" : " -- ", detail.c_str());
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
