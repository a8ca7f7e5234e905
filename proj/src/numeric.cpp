#include "pyjama/numeric.hpp"

#include <stdexcept>

namespace pyjama {

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Int nearest_int(const Rat& r) { return rat_floor(r + make_rat(1, 2)); }

std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::vector<long> prime_divisors(long n) {
    if (n < 1) throw std::invalid_argument("prime_divisors: n must be positive");
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

long totient(long n) {
    long t = n;
    for (long p : prime_divisors(n)) t = t / p * (p - 1);
    return t;
}

long radical(long n) {
    long r = 1;
    for (long p : prime_divisors(n)) r *= p;
    return r;
}

bool is_power_of_two(long n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace pyjama
