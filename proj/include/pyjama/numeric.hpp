#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace pyjama {

using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

/// Raised when a value that is constructed-and-checked (sign vectors,
/// extremal points, sampled margin bounds) fails its own validity check.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

/// Integer minimizing |m - r|; the upper one on half-integer ties.
Int nearest_int(const Rat& r);

/// Canonical "num/den" form, denominator always written and positive.
std::string rat_to_string(const Rat& r);

/// Parses "a/b" or a plain integer "a". Throws std::invalid_argument on junk.
Rat rat_from_string(const std::string& s);

// Small-integer number theory, by trial division. Arguments are machine
// integers; everything here is called with n <= a few thousand.
std::vector<long> prime_divisors(long n);
long totient(long n);
long radical(long n);
bool is_power_of_two(long n);

}  // namespace pyjama
