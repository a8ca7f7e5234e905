#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pyjama/numeric.hpp"

namespace pyjama {

/// Dense integer-coefficient polynomial. coeffs[i] is the coefficient of
/// X^i; the highest-index coefficient is nonzero unless the polynomial is
/// the zero polynomial (empty coefficient vector).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return monomial(1, 0); }
    static IntPoly monomial(Int coeff, std::size_t exp);
    /// X^n - 1
    static IntPoly cyclic_modulus(long n);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    /// Coefficient of X^i, zero beyond the degree.
    const Int& coeff(std::size_t i) const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Int eval(const Int& x) const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

    std::string str() const;

private:
    void normalize();
    std::vector<Int> c_;
};

/// Exact division with remainder by a monic divisor: a = q*b + r with
/// deg r < deg b. Throws std::invalid_argument if b is not monic.
std::pair<IntPoly, IntPoly> poly_divrem(const IntPoly& a, const IntPoly& b);

/// Remainder of a modulo X^n - 1: exponents folded mod n.
IntPoly poly_mod_cyclic(const IntPoly& a, long n);

/// The n-th cyclotomic polynomial, computed by exact division
/// (X^n - 1) / prod of the lower-order cyclotomics. Memoized; thread-safe.
IntPoly cyclotomic_poly(long n);

}  // namespace pyjama
