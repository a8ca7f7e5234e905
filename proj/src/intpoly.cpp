#include "pyjama/intpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace pyjama {

namespace {
const Int kZero = 0;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(Int coeff, std::size_t exp) {
    if (coeff == 0) return IntPoly();
    std::vector<Int> c(exp + 1, Int(0));
    c[exp] = std::move(coeff);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::cyclic_modulus(long n) {
    if (n < 1) throw std::invalid_argument("cyclic_modulus: n must be positive");
    std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
    c.front() = -1;
    c.back() = 1;
    return IntPoly(std::move(c));
}

const Int& IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(c));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Int v = c_[i];
        if (first) {
            if (v < 0) os << "-", v = -v;
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        if (i == 0 || v != 1) os << v.get_str();
        if (i > 0) {
            os << "X";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<IntPoly, IntPoly> poly_divrem(const IntPoly& a, const IntPoly& b) {
    if (!b.is_monic())
        throw std::invalid_argument("poly_divrem: divisor must be monic");
    std::vector<Int> rem = a.coeffs();
    const long db = b.degree();
    std::vector<Int> quo;
    if (a.degree() >= db) quo.assign(static_cast<std::size_t>(a.degree() - db) + 1, Int(0));
    for (long i = a.degree(); i >= db; --i) {
        Int lead = rem[static_cast<std::size_t>(i)];
        if (lead == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = lead;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= lead * b.coeff(static_cast<std::size_t>(j));
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly poly_mod_cyclic(const IntPoly& a, long n) {
    if (n < 1) throw std::invalid_argument("poly_mod_cyclic: n must be positive");
    std::vector<Int> c(static_cast<std::size_t>(n), Int(0));
    const auto& src = a.coeffs();
    for (std::size_t i = 0; i < src.size(); ++i)
        c[i % static_cast<std::size_t>(n)] += src[i];
    return IntPoly(std::move(c));
}

IntPoly cyclotomic_poly(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    static std::mutex mu;
    static std::map<long, IntPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // Phi_n = (X^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up so
    // every recursive value lands in the cache.
    std::vector<long> divisors;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    for (long d : divisors) {
        if (cache.count(d)) continue;
        IntPoly prod = IntPoly::one();
        for (long e : divisors)
            if (d % e == 0 && e < d) prod = prod * cache.at(e);
        auto [q, r] = poly_divrem(IntPoly::cyclic_modulus(d), prod);
        if (!r.is_zero())
            throw std::logic_error("cyclotomic_poly: non-exact division");
        cache.emplace(d, std::move(q));
    }
    return cache.at(n);
}

}  // namespace pyjama
