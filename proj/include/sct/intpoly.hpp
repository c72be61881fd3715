#pragma once

#include "sct/numeric.hpp"

#include <map>
#include <sstream>

namespace sct {

// Dense univariate polynomial over the integers.  Invariant: no trailing zero
// coefficients, so degree() is well defined and equality is structural.
struct IntPoly {
    std::vector<Int> c;  // c[i] is the coefficient of x^i

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(Int v) { return IntPoly{{std::move(v)}}; }
    static IntPoly monomial(std::size_t deg, Int coeff = 1) {
        std::vector<Int> v(deg + 1, Int(0));
        v[deg] = std::move(coeff);
        return IntPoly{std::move(v)};
    }

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }  // -1 for zero

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    const Int& coeff(std::size_t i) const {
        static const Int kZero(0);
        return i < c.size() ? c[i] : kZero;
    }

    bool operator==(const IntPoly& o) const { return c == o.c; }

    IntPoly operator+(const IntPoly& o) const {
        std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
        for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
        return IntPoly{std::move(r)};
    }

    IntPoly operator-(const IntPoly& o) const {
        std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
        for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
        return IntPoly{std::move(r)};
    }

    IntPoly operator-() const {
        std::vector<Int> r(c);
        for (auto& v : r) v = -v;
        return IntPoly{std::move(r)};
    }

    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<Int> r(c.size() + o.c.size() - 1, Int(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
        }
        return IntPoly{std::move(r)};
    }

    std::string str(const std::string& var = "x") const;
};

// Division by a monic divisor stays in Z[x]; quotient and remainder are exact.
inline std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& num, const IntPoly& den) {
    detail::require(!den.is_zero() && den.c.back() == 1, "divmod_monic: divisor must be monic");
    std::vector<Int> rem(num.c);
    long dd = den.degree();
    long qd = static_cast<long>(rem.size()) - 1 - dd;
    if (qd < 0) return {IntPoly::zero(), num};
    std::vector<Int> quo(qd + 1, Int(0));
    for (long i = static_cast<long>(rem.size()) - 1; i >= dd; --i) {
        Int f = rem[i];
        if (f == 0) continue;
        quo[i - dd] = f;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den.c[j];
    }
    return {IntPoly{std::move(quo)}, IntPoly{std::move(rem)}};
}

inline IntPoly div_exact(const IntPoly& num, const IntPoly& den) {
    auto [q, r] = divmod_monic(num, den);
    detail::internal_check(r.is_zero(), "div_exact: nonzero remainder");
    return q;
}

// The N-th cyclotomic polynomial, by exact division of x^N - 1 by the product
// of Phi_d over proper divisors d of N.  Results are memoized; the groups in
// play keep N small, so the quadratic recursion is irrelevant.
inline const IntPoly& cyclotomic_polynomial(long N) {
    detail::require(N >= 1, "cyclotomic_polynomial: N must be positive");
    static std::map<long, IntPoly> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    IntPoly xn1 = IntPoly::monomial(static_cast<std::size_t>(N)) - IntPoly::constant(1);
    IntPoly prod = IntPoly::constant(1);
    for (long d : divisors(N))
        if (d < N) prod = prod * cyclotomic_polynomial(d);
    IntPoly phi = div_exact(xn1, prod);
    detail::internal_check(phi.degree() == euler_phi(N), "cyclotomic degree != phi(N)");
    return cache.emplace(N, std::move(phi)).first->second;
}

inline std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Int& v = c[i];
        if (v == 0) continue;
        Int a = v < 0 ? Int(-v) : v;
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) out << a.str();
        if (i > 0) {
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace sct
