#pragma once

#include "sct/intpoly.hpp"

#include <optional>
#include <sstream>
#include <tuple>

namespace sct {

// An element of the ring of integers Z[zeta_N] of the N-th cyclotomic field,
// stored exactly as an integer vector in the power basis 1, zeta, ...,
// zeta^(phi(N)-1) reduced modulo the N-th cyclotomic polynomial.
//
// Values of different conductors are lifted to the lcm before any mixed
// operation (zeta_M -> zeta_L^(L/M)), so a Cyclo born in Q(zeta_3) compares
// equal to the same number represented in Q(zeta_6).  There is no
// floating-point shadow anywhere: every identity checked by this library is
// an exact statement about these vectors.
class Cyclo {
public:
    Cyclo() : conductor_(1), coeffs_(1, Int(0)) {}

    static Cyclo integer(Int v) {
        Cyclo c;
        c.coeffs_[0] = std::move(v);
        return c;
    }

    // zeta_N^k
    static Cyclo zeta_pow(long N, long k) {
        detail::require(N >= 1, "zeta_pow: conductor must be positive");
        std::vector<Int> raw(static_cast<std::size_t>(N), Int(0));
        raw[static_cast<std::size_t>(mod_norm(k, N))] = 1;
        return Cyclo(N, reduce(std::move(raw), N));
    }

    static Cyclo zeta(long N) { return zeta_pow(N, 1); }

    long conductor() const { return conductor_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& v : coeffs_)
            if (v != 0) return false;
        return true;
    }

    // Representation at conductor M (current conductor must divide M).
    Cyclo lifted_to(long M) const {
        if (M == conductor_) return *this;
        detail::require(M % conductor_ == 0, "lifted_to: conductor must divide target");
        long step = M / conductor_;
        std::vector<Int> raw(static_cast<std::size_t>(M), Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            raw[i * static_cast<std::size_t>(step)] = coeffs_[i];
        return Cyclo(M, reduce(std::move(raw), M));
    }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        auto [x, y, N] = aligned(a, b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return Cyclo(N, std::move(x));
    }

    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
        auto [x, y, N] = aligned(a, b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
        return Cyclo(N, std::move(x));
    }

    Cyclo operator-() const {
        Cyclo r = *this;
        for (auto& v : r.coeffs_) v = -v;
        return r;
    }

    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        auto [x, y, N] = aligned(a, b);
        std::vector<Int> raw(2 * x.size() + 1, Int(0));
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j) raw[i + j] += x[i] * y[j];
        }
        return Cyclo(N, reduce(std::move(raw), N));
    }

    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
        long N = std::lcm(a.conductor_, b.conductor_);
        return a.lifted_to(N).coeffs_ == b.lifted_to(N).coeffs_;
    }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // Ring automorphism zeta -> zeta^j, defined for gcd(j, N) = 1.
    Cyclo galois(long j) const {
        detail::require(std::gcd(mod_norm(j, conductor_), conductor_) == 1,
                        "galois: j must be coprime to the conductor");
        std::vector<Int> raw(static_cast<std::size_t>(conductor_), Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            raw[static_cast<std::size_t>(mod_norm(static_cast<long>(i) * j, conductor_))] += coeffs_[i];
        return Cyclo(conductor_, reduce(std::move(raw), conductor_));
    }

    // The value as a rational integer, if it is one.
    std::optional<Int> as_integer() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return std::nullopt;
        return coeffs_[0];
    }

    // Debug form, e.g. "z5^1 + z5^4" or "-2".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Int& v = coeffs_[i];
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
                if (a != 1) out << "*";
                out << "z" << conductor_ << "^" << i;
            }
        }
        return out.str();
    }

private:
    Cyclo(long N, std::vector<Int> reduced) : conductor_(N), coeffs_(std::move(reduced)) {}

    // Fold exponents with zeta^N = 1, then take the remainder mod Phi_N.
    static std::vector<Int> reduce(std::vector<Int> raw, long N) {
        std::size_t n = static_cast<std::size_t>(N);
        std::vector<Int> folded(n, Int(0));
        for (std::size_t i = 0; i < raw.size(); ++i)
            if (raw[i] != 0) folded[i % n] += raw[i];
        auto [q, r] = divmod_monic(IntPoly{std::move(folded)}, cyclotomic_polynomial(N));
        (void)q;
        std::vector<Int> out(static_cast<std::size_t>(euler_phi(N)), Int(0));
        for (std::size_t i = 0; i < r.c.size(); ++i) out[i] = std::move(r.c[i]);
        return out;
    }

    static std::tuple<std::vector<Int>, std::vector<Int>, long> aligned(const Cyclo& a, const Cyclo& b) {
        if (a.conductor_ == b.conductor_) return {a.coeffs_, b.coeffs_, a.conductor_};
        long N = std::lcm(a.conductor_, b.conductor_);
        return {a.lifted_to(N).coeffs_, b.lifted_to(N).coeffs_, N};
    }

    long conductor_;
    std::vector<Int> coeffs_;  // length phi(conductor_)
};

inline Cyclo operator*(const Int& k, const Cyclo& c) { return Cyclo::integer(k) * c; }
inline Cyclo operator*(long k, const Cyclo& c) { return Cyclo::integer(Int(k)) * c; }

}  // namespace sct
