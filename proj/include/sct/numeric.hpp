#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sct {

// Exact integer type for all algebraic coefficients.  Class-sum products and
// character sums must never wrap, so everything arithmetic-critical uses this.
using Int = boost::multiprecision::cpp_int;

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline void internal_check(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error("internal check failed: " + msg);
}

}  // namespace detail

// Guard violations (enumeration limits, order limits) get their own type so
// the CLI can report them as usage errors.
struct guard_exceeded : std::invalid_argument {
    explicit guard_exceeded(const std::string& msg) : std::invalid_argument(msg) {}
};

inline long mod_norm(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline std::vector<long> divisors(long n) {
    detail::require(n >= 1, "divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline long euler_phi(long n) {
    detail::require(n >= 1, "euler_phi: n must be positive");
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace sct
