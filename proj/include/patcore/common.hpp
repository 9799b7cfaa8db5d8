#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace patcore {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error hierarchy. Everything derives from std::runtime_error or
// std::invalid_argument so callers can catch broadly.

struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_encoding : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Division by a non-unit, square root of a series without constant term 1,
/// or a substitution that would lose precision.
struct arithmetic_domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct unsupported_size : std::length_error {
    using std::length_error::length_error;
};

/// A consistency condition that the mathematics guarantees was violated.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Binomial coefficient with C(a, b) = 0 outside 0 <= b <= a.
inline BigInt binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

inline BigInt catalan(std::int64_t n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

inline BigInt factorial(std::int64_t n) {
    BigInt r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace patcore
