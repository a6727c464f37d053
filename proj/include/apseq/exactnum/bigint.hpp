#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "apseq/error.hpp"

namespace apseq {

/// Arbitrary-precision signed integer.
using BigInteger = boost::multiprecision::cpp_int;

inline BigInteger big_abs(const BigInteger& x) { return x < 0 ? BigInteger(-x) : x; }

inline BigInteger big_gcd(const BigInteger& a, const BigInteger& b) {
    return boost::multiprecision::gcd(big_abs(a), big_abs(b));
}

inline BigInteger factorial(std::int64_t n) {
    if (n < 0) throw input_error("factorial of a negative integer");
    BigInteger r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Parses an optionally signed decimal integer. Rejects anything else.
inline BigInteger parse_big_integer(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw input_error("empty integer literal '" + std::string(text) + "'");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw input_error("invalid integer literal '" + std::string(text) + "'");
    }
    BigInteger value(std::string(text.substr(pos)));
    return negative ? BigInteger(-value) : value;
}

inline std::string to_string(const BigInteger& x) { return x.str(); }

/// Returns the value as int64, throwing when it does not fit.
inline std::int64_t to_int64(const BigInteger& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw input_error("integer " + x.str() + " does not fit in 64 bits");
    return x.convert_to<std::int64_t>();
}

}  // namespace apseq
