#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace yg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt b = base, r = 1;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// Thread-safe growing table of factorials 0!..n!.
const BigInt& factorial(std::size_t n);

inline long double to_long_double(const BigInt& x) {
    return x.convert_to<long double>();
}

} // namespace yg
