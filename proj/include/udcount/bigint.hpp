#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace udcount {

using big_int = boost::multiprecision::cpp_int;

inline big_int pow2(std::size_t exponent) {
    big_int r = 1;
    r <<= exponent;
    return r;
}

inline std::string to_decimal(const big_int& v) { return v.str(); }

}  // namespace udcount
