#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "symcyc/matrix.hpp"

namespace symcyc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntMat = Matrix<Int>;
using IntVec = std::vector<Int>;

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace symcyc
