#ifndef TAUT_TESTS_SUPPORT_HPP
#define TAUT_TESTS_SUPPORT_HPP

#include "doctest.h"
#include "taut/exactmath.hpp"

namespace doctest {

template <>
struct StringMaker<taut::MultiPoly> {
    static String convert(const taut::MultiPoly& p) { return p.to_string().c_str(); }
};

template <>
struct StringMaker<taut::Rational> {
    static String convert(const taut::Rational& r) { return taut::to_string(r).c_str(); }
};

}  // namespace doctest

#endif
