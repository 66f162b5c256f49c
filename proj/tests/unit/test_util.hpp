#pragma once

#include <functional>
#include <string>

#include "lng/error.hpp"
#include "lng/exactnum.hpp"

namespace lng::testing {

// code of the lng::Error thrown by f, or "" when nothing is thrown
inline std::string error_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

inline ExactScalar quad(long D, const char* x, const char* y) {
    return ExactScalar(QuadElem(D, parse_rational(x), parse_rational(y)));
}

inline ExactScalar rat(const char* v) { return ExactScalar(parse_rational(v)); }

inline double dist(cplx a, cplx b) { return std::abs(a - b); }

}  // namespace lng::testing
