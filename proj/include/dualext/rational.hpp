#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace dualext {

/// Exact rational scalar. All linear algebra in this library is exact;
/// equality tests are true equalities, there is no epsilon anywhere.
using Rat = boost::multiprecision::cpp_rational;

/// Serialize as reduced "p" or "p/q" with positive denominator.
inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

/// Parse "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(boost::multiprecision::cpp_int(s));
        }
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den <= 0) {
            throw std::invalid_argument("rational denominator must be positive: " + s);
        }
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

}  // namespace dualext
