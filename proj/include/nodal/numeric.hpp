#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nodal {

// All lattice and discrepancy arithmetic is exact: arbitrary-precision
// integers and rationals, never floating point. Parity and squareness
// arguments do not survive rounding.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string int_to_string(const Int& v) { return v.str(); }

// Rationals print as "p/q" in lowest terms with positive denominator;
// integral values print without the denominator.
inline std::string rat_to_string(const Rat& v) {
    const Int num = numerator(v);
    const Int den = denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Int int_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    return Int(s);
}

inline Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(int_from_string(s));
    const Int num = int_from_string(s.substr(0, slash));
    const Int den = int_from_string(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    // The two-argument constructor rejects negative denominators, so
    // normalize the sign here rather than surface a cryptic error.
    if (den < 0) return Rat(-num, -den);
    return Rat(num, den);
}

inline Int rat_floor(const Rat& v) {
    const Int num = numerator(v);
    const Int den = denominator(v);  // > 0 after normalization
    Int q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

inline bool is_perfect_square(const Int& v) {
    if (v < 0) return false;
    const Int root = sqrt(v);
    return root * root == v;
}

}  // namespace nodal
