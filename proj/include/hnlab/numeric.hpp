#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hnlab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised for inputs outside an operation's domain (zero class, invalid
// object data, unreachable search bounds, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline int sign(const Int& v) { return v.sign(); }
inline int sign(const Rational& v) { return v.sign(); }

inline Int abs_int(const Int& v) { return v.sign() < 0 ? Int(-v) : v; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs_int(a / gcd_int(a, b) * b);
}

// floor(a / b) for b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
    return q;
}

inline Int floor_rational(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

inline bool is_odd(const Int& v) { return bit_test(abs_int(v), 0); }

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator in rational '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw DomainError("malformed rational '" + s + "'");
    }
}

// Integer square root test for the surd code.
inline bool is_perfect_square(const Int& n) {
    if (n.sign() < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

}  // namespace hnlab
