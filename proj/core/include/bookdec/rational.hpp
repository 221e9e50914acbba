#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace bookdec {

// All index values, weights and counts are exact. Counts fit Int; index values
// and decomposition weights are Rat.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 0; i < k; i++) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline Int int_pow(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, int exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0 to negative power");
        return 1 / rat_pow(base, -exp);
    }
    Rat r = 1, b = base;
    unsigned e = static_cast<unsigned>(exp);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// "3", "-7/2"; always lowest terms with positive denominator on output.
inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

}  // namespace bookdec
