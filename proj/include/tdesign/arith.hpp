#pragma once

// Exact integer/rational arithmetic used by every other header.
// All design-parameter formulas are evaluated without floating point;
// binomials up to C(46,23) and products thereof must stay exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace tdesign {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;  // canonical: lowest terms, denominator > 0

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

/// C(n,r), exact at any magnitude; 0 when r > n or r < 0.
inline Int binom(const Int& n, const Int& r) {
    if (r < 0 || n < 0 || r > n) return 0;
    Int rr = r;
    if (n - r < rr) rr = n - r;
    Int acc = 1;
    for (Int i = 1; i <= rr; ++i) {
        acc *= n - rr + i;
        acc /= i;  // exact: C(m, i) is an integer for every prefix
    }
    return acc;
}

inline Int binom(int n, int r) { return binom(Int(n), Int(r)); }

/// Floor division for non-negative operands.
inline Int floor_div(const Int& a, const Int& b) {
    if (b <= 0) throw std::domain_error("floor_div: divisor must be positive");
    return a / b;
}

/// Exact division; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("exact_div: zero divisor");
    Int q = a / b;
    if (q * b != a) throw std::domain_error("exact_div: not divisible");
    return q;
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace tdesign
