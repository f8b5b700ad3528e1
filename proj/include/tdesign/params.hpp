#pragma once

// Design-parameter arithmetic for t-(v,k,lambda) designs:
// the lambda_s spectrum, lambda_min / lambda_max bounds, the LIM reporting
// bound, and the complement / supplement parameter maps.

#include <stdexcept>
#include <string>
#include <vector>

#include "tdesign/arith.hpp"

namespace tdesign {

/// The arithmetic identity of a design: t-(v,k,lambda).
/// lambda may be 0 (the empty block collection, e.g. a supplement at lambda_max).
struct DesignParams {
    int t = 0;
    int v = 0;
    int k = 0;
    Int lambda{0};
};

namespace detail {
inline void require_tkv(int t, int k, int v, const char* who) {
    if (!(v >= k && k >= t && t >= 0))
        throw std::domain_error(std::string(who) + ": need v >= k >= t >= 0, got t=" +
                                std::to_string(t) + " k=" + std::to_string(k) +
                                " v=" + std::to_string(v));
}
}  // namespace detail

/// lambda_s = lambda * C(v-s, t-s) / C(k-s, t-s), exact rational.
/// Integrality is a property of real designs; callers decide what to do with it.
inline Rat lambda_s(const DesignParams& p, int s) {
    if (s < 0 || s > p.t) throw std::domain_error("lambda_s: need 0 <= s <= t");
    return Rat(p.lambda) * Rat(binom(p.v - s, p.t - s), binom(p.k - s, p.t - s));
}

/// Smallest lambda > 0 such that C(k-s,t-s) divides lambda*C(v-s,t-s) for all s.
inline Int lambda_min(int t, int k, int v) {
    detail::require_tkv(t, k, v, "lambda_min");
    Int l = 1;
    for (int s = 0; s <= t; ++s) {
        Int d = binom(k - s, t - s);
        Int n = binom(v - s, t - s);
        l = lcm(l, d / gcd(d, n));
    }
    return l;
}

/// Index of the complete design: C(v-t, k-t).
inline Int lambda_max(int t, int k, int v) {
    detail::require_tkv(t, k, v, "lambda_max");
    return binom(v - t, k - t);
}

/// Reporting bound on the multiplier m: floor(lambda_max / (2*lambda_min)).
inline Int lim_bound(int t, int k, int v) {
    detail::require_tkv(t, k, v, "lim_bound");
    return floor_div(lambda_max(t, k, v), 2 * lambda_min(t, k, v));
}

/// All lambda_s for s = 0..t.
inline std::vector<Rat> lambda_spectrum(const DesignParams& p) {
    std::vector<Rat> out;
    out.reserve(p.t + 1);
    for (int s = 0; s <= p.t; ++s) out.push_back(lambda_s(p, s));
    return out;
}

/// Complementing each block gives a t-(v, v-k, lambda*) design,
/// lambda* = lambda * C(v-k,t) / C(k,t).
inline DesignParams complement_lambda(const DesignParams& p) {
    detail::require_tkv(p.t, p.k, p.v, "complement_lambda");
    Rat star = Rat(p.lambda) * Rat(binom(p.v - p.k, p.t), binom(p.k, p.t));
    if (!is_integer(star))
        throw std::domain_error("complement_lambda: lambda* is not an integer; inconsistent parameters");
    return DesignParams{p.t, p.v, p.v - p.k, rat_num(star)};
}

/// The k-subsets not in a simple design form a t-(v,k, lambda_max - lambda) design.
inline DesignParams supplement_lambda(const DesignParams& p) {
    detail::require_tkv(p.t, p.k, p.v, "supplement_lambda");
    Int lx = lambda_max(p.t, p.k, p.v);
    if (p.lambda > lx) throw std::domain_error("supplement_lambda: lambda exceeds lambda_max");
    return DesignParams{p.t, p.v, p.k, lx - p.lambda};
}

}  // namespace tdesign
