#pragma once

// A solution of the index-equality system: selector vector u, the ingredient
// indices on both sides, and the common row value Lambda.
//
// Text format (one solution per line, tab-separated):
//   Lambda  m  u-bitstring  left-indices(comma)  right-indices(comma)  trivial  catalog
// The last two fields are informational on output and optional on input.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdesign/arith.hpp"

namespace tdesign {

enum class CatalogMark { none, ok, warn };

inline const char* to_string(CatalogMark m) {
    switch (m) {
        case CatalogMark::ok: return "ok";
        case CatalogMark::warn: return "warn";
        default: return "-";
    }
}

struct Solution {
    int t = 0;
    int k = 0;
    std::vector<int> u;      // k+1 selectors, 0/1
    std::vector<Int> left;   // indices lambda^{(t+1)}..lambda^{(k)} on X1 (absolute)
    std::vector<Int> right;  // indices for X2
    Int lambda{0};
    Int m{0};                // lambda / lambda_min(t,k,v)
    bool trivial = false;    // all possible families selected at complete parameters
    CatalogMark catalog = CatalogMark::none;

    const Int& left_of(int size) const { return left.at(static_cast<size_t>(size - t - 1)); }
    const Int& right_of(int size) const { return right.at(static_cast<size_t>(size - t - 1)); }
};

inline std::string format_solution_line(const Solution& s) {
    std::ostringstream os;
    os << s.lambda << '\t' << s.m << '\t';
    for (int b : s.u) os << (b ? '1' : '0');
    os << '\t';
    for (size_t i = 0; i < s.left.size(); ++i) {
        if (i) os << ',';
        os << s.left[i];
    }
    os << '\t';
    for (size_t i = 0; i < s.right.size(); ++i) {
        if (i) os << ',';
        os << s.right[i];
    }
    os << '\t' << (s.trivial ? 1 : 0) << '\t' << to_string(s.catalog);
    return os.str();
}

namespace detail {
inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline Int parse_int(const std::string& s, const char* what) {
    if (s.empty()) throw std::runtime_error(std::string("empty ") + what);
    for (size_t i = 0; i < s.size(); ++i)
        if (!((s[i] >= '0' && s[i] <= '9') || (i == 0 && s[i] == '-')))
            throw std::runtime_error(std::string("bad ") + what + ": '" + s + "'");
    return Int(s);
}
}  // namespace detail

/// Parses one solution line for a system with the given t and k.
/// The trivial/catalog fields, when present, are ignored; they are recomputed
/// downstream. Throws std::runtime_error with a description on malformed input.
inline Solution parse_solution_line(const std::string& line, int t, int k) {
    auto fields = detail::split(line, '\t');
    if (fields.size() < 5 || fields.size() > 7)
        throw std::runtime_error("want 5..7 tab-separated fields, got " + std::to_string(fields.size()));
    Solution s;
    s.t = t;
    s.k = k;
    s.lambda = detail::parse_int(fields[0], "Lambda");
    s.m = detail::parse_int(fields[1], "m");
    const std::string& ub = fields[2];
    if (static_cast<int>(ub.size()) != k + 1)
        throw std::runtime_error("u-bitstring must have k+1 = " + std::to_string(k + 1) + " bits");
    for (char c : ub) {
        if (c != '0' && c != '1') throw std::runtime_error("u-bitstring must be 0/1");
        s.u.push_back(c - '0');
    }
    auto parse_list = [&](const std::string& f, const char* what) {
        std::vector<Int> out;
        if (k - t <= 0) throw std::runtime_error("k must exceed t");
        for (const auto& tok : detail::split(f, ',')) out.push_back(detail::parse_int(tok, what));
        if (static_cast<int>(out.size()) != k - t)
            throw std::runtime_error(std::string(what) + " needs k-t = " + std::to_string(k - t) +
                                     " entries, got " + std::to_string(out.size()));
        return out;
    };
    s.left = parse_list(fields[3], "left index");
    s.right = parse_list(fields[4], "right index");
    return s;
}

}  // namespace tdesign
