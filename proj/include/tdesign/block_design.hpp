#pragma once

// Explicit block-level designs: representation, complete/degenerate designs,
// block-level complement and supplement, brute-force verification of the
// t-design property, and the block-set file format.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdesign/arith.hpp"

namespace tdesign {

/// A block is a strictly increasing list of 0-based point indices.
using Block = std::vector<int>;

/// X = X1 u X2 with X1 = {0..v1-1}, X2 = {v1..v1+v2-1}.
struct PointPartition {
    int v1 = 0;
    int v2 = 0;
    int v() const { return v1 + v2; }
};

struct BlockDesign {
    int v = 0;
    int k = 0;
    std::vector<Block> blocks;
};

inline void validate_block(const Block& b, int v, int k, const char* who) {
    if (static_cast<int>(b.size()) != k)
        throw std::invalid_argument(std::string(who) + ": block size != k");
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 0 || b[i] >= v)
            throw std::invalid_argument(std::string(who) + ": point index out of range");
        if (i > 0 && b[i - 1] >= b[i])
            throw std::invalid_argument(std::string(who) + ": block not strictly increasing");
    }
}

inline bool is_simple(const BlockDesign& d) {
    std::set<Block> seen;
    for (const auto& b : d.blocks)
        if (!seen.insert(b).second) return false;
    return true;
}

/// All C(v,k) k-subsets in lexicographic order. k = 0 yields one empty block;
/// k = v yields one full block.
inline BlockDesign complete_design(int v, int k) {
    if (k < 0 || v < 0 || k > v) throw std::domain_error("complete_design: need 0 <= k <= v");
    BlockDesign d{v, k, {}};
    Block cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        d.blocks.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == v - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return d;
}

namespace detail {

/// Pascal table up to C(v, t); entries fit 64 bits for every brute-force scale
/// we accept (C(v,t) <= ~1e6).
struct SubsetRanker {
    int v, t;
    std::vector<std::vector<std::uint64_t>> c;
    SubsetRanker(int v_, int t_) : v(v_), t(t_), c(v_ + 1, std::vector<std::uint64_t>(t_ + 1, 0)) {
        for (int n = 0; n <= v; ++n) {
            c[n][0] = 1;
            for (int r = 1; r <= t && r <= n; ++r)
                c[n][r] = c[n - 1][r - 1] + (n - 1 >= r ? c[n - 1][r] : 0);
        }
    }
    std::uint64_t count() const { return c[v][t]; }
    /// Lexicographic rank of a strictly increasing t-tuple.
    std::uint64_t rank(const int* s) const {
        std::uint64_t r = 0;
        int prev = -1;
        for (int i = 0; i < t; ++i) {
            for (int x = prev + 1; x < s[i]; ++x) r += c[v - 1 - x][t - 1 - i];
            prev = s[i];
        }
        return r;
    }
    Block unrank(std::uint64_t r) const {
        Block s(t);
        int x = 0;
        for (int i = 0; i < t; ++i) {
            while (true) {
                std::uint64_t below = c[v - 1 - x][t - 1 - i];
                if (r < below) break;
                r -= below;
                ++x;
            }
            s[i] = x++;
        }
        return s;
    }
};

}  // namespace detail

struct BalanceReport {
    int t = 0;
    bool is_t_design = false;
    Int lambda{0};  // meaningful when is_t_design
    struct Counterexample {
        Block t_subset;
        Int count{0};
        Int expected{0};  // count of the lexicographically first t-subset
    };
    std::optional<Counterexample> counterexample;
};

/// Counts blocks through every t-subset (multiset counting, so non-simple
/// designs are handled). Balanced => lambda; otherwise the first violation in
/// lexicographic t-subset order. Intended for C(v,t) <= ~1e6.
inline BalanceReport verify_t_design(const BlockDesign& d, int t) {
    if (t < 0 || t > d.k) throw std::domain_error("verify_t_design: need 0 <= t <= k");
    BalanceReport rep;
    rep.t = t;
    if (t == 0) {
        rep.is_t_design = true;
        rep.lambda = Int(d.blocks.size());
        return rep;
    }
    detail::SubsetRanker rk(d.v, t);
    std::vector<std::int64_t> counts(rk.count(), 0);
    std::vector<int> sub(t);
    // For each block, bump every t-subset of it.
    for (const auto& b : d.blocks) {
        const int k = d.k;
        std::vector<int> idx(t);
        for (int i = 0; i < t; ++i) idx[i] = i;
        while (true) {
            for (int i = 0; i < t; ++i) sub[i] = b[idx[i]];
            ++counts[rk.rank(sub.data())];
            int i = t - 1;
            while (i >= 0 && idx[i] == k - t + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::int64_t expected = counts.empty() ? 0 : counts[0];
    for (std::uint64_t r = 0; r < counts.size(); ++r) {
        if (counts[r] != expected) {
            rep.is_t_design = false;
            rep.counterexample = BalanceReport::Counterexample{rk.unrank(r), Int(counts[r]), Int(expected)};
            return rep;
        }
    }
    rep.is_t_design = true;
    rep.lambda = Int(expected);
    return rep;
}

/// Replace each block by its complement in X; output in lexicographic order.
inline BlockDesign complement_blocks(const BlockDesign& d) {
    BlockDesign out{d.v, d.v - d.k, {}};
    out.blocks.reserve(d.blocks.size());
    std::vector<char> in(d.v);
    for (const auto& b : d.blocks) {
        std::fill(in.begin(), in.end(), 0);
        for (int p : b) in[p] = 1;
        Block c;
        c.reserve(d.v - d.k);
        for (int p = 0; p < d.v; ++p)
            if (!in[p]) c.push_back(p);
        out.blocks.push_back(std::move(c));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

/// All k-subsets of X not in d. Requires d simple.
inline BlockDesign supplement_blocks(const BlockDesign& d) {
    if (!is_simple(d)) throw std::invalid_argument("supplement_blocks: input is not simple");
    std::set<Block> have(d.blocks.begin(), d.blocks.end());
    BlockDesign out{d.v, d.k, {}};
    for (auto& b : complete_design(d.v, d.k).blocks)
        if (!have.count(b)) out.blocks.push_back(std::move(b));
    return out;
}

/// (|T n X1|, |T n X2|) for a t-subset T.
inline std::pair<int, int> classify_t_subset(const Block& T, const PointPartition& part) {
    int s = 0;
    for (int p : T) {
        if (p < 0 || p >= part.v()) throw std::invalid_argument("classify_t_subset: point outside X");
        if (p < part.v1) ++s;
    }
    return {s, static_cast<int>(T.size()) - s};
}

// ---- block-set file format ----
// line 1: "v k b", then b lines of k space-separated 0-based indices,
// sorted within lines and lexicographically across lines.

inline void write_block_file(std::ostream& os, const BlockDesign& d) {
    os << d.v << ' ' << d.k << ' ' << d.blocks.size() << '\n';
    for (const auto& b : d.blocks) {
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) os << ' ';
            os << b[i];
        }
        os << '\n';
    }
}

/// Strict on within-line structure; tolerates non-canonical cross-line order
/// and duplicate blocks so that check tooling can report them.
inline BlockDesign read_block_file(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("block file: missing header line");
    std::istringstream hdr(line);
    long long v = -1, k = -1, b = -1;
    if (!(hdr >> v >> k >> b) || v < 0 || k < 0 || b < 0)
        throw std::runtime_error("block file: bad header, want 'v k b'");
    std::string extra;
    if (hdr >> extra) throw std::runtime_error("block file: trailing tokens in header");
    BlockDesign d{static_cast<int>(v), static_cast<int>(k), {}};
    d.blocks.reserve(static_cast<size_t>(b));
    for (long long i = 0; i < b; ++i) {
        if (!std::getline(is, line))
            throw std::runtime_error("block file: expected " + std::to_string(b) + " blocks, got " +
                                     std::to_string(i));
        std::istringstream ls(line);
        Block blk;
        blk.reserve(static_cast<size_t>(k));
        int x;
        while (ls >> x) blk.push_back(x);
        try {
            validate_block(blk, d.v, d.k, "block file");
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(std::string(e.what()) + " (line " + std::to_string(i + 2) + ")");
        }
        d.blocks.push_back(std::move(blk));
    }
    return d;
}

}  // namespace tdesign
