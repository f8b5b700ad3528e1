#pragma once

// Materializes the construction: given a solution and concrete ingredient
// block sets on X1 and X2, builds the union families B_{(i,k-i)} and certifies
// the result (per-family balance, totals, simplicity, block-count identity).

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdesign/arith.hpp"
#include "tdesign/block_design.hpp"
#include "tdesign/equation.hpp"
#include "tdesign/params.hpp"
#include "tdesign/solution.hpp"

namespace tdesign {

/// Concrete ingredient designs for one composition. Complete slots (block
/// size <= t) are filled automatically; free slots of selected families must
/// be supplied by the caller.
struct IngredientSet {
    PointPartition part;
    std::map<int, BlockDesign> left;   // block size -> design on v1 points
    std::map<int, BlockDesign> right;  // block size -> design on v2 points
};

struct ComposedDesign {
    BlockDesign design;                           // on v = v1 + v2 points
    std::vector<std::pair<int, int>> provenance;  // per block: family (i, k-i)
    PointPartition part;
    int t = 0, k = 0;
    Int lambda{0};  // the solution's Lambda
};

namespace detail {

inline std::string slot_name(bool left, int size) {
    return std::string(left ? "left" : "right") + ":" + std::to_string(size);
}

/// The design an ingredient slot must hold, verified: block shape, simplicity
/// not required (non-simple ingredients are legal), balance index == expected.
inline const BlockDesign& checked_ingredient(const IngredientSet& ing, bool left, int size, int t,
                                             const Int& expected_lambda_t) {
    const auto& side = left ? ing.left : ing.right;
    int v_side = left ? ing.part.v1 : ing.part.v2;
    auto it = side.find(size);
    if (it == side.end())
        throw std::invalid_argument("compose: missing ingredient design for slot " +
                                    slot_name(left, size));
    const BlockDesign& d = it->second;
    if (d.v != v_side || d.k != size)
        throw std::invalid_argument("compose: ingredient shape mismatch for slot " +
                                    slot_name(left, size));
    for (const Block& b : d.blocks) validate_block(b, d.v, d.k, "compose ingredient");
    int teff = std::min(t, size);  // complete slots are balanced at their own size
    BalanceReport rep = verify_t_design(d, teff);
    if (!rep.is_t_design || rep.lambda != expected_lambda_t)
        throw std::invalid_argument("compose: ingredient for slot " + slot_name(left, size) +
                                    " does not have the required index " +
                                    expected_lambda_t.str());
    return d;
}

}  // namespace detail

/// Fills every complete slot of the selected families with the complete design.
inline void fill_complete_slots(IngredientSet& ing, const EqualitySystem& sys, const Solution& sol) {
    for (int i = 0; i <= sys.k; ++i) {
        if (sol.u[i] != 1) continue;
        if (sys.left_kind[i] == SlotKind::complete && !ing.left.count(i))
            ing.left.emplace(i, complete_design(sys.v1, i));
        int j = sys.k - i;
        if (sys.right_kind[j] == SlotKind::complete && !ing.right.count(j))
            ing.right.emplace(j, complete_design(sys.v2, j));
    }
}

/// Builds B = union over selected families of { B_i u Bbar_{k-i} }; blocks are
/// streamed family by family, lexicographically within each family.
inline ComposedDesign compose(const EqualitySystem& sys, const Solution& sol,
                              const IngredientSet& ing, const Int& max_blocks = Int(10'000'000)) {
    detail::require_consistent(sys, sol);
    if (ing.part.v1 != sys.v1 || ing.part.v2 != sys.v2)
        throw std::invalid_argument("compose: partition mismatch with system");

    // validate ingredients and compute the exact block count up front
    Int total_blocks = 0;
    std::vector<std::pair<const BlockDesign*, const BlockDesign*>> pairs(sys.k + 1, {nullptr, nullptr});
    for (int i = 0; i <= sys.k; ++i) {
        if (sol.u[i] != 1) continue;
        int j = sys.k - i;
        Int left_idx = sys.left_kind[i] == SlotKind::free_slot ? sol.left_of(i) : Int(1);
        Int right_idx = sys.right_kind[j] == SlotKind::free_slot ? sol.right_of(j) : Int(1);
        const BlockDesign& dl = detail::checked_ingredient(ing, true, i, sys.t, left_idx);
        const BlockDesign& dr = detail::checked_ingredient(ing, false, j, sys.t, right_idx);
        pairs[i] = {&dl, &dr};
        total_blocks += Int(dl.blocks.size()) * Int(dr.blocks.size());
    }
    if (total_blocks > max_blocks)
        throw std::runtime_error("compose: scale guard tripped: " + total_blocks.str() +
                                 " blocks exceed the ceiling " + max_blocks.str());

    ComposedDesign out;
    out.part = ing.part;
    out.t = sys.t;
    out.k = sys.k;
    out.lambda = sol.lambda;
    out.design.v = ing.part.v();
    out.design.k = sys.k;
    for (int i = 0; i <= sys.k; ++i) {
        if (!pairs[i].first) continue;
        const BlockDesign& dl = *pairs[i].first;
        const BlockDesign& dr = *pairs[i].second;
        for (const Block& bl : dl.blocks) {
            for (const Block& br : dr.blocks) {
                Block b;
                b.reserve(sys.k);
                b.insert(b.end(), bl.begin(), bl.end());
                for (int p : br) b.push_back(p + sys.v1);
                out.design.blocks.push_back(std::move(b));
                out.provenance.push_back({i, sys.k - i});
            }
        }
    }
    if (Int(out.design.blocks.size()) != total_blocks)
        throw std::logic_error("compose: block count mismatch");
    return out;
}

struct ComposedReport {
    bool pass = false;
    bool simple = false;
    bool count_identity = false;  // b * C(k,t) = Lambda * C(v,t)
    bool exhaustive = true;       // false when t-subsets were sampled
    Int lambda_expected{0};
    std::vector<std::string> failures;
};

/// Certifies a composed design against its solution: for each s, the t-subsets
/// T_{(s,t-s)} are covered lambda^{(i)}_s * lambdabar^{(k-i)}_{t-s} times per
/// family and Lambda times in total. Exhausts all t-subsets when C(v,t) <= 1e6,
/// otherwise samples with a fixed seed (weaker guarantee, reported as such).
inline ComposedReport verify_composed(const ComposedDesign& cd, const EqualitySystem& sys,
                                      const Solution& sol, std::size_t sample_count = 2000) {
    ComposedReport rep;
    rep.lambda_expected = sol.lambda;
    const int t = sys.t, k = sys.k;
    const int v1 = cd.part.v1, v2 = cd.part.v2;

    rep.simple = is_simple(cd.design);
    if (!rep.simple) rep.failures.push_back("composed design has a repeated block");

    Int lhs = Int(cd.design.blocks.size()) * binom(k, t);
    Int rhs = sol.lambda * binom(v1 + v2, t);
    rep.count_identity = (lhs == rhs);
    if (!rep.count_identity)
        rep.failures.push_back("block-count identity b*C(k,t) = Lambda*C(v,t) fails");

    // expected per-family coverage of a T_{(s,t-s)}
    auto expected_product = [&](int i, int s) -> Rat {
        if (sol.u[i] != 1) return Rat(0);
        std::optional<Int> lx, ly;
        if (sys.left_kind[i] == SlotKind::free_slot) lx = sol.left_of(i);
        if (sys.right_kind[k - i] == SlotKind::free_slot) ly = sol.right_of(k - i);
        Rat l = sys.left_kind[i] == SlotKind::free_slot ? slot_lambda_s(v1, i, t, s, lx)
                                                        : slot_lambda_s(v1, i, t, s);
        Rat r = sys.right_kind[k - i] == SlotKind::free_slot
                    ? slot_lambda_s(v2, k - i, t, t - s, ly)
                    : slot_lambda_s(v2, k - i, t, t - s);
        return l * r;
    };

    auto check_subset = [&](const Block& T, int s) {
        std::vector<Int> family_count(k + 1, Int(0));
        for (size_t bi = 0; bi < cd.design.blocks.size(); ++bi) {
            const Block& b = cd.design.blocks[bi];
            if (std::includes(b.begin(), b.end(), T.begin(), T.end()))
                family_count[cd.provenance[bi].first] += 1;
        }
        Int total = 0;
        for (int i = 0; i <= k; ++i) {
            Rat want = expected_product(i, s);
            if (Rat(family_count[i]) != want) {
                std::ostringstream os;
                os << "family (" << i << "," << k - i << ") covers a T_(" << s << "," << t - s
                   << ") " << family_count[i].str() << " times, expected " << rat_num(want).str();
                if (rat_den(want) != 1) os << "/" << rat_den(want).str();
                rep.failures.push_back(os.str());
                return false;
            }
            total += family_count[i];
        }
        if (total != sol.lambda) {
            rep.failures.push_back("total coverage of a t-subset is " + total.str() +
                                   ", expected Lambda = " + sol.lambda.str());
            return false;
        }
        return true;
    };

    rep.exhaustive = binom(v1 + v2, t) <= Int(1'000'000);
    for (int s = 0; s <= t && rep.failures.size() < 8; ++s) {
        if (s > v1 || t - s > v2) continue;  // no such t-subsets
        if (rep.exhaustive) {
            // all T with |T n X1| = s, via two nested subset enumerations
            BlockDesign ls = complete_design(v1, s);
            BlockDesign rs = complete_design(v2, t - s);
            for (const Block& a : ls.blocks) {
                for (const Block& b : rs.blocks) {
                    Block T = a;
                    for (int p : b) T.push_back(p + v1);
                    if (!check_subset(T, s)) break;
                }
                if (!rep.failures.empty()) break;
            }
        } else {
            // fixed seed: the sampled check is reproducible, if weaker
            std::mt19937_64 rng(0x7d5a11ull + static_cast<unsigned long long>(s));
            auto sample_side = [&](int n, int want, int offset, Block& T) {
                std::vector<int> pool(n);
                for (int i = 0; i < n; ++i) pool[i] = i;
                for (int i = 0; i < want; ++i) {
                    std::uniform_int_distribution<int> pick(i, n - 1);
                    std::swap(pool[i], pool[pick(rng)]);
                    T.push_back(pool[i] + offset);
                }
            };
            for (std::size_t it = 0; it < sample_count; ++it) {
                Block T;
                sample_side(v1, s, 0, T);
                sample_side(v2, t - s, v1, T);
                std::sort(T.begin(), T.end());
                if (!check_subset(T, s)) break;
            }
        }
    }
    rep.pass = rep.failures.empty() && rep.simple && rep.count_identity;
    return rep;
}

}  // namespace tdesign
