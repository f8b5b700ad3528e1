#pragma once

// The symbolic equality system of the recursive construction: for a partition
// |X1| = v1, |X2| = v2 and block size k, the t+1 values
//
//   L_{s,t-s} = sum_i u_i * lambda^{(i)}_s * lambdabar^{(k-i)}_{t-s}
//
// as exact-rational forms over the unknown ingredient indices. Internally the
// x/y substitution absorbs selectors into the free-slot unknowns
// (x_j = u_j * lambda^{(j)}_t, y_j = u_{k-j} * lambdabar^{(j)}_t); selectors
// stay explicit only on terms whose slots are both complete.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdesign/arith.hpp"
#include "tdesign/params.hpp"
#include "tdesign/solution.hpp"

namespace tdesign {

enum class SlotKind {
    complete,    // block_size <= t: the complete design, value fixed
    free_slot,   // t < block_size <= v_side: index is an unknown
    impossible,  // block_size > v_side: no such blocks; forces u = 0
};

inline SlotKind classify_slot(int block_size, int t, int v_side) {
    if (block_size > v_side) return SlotKind::impossible;
    return block_size <= t ? SlotKind::complete : SlotKind::free_slot;
}

struct IngredientSlot {
    enum class Side { left, right };
    Side side;
    int block_size = 0;
    SlotKind kind = SlotKind::impossible;
};

/// lambda_s of one ingredient slot. Complete slots evaluate to the binomial
/// C(v_side - s, block_size - s) (0 when block_size < s). Free slots evaluate
/// to coeff * lambda_t with coeff = C(v_side-s, t-s)/C(block_size-s, t-s);
/// when lambda_t is unbound the bare coefficient is returned.
inline Rat slot_lambda_s(int side_v, int block_size, int t, int s,
                         const std::optional<Int>& lambda_t = std::nullopt) {
    if (s < 0 || s > t) throw std::domain_error("slot_lambda_s: need 0 <= s <= t");
    switch (classify_slot(block_size, t, side_v)) {
        case SlotKind::impossible:
            return Rat(0);
        case SlotKind::complete:
            if (block_size < s) return Rat(0);
            return Rat(binom(side_v - s, block_size - s));
        case SlotKind::free_slot: {
            Rat coeff(binom(side_v - s, t - s), binom(block_size - s, t - s));
            return lambda_t ? coeff * Rat(*lambda_t) : coeff;
        }
    }
    return Rat(0);
}

/// One addend of a row: coeff times (u_family | x_family | y_{k-family} |
/// x_family*y_{k-family}), depending on which slots of the family are free.
struct Term {
    int family = 0;  // i: the pair (D_i, Dbar_{k-i})
    Rat coeff;       // product of all fixed binomial factors
    bool has_x = false;
    bool has_y = false;
    bool is_selector() const { return !has_x && !has_y; }
};

struct EqualitySystem {
    int t = 0, k = 0, v1 = 0, v2 = 0;
    std::vector<SlotKind> left_kind;   // indexed by block size 0..k
    std::vector<SlotKind> right_kind;  // indexed by block size 0..k
    std::vector<std::vector<Term>> rows;  // rows[s] = terms of L_{s,t-s}
    // rows[s] with no T_{(s,t-s)} subsets at all (s > v1 or t-s > v2) are
    // vacuous: they always evaluate to 0 and the equality condition skips them
    std::vector<char> row_vacuous;

    bool family_possible(int i) const {
        return left_kind[i] != SlotKind::impossible && right_kind[k - i] != SlotKind::impossible;
    }
    bool row_is_vacuous(int s) const { return row_vacuous[s] != 0; }
};

/// Builds the t+1 rows. Terms with a vanishing binomial factor are absent;
/// impossible slots force their family out entirely.
inline EqualitySystem build_system(int t, int k, int v1, int v2) {
    if (!(t >= 2 && k > t && v1 + v2 > k))
        throw std::domain_error("build_system: need v1+v2 > k > t >= 2");
    if (v1 < 0 || v2 < 0) throw std::domain_error("build_system: negative side size");
    EqualitySystem sys;
    sys.t = t;
    sys.k = k;
    sys.v1 = v1;
    sys.v2 = v2;
    sys.left_kind.resize(k + 1);
    sys.right_kind.resize(k + 1);
    for (int sz = 0; sz <= k; ++sz) {
        sys.left_kind[sz] = classify_slot(sz, t, v1);
        sys.right_kind[sz] = classify_slot(sz, t, v2);
    }
    sys.rows.resize(t + 1);
    sys.row_vacuous.resize(t + 1);
    for (int s = 0; s <= t; ++s) {
        sys.row_vacuous[s] = (s > v1 || t - s > v2) ? 1 : 0;
        for (int i = 0; i <= k; ++i) {
            if (!sys.family_possible(i)) continue;
            const SlotKind lk = sys.left_kind[i];
            const SlotKind rk = sys.right_kind[k - i];
            Rat lc = slot_lambda_s(v1, i, t, s);
            Rat rc = slot_lambda_s(v2, k - i, t, t - s);
            if (lc == 0 || rc == 0) continue;  // i < s or k-i < t-s
            Term term;
            term.family = i;
            term.coeff = lc * rc;
            term.has_x = (lk == SlotKind::free_slot);
            term.has_y = (rk == SlotKind::free_slot);
            sys.rows[s].push_back(std::move(term));
        }
    }
    return sys;
}

namespace detail {
/// Validates the structural consistency of an assignment against a system:
/// sizes, binary selectors, impossible families off, and u_j = 0 forcing the
/// matching unknowns to 0.
inline void require_consistent(const EqualitySystem& sys, const Solution& sol) {
    if (sol.t != sys.t || sol.k != sys.k)
        throw std::invalid_argument("assignment: t/k mismatch with system");
    if (static_cast<int>(sol.u.size()) != sys.k + 1)
        throw std::invalid_argument("assignment: u must have k+1 entries");
    if (static_cast<int>(sol.left.size()) != sys.k - sys.t ||
        static_cast<int>(sol.right.size()) != sys.k - sys.t)
        throw std::invalid_argument("assignment: index vectors must have k-t entries");
    for (int b : sol.u)
        if (b != 0 && b != 1) throw std::invalid_argument("assignment: selectors must be 0/1");
    for (const Int& x : sol.left)
        if (x < 0) throw std::invalid_argument("assignment: negative left index");
    for (const Int& y : sol.right)
        if (y < 0) throw std::invalid_argument("assignment: negative right index");
    for (int sz = sys.t + 1; sz <= sys.k; ++sz) {
        if (sys.left_kind[sz] == SlotKind::impossible && sol.left_of(sz) != 0)
            throw std::invalid_argument("assignment: impossible left slot " + std::to_string(sz) +
                                        " has a nonzero index");
        if (sys.right_kind[sz] == SlotKind::impossible && sol.right_of(sz) != 0)
            throw std::invalid_argument("assignment: impossible right slot " + std::to_string(sz) +
                                        " has a nonzero index");
    }
    for (int i = 0; i <= sys.k; ++i) {
        if (!sys.family_possible(i) && sol.u[i] != 0)
            throw std::invalid_argument("assignment: impossible family " + std::to_string(i) +
                                        " has u = 1");
        if (sol.u[i] == 0) {
            if (sys.left_kind[i] == SlotKind::free_slot && sol.left_of(i) != 0)
                throw std::invalid_argument("assignment: u_" + std::to_string(i) +
                                            " = 0 but x_" + std::to_string(i) + " != 0");
            if (sys.right_kind[sys.k - i] == SlotKind::free_slot && sol.right_of(sys.k - i) != 0)
                throw std::invalid_argument("assignment: u_" + std::to_string(i) +
                                            " = 0 but y_" + std::to_string(sys.k - i) + " != 0");
        }
    }
}
}  // namespace detail

/// Evaluates [L_{0,t}, ..., L_{t,0}] exactly for a consistent assignment.
inline std::vector<Rat> evaluate_rows(const EqualitySystem& sys, const Solution& sol) {
    detail::require_consistent(sys, sol);
    std::vector<Rat> out;
    out.reserve(sys.t + 1);
    for (int s = 0; s <= sys.t; ++s) {
        Rat total(0);
        for (const Term& term : sys.rows[s]) {
            if (sol.u[term.family] == 0) continue;
            Rat val = term.coeff;
            if (term.has_x) val *= Rat(sol.left_of(term.family));
            if (term.has_y) val *= Rat(sol.right_of(sys.k - term.family));
            total += val;
        }
        out.push_back(std::move(total));
    }
    return out;
}

/// Human-readable dump mirroring the L_{s,t-s} expansions; rows by s, terms by
/// family index ascending. Stable, for debugging and goldens.
inline std::string dump_system(const EqualitySystem& sys) {
    std::ostringstream os;
    auto rat_str = [](const Rat& q) {
        std::ostringstream r;
        r << rat_num(q);
        if (rat_den(q) != 1) r << '/' << rat_den(q);
        return r.str();
    };
    for (int s = 0; s <= sys.t; ++s) {
        os << "L_{" << s << ',' << sys.t - s << "} =";
        if (sys.rows[s].empty()) os << " 0";
        bool first = true;
        for (const Term& term : sys.rows[s]) {
            os << (first ? " " : " + ");
            first = false;
            os << rat_str(term.coeff);
            if (term.is_selector()) os << "*u" << term.family;
            if (term.has_x) os << "*x" << term.family;
            if (term.has_y) os << "*y" << sys.k - term.family;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace tdesign
