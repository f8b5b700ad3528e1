#pragma once

// Enumerates every assignment (selectors + ingredient indices) satisfying the
// equality condition L_{0,t} = ... = L_{t,0} over admissible index grids.
//
// Strategy (the paper reports results only, not its search): depth-first
// assignment in order of descending coefficient magnitude, with exact interval
// bounds per row; a branch dies when the rows' intervals cannot meet at a
// common value. The common value is never guessed up front: it gets pinned by
// the first fully-assigned row, after which rows with a single open term force
// their variable. All arithmetic is over integers after clearing the rows'
// common denominator.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tdesign/arith.hpp"
#include "tdesign/catalog.hpp"
#include "tdesign/equation.hpp"
#include "tdesign/params.hpp"
#include "tdesign/solution.hpp"

namespace tdesign {

/// Admissible values per free slot: {0} u {m * lambda_min : 1 <= m <= m_max},
/// optionally clamped. Invariant: every nonzero value is a multiple of the
/// slot's lambda_min and at most its lambda_max.
struct SearchSpace {
    int t = 0, k = 0, v1 = 0, v2 = 0;
    bool symmetric = false;
    // indexed by block size 0..k; empty for non-free slots
    std::vector<std::vector<Int>> left_grid, right_grid;

    static SearchSpace full_grids(const EqualitySystem& sys, bool symmetric = false) {
        if (symmetric && sys.v1 != sys.v2)
            throw std::invalid_argument("SearchSpace: symmetric mode requires v1 == v2");
        SearchSpace sp;
        sp.t = sys.t;
        sp.k = sys.k;
        sp.v1 = sys.v1;
        sp.v2 = sys.v2;
        sp.symmetric = symmetric;
        sp.left_grid.resize(sys.k + 1);
        sp.right_grid.resize(sys.k + 1);
        for (int sz = 0; sz <= sys.k; ++sz) {
            if (sys.left_kind[sz] == SlotKind::free_slot)
                sp.left_grid[sz] = full_slot_grid(sys.t, sz, sys.v1);
            if (sys.right_kind[sz] == SlotKind::free_slot)
                sp.right_grid[sz] = full_slot_grid(sys.t, sz, sys.v2);
        }
        return sp;
    }

    static std::vector<Int> full_slot_grid(int t, int size, int v_side) {
        Int lmin = lambda_min(t, size, v_side);
        Int lmax = lambda_max(t, size, v_side);
        std::vector<Int> g{0};
        for (Int lam = lmin; lam <= lmax; lam += lmin) g.push_back(lam);
        return g;
    }

    /// Replace a slot's grid with explicit values (each 0 or an admissible index).
    void restrict_values(bool left, int size, std::vector<Int> values) {
        auto& g = grid(left, size);
        if (g.empty()) throw std::invalid_argument("SearchSpace: slot is not free");
        if (values.empty()) throw std::invalid_argument("SearchSpace: empty grid");
        int v_side = left ? v1 : v2;
        Int lmin = lambda_min(t, size, v_side);
        Int lmax = lambda_max(t, size, v_side);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (const Int& val : values)
            if (val != 0 && (val < 0 || val > lmax || val % lmin != 0))
                throw std::invalid_argument("SearchSpace: value " + val.str() +
                                            " inadmissible for slot size " + std::to_string(size));
        g = std::move(values);
    }

    void fix_value(bool left, int size, const Int& value) { restrict_values(left, size, {value}); }

    /// Keep only 0 and multiples m*lambda_min with m <= cap.
    void cap_multiplier(bool left, int size, const Int& cap) {
        auto& g = grid(left, size);
        if (g.empty()) throw std::invalid_argument("SearchSpace: slot is not free");
        int v_side = left ? v1 : v2;
        Int bound = cap * lambda_min(t, size, v_side);
        std::vector<Int> kept;
        for (const Int& val : g)
            if (val <= bound) kept.push_back(val);
        if (kept.empty()) kept.push_back(0);
        g = std::move(kept);
    }

    std::vector<Int>& grid(bool left, int size) {
        if (size < 0 || size > k) throw std::invalid_argument("SearchSpace: bad slot size");
        return left ? left_grid[size] : right_grid[size];
    }
    const std::vector<Int>& grid(bool left, int size) const {
        return const_cast<SearchSpace*>(this)->grid(left, size);
    }
};

namespace detail {

struct EngineVar {
    std::vector<Int> domain;  // ascending
    int link = -1;            // partner that must share zero-ness (bilinear family)
    std::vector<std::pair<int, int>> value_slots;  // (side 0=left/1=right, size)
    std::vector<int> selector_families;
    Int dmax() const { return domain.empty() ? Int(0) : domain.back(); }
};

struct EngineTerm {
    int row = 0;
    Int coeff;  // scaled by the common denominator
    int a = -1, b = -1;  // b == -1: linear in a; a == b: quadratic
};

/// Search model: variables over merged slots, scaled-integer terms, and the
/// DFS + propagation machinery. One engine instance per worker.
class Engine {
  public:
    Engine(const EqualitySystem& sys, const SearchSpace& space) : sys_(sys) {
        build_vars(space);
        build_terms();
        order_vars();
        nrows_ = sys_.t + 1;
        for (int r = 0; r < nrows_; ++r)
            if (!sys_.row_is_vacuous(r)) active_rows_.push_back(r);
        base_.assign(nrows_, Int(0));
        resthi_.assign(nrows_, Int(0));
        pending_.assign(nrows_, 0);
        for (const auto& tm : terms_) {
            resthi_[tm.row] += term_max(tm);
            pending_[tm.row] += 1;
        }
        value_.assign(vars_.size(), Int(0));
        assigned_.assign(vars_.size(), 0);
    }

    /// Runs the full search, or one top-level branch subset when workers split
    /// the root domain ({} = all values).
    std::vector<Solution> run(const std::vector<size_t>& root_values = {}) {
        solutions_.clear();
        if (vars_.empty()) return solutions_;  // nothing selectable: no positive Lambda
        if (root_values.empty()) {
            dfs(0);
        } else {
            int v = order_[0];
            for (size_t di : root_values) branch(v, vars_[v].domain[di], 1);
        }
        return std::move(solutions_);
    }

    size_t root_domain_size() const { return vars_.empty() ? 0 : vars_[order_[0]].domain.size(); }

    const EqualitySystem& system() const { return sys_; }

  private:
    // ---- model construction ----

    void build_vars(const SearchSpace& space) {
        const int k = sys_.k, t = sys_.t;
        var_of_slot_.assign(2, std::vector<int>(k + 1, -1));
        var_of_selector_.assign(k + 1, -1);
        auto slot_family = [&](int side, int size) { return side == 0 ? size : k - size; };
        // value variables for free slots of possible families
        for (int side = 0; side < 2; ++side) {
            for (int sz = t + 1; sz <= k; ++sz) {
                const auto kind = side == 0 ? sys_.left_kind[sz] : sys_.right_kind[sz];
                if (kind != SlotKind::free_slot) continue;
                if (!sys_.family_possible(slot_family(side, sz))) continue;
                if (space.symmetric && side == 1 && var_of_slot_[0][sz] >= 0) {
                    int id = var_of_slot_[0][sz];
                    var_of_slot_[1][sz] = id;
                    vars_[id].value_slots.push_back({1, sz});
                    // both slots' clamps apply to the merged variable
                    std::vector<Int> meet;
                    for (const Int& val : vars_[id].domain)
                        if (std::binary_search(space.right_grid[sz].begin(),
                                               space.right_grid[sz].end(), val))
                            meet.push_back(val);
                    vars_[id].domain = std::move(meet);
                    continue;
                }
                EngineVar var;
                var.domain = side == 0 ? space.left_grid[sz] : space.right_grid[sz];
                if (var.domain.empty())
                    throw std::logic_error("search: free slot without a grid");
                var.value_slots.push_back({side, sz});
                var_of_slot_[side][sz] = static_cast<int>(vars_.size());
                vars_.push_back(std::move(var));
            }
        }
        // selector variables for complete-complete families
        for (int i = 0; i <= k; ++i) {
            if (!sys_.family_possible(i)) continue;
            if (sys_.left_kind[i] != SlotKind::complete || sys_.right_kind[k - i] != SlotKind::complete)
                continue;
            if (space.symmetric && var_of_selector_[k - i] >= 0) {
                int id = var_of_selector_[k - i];
                var_of_selector_[i] = id;
                vars_[id].selector_families.push_back(i);
                continue;
            }
            EngineVar var;
            var.domain = {Int(0), Int(1)};
            var.selector_families.push_back(i);
            var_of_selector_[i] = static_cast<int>(vars_.size());
            vars_.push_back(std::move(var));
        }
        // link the two unknowns of each bilinear family (shared selector)
        for (int i = 0; i <= k; ++i) {
            if (!sys_.family_possible(i)) continue;
            if (sys_.left_kind[i] == SlotKind::free_slot &&
                sys_.right_kind[k - i] == SlotKind::free_slot) {
                int a = var_of_slot_[0][i];
                int b = var_of_slot_[1][k - i];
                if (a != b) {
                    vars_[a].link = b;
                    vars_[b].link = a;
                }
            }
        }
    }

    void build_terms() {
        const int k = sys_.k;
        // common denominator across all rows
        Int den = 1;
        for (const auto& row : sys_.rows)
            for (const Term& tm : row) den = lcm(den, rat_den(tm.coeff));
        scale_ = den;
        std::map<std::tuple<int, int, int>, size_t> merged;  // (row, a, b) -> term index
        for (int s = 0; s <= sys_.t; ++s) {
            for (const Term& tm : sys_.rows[s]) {
                int a = -1, b = -1;
                if (tm.is_selector()) {
                    a = var_of_selector_[tm.family];
                } else {
                    if (tm.has_x) a = var_of_slot_[0][tm.family];
                    if (tm.has_y) {
                        int yv = var_of_slot_[1][k - tm.family];
                        if (a < 0) a = yv; else b = yv;
                    }
                }
                if (a < 0) throw std::logic_error("search: term without a variable");
                if (b >= 0 && b < a) std::swap(a, b);
                Int coeff = exact_div(rat_num(tm.coeff) * den, rat_den(tm.coeff));
                auto key = std::make_tuple(s, a, b);
                auto it = merged.find(key);
                if (it == merged.end()) {
                    merged.emplace(key, terms_.size());
                    terms_.push_back(EngineTerm{s, coeff, a, b});
                } else {
                    terms_[it->second].coeff += coeff;
                }
            }
        }
        var_terms_.assign(vars_.size(), {});
        row_terms_.assign(sys_.t + 1, {});
        for (size_t ti = 0; ti < terms_.size(); ++ti) {
            const auto& tm = terms_[ti];
            var_terms_[tm.a].push_back(static_cast<int>(ti));
            if (tm.b >= 0 && tm.b != tm.a) var_terms_[tm.b].push_back(static_cast<int>(ti));
            row_terms_[tm.row].push_back(static_cast<int>(ti));
        }
    }

    void order_vars() {
        std::vector<Int> score(vars_.size(), Int(0));
        for (const auto& tm : terms_) {
            Int w = tm.coeff;
            if (tm.b >= 0 && tm.b != tm.a) {
                Int wa = w * vars_[tm.b].dmax();
                Int wb = w * vars_[tm.a].dmax();
                score[tm.a] = std::max(score[tm.a], wa);
                score[tm.b] = std::max(score[tm.b], wb);
            } else {
                score[tm.a] = std::max(score[tm.a], w);
            }
        }
        order_.resize(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) order_[i] = static_cast<int>(i);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int x, int y) { return score[x] > score[y]; });
    }

    Int term_max(const EngineTerm& tm) const {
        if (tm.b < 0) return tm.coeff * vars_[tm.a].dmax();
        if (tm.b == tm.a) return tm.coeff * vars_[tm.a].dmax() * vars_[tm.a].dmax();
        return tm.coeff * vars_[tm.a].dmax() * vars_[tm.b].dmax();
    }

    // ---- search state ----

    struct Saved {
        std::vector<Int> base, resthi;
        std::vector<int> pending;
        Int lambda;
        bool lambda_set;
        size_t trail_size;
    };

    Saved snapshot() const {
        return Saved{base_, resthi_, pending_, lambda_, lambda_set_, trail_.size()};
    }

    void restore(const Saved& s) {
        base_ = s.base;
        resthi_ = s.resthi;
        pending_ = s.pending;
        lambda_ = s.lambda;
        lambda_set_ = s.lambda_set;
        while (trail_.size() > s.trail_size) {
            assigned_[trail_.back()] = 0;
            trail_.pop_back();
        }
    }

    bool domain_contains(const EngineVar& var, const Int& val) const {
        return std::binary_search(var.domain.begin(), var.domain.end(), val);
    }

    /// Assign and update all touched rows; false on immediate inconsistency.
    bool set_value(int v, const Int& val) {
        if (assigned_[v]) return value_[v] == val;
        const EngineVar& var = vars_[v];
        if (var.link >= 0 && assigned_[var.link] &&
            (value_[var.link] == 0) != (val == 0))
            return false;
        assigned_[v] = 1;
        value_[v] = val;
        trail_.push_back(v);
        for (int ti : var_terms_[v]) {
            const EngineTerm& tm = terms_[ti];
            if (tm.b < 0) {
                base_[tm.row] += tm.coeff * val;
                resthi_[tm.row] -= tm.coeff * var.dmax();
                pending_[tm.row] -= 1;
            } else if (tm.b == tm.a) {
                base_[tm.row] += tm.coeff * val * val;
                resthi_[tm.row] -= tm.coeff * var.dmax() * var.dmax();
                pending_[tm.row] -= 1;
            } else {
                int other = tm.a == v ? tm.b : tm.a;
                if (assigned_[other]) {
                    // other was assigned first, so the term's tracked max is
                    // coeff * value(other) * dmax(v)
                    base_[tm.row] += tm.coeff * val * value_[other];
                    resthi_[tm.row] -= tm.coeff * value_[other] * var.dmax();
                    pending_[tm.row] -= 1;
                } else {
                    resthi_[tm.row] += tm.coeff * (val - var.dmax()) * vars_[other].dmax();
                }
            }
        }
        // zero-ness propagates through the family link immediately
        if (var.link >= 0 && !assigned_[var.link] && val == 0) {
            if (!domain_contains(vars_[var.link], Int(0))) return false;
            return set_value(var.link, Int(0));
        }
        return true;
    }

    bool feasible() {
        Int maxlo(-1), minhi(-1);
        bool have = false;
        for (int r : active_rows_) {
            Int lo = base_[r];
            Int hi = base_[r] + resthi_[r];
            if (!have) {
                maxlo = lo;
                minhi = hi;
                have = true;
            } else {
                if (lo > maxlo) maxlo = lo;
                if (hi < minhi) minhi = hi;
            }
            if (pending_[r] == 0) {
                if (lambda_set_) {
                    if (base_[r] != lambda_) return false;
                } else {
                    lambda_ = base_[r];
                    lambda_set_ = true;
                }
            }
        }
        if (maxlo > minhi) return false;
        if (lambda_set_) {
            for (int r : active_rows_)
                if (lambda_ < base_[r] || lambda_ > base_[r] + resthi_[r]) return false;
        }
        return true;
    }

    /// Fixpoint of feasibility checks plus unit forcing on rows with a single
    /// open term once Lambda is pinned.
    bool propagate() {
        while (true) {
            if (!feasible()) return false;
            if (!lambda_set_) return true;
            bool progress = false;
            for (size_t ri = 0; ri < active_rows_.size() && !progress; ++ri) {
                int r = active_rows_[ri];
                if (pending_[r] != 1) continue;
                for (int ti : row_terms_[r]) {
                    const EngineTerm& tm = terms_[ti];
                    int w = -1;
                    Int ec;
                    if (tm.b < 0) {
                        if (assigned_[tm.a]) continue;
                        w = tm.a;
                        ec = tm.coeff;
                    } else if (tm.b == tm.a) {
                        continue;  // quadratic: branch instead of solving
                    } else {
                        bool aa = assigned_[tm.a], ab = assigned_[tm.b];
                        if (aa && ab) continue;
                        if (!aa && !ab) break;  // two open factors: cannot force
                        w = aa ? tm.b : tm.a;
                        ec = tm.coeff * value_[aa ? tm.a : tm.b];
                    }
                    if (ec == 0) break;  // contributes nothing; feasibility already covers
                    Int req = lambda_ - base_[r];
                    if (req < 0 || req % ec != 0) return false;
                    Int val = req / ec;
                    if (!domain_contains(vars_[w], val)) return false;
                    if (!set_value(w, val)) return false;
                    progress = true;
                    break;
                }
            }
            if (!progress) return true;
        }
    }

    void branch(int v, const Int& val, size_t next_pos) {
        Saved s = snapshot();
        if (set_value(v, val) && propagate()) dfs(next_pos);
        restore(s);
    }

    void dfs(size_t pos) {
        while (pos < order_.size() && assigned_[order_[pos]]) ++pos;
        if (pos == order_.size()) {
            emit();
            return;
        }
        int v = order_[pos];
        for (const Int& val : vars_[v].domain) branch(v, val, pos + 1);
    }

    void emit() {
        if (!lambda_set_ || lambda_ <= 0) return;
        if (lambda_ % scale_ != 0) throw std::logic_error("search: Lambda not divisible by row scale");
        const int k = sys_.k, t = sys_.t;
        Solution sol;
        sol.t = t;
        sol.k = k;
        sol.u.assign(k + 1, 0);
        sol.left.assign(k - t, Int(0));
        sol.right.assign(k - t, Int(0));
        for (const auto& var : vars_) {
            // value vars write their slots; selector vars their families
            for (auto [side, sz] : var.value_slots) {
                int vi = var_of_slot_[side][sz];
                (side == 0 ? sol.left : sol.right)[sz - t - 1] = value_[vi];
            }
        }
        for (int i = 0; i <= k; ++i) {
            if (!sys_.family_possible(i)) continue;
            bool lc = sys_.left_kind[i] == SlotKind::complete;
            bool rc = sys_.right_kind[k - i] == SlotKind::complete;
            if (lc && rc) {
                sol.u[i] = static_cast<int>(value_[var_of_selector_[i]]);
            } else {
                bool on = true;
                if (!lc) on = on && sol.left[i - t - 1] > 0;
                if (!rc) on = on && sol.right[k - i - t - 1] > 0;
                sol.u[i] = on ? 1 : 0;
            }
        }
        sol.lambda = lambda_ / scale_;
        sol.m = exact_div(sol.lambda, lambda_min(t, k, sys_.v1 + sys_.v2));
        sol.trivial = is_trivial(sol);
        solutions_.push_back(std::move(sol));
    }

    bool is_trivial(const Solution& sol) const {
        const int k = sys_.k, t = sys_.t;
        for (int i = 0; i <= k; ++i)
            if (sys_.family_possible(i) && sol.u[i] != 1) return false;
        for (int sz = t + 1; sz <= k; ++sz) {
            if (sys_.left_kind[sz] == SlotKind::free_slot && sys_.family_possible(sz) &&
                sol.left[sz - t - 1] != lambda_max(t, sz, sys_.v1))
                return false;
            if (sys_.right_kind[sz] == SlotKind::free_slot && sys_.family_possible(k - sz) &&
                sol.right[sz - t - 1] != lambda_max(t, sz, sys_.v2))
                return false;
        }
        return true;
    }

    const EqualitySystem& sys_;
    std::vector<EngineVar> vars_;
    std::vector<EngineTerm> terms_;
    std::vector<std::vector<int>> var_terms_, row_terms_;
    std::vector<std::vector<int>> var_of_slot_;  // [side][size] -> var id
    std::vector<int> var_of_selector_;           // [family] -> var id
    std::vector<int> order_;
    Int scale_{1};

    int nrows_ = 0;
    std::vector<int> active_rows_;  // non-vacuous row indices
    std::vector<Int> base_, resthi_;
    std::vector<int> pending_;
    std::vector<Int> value_;
    std::vector<char> assigned_;
    std::vector<int> trail_;
    Int lambda_{0};
    bool lambda_set_ = false;

    std::vector<Solution> solutions_;
};

inline bool solution_order(const Solution& a, const Solution& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    if (a.left != b.left) return a.left < b.left;
    if (a.right != b.right) return a.right < b.right;
    return a.u < b.u;
}

}  // namespace detail

/// Every satisfying assignment exactly once, sorted by Lambda ascending then
/// lexicographically on (left, right, u). `limit` caps the returned prefix;
/// `workers` splits the root domain across threads (output is identical for
/// any worker count).
inline std::vector<Solution> enumerate_solutions(const EqualitySystem& sys, const SearchSpace& space,
                                                 std::optional<std::uint64_t> limit = std::nullopt,
                                                 int workers = 1) {
    std::vector<Solution> all;
    if (workers <= 1) {
        all = detail::Engine(sys, space).run();
    } else {
        detail::Engine probe(sys, space);
        size_t rootn = probe.root_domain_size();
        int nw = std::min<size_t>(workers, std::max<size_t>(rootn, 1));
        std::vector<std::vector<size_t>> shares(nw);
        for (size_t di = 0; di < rootn; ++di) shares[di % nw].push_back(di);
        std::vector<std::vector<Solution>> results(nw);
        std::vector<std::thread> pool;
        for (int w = 0; w < nw; ++w) {
            pool.emplace_back([&, w] {
                detail::Engine eng(sys, space);
                results[w] = eng.run(shares[w]);
            });
        }
        for (auto& th : pool) th.join();
        for (auto& part : results)
            for (auto& sol : part) all.push_back(std::move(sol));
    }
    std::sort(all.begin(), all.end(), detail::solution_order);
    if (limit && all.size() > *limit) all.resize(*limit);
    return all;
}

struct CheckReport {
    bool pass = false;
    bool malformed = false;   // structural or admissibility problem, not an equality failure
    std::string message;
    std::vector<Rat> row_values;
};

/// Re-evaluates all rows of a claimed solution. Malformed input (wrong shapes,
/// inconsistent selectors, inadmissible index multiplicities, wrong stated
/// Lambda/m bookkeeping) is reported distinctly from an equality failure.
inline CheckReport check_solution(const EqualitySystem& sys, const Solution& sol) {
    CheckReport rep;
    try {
        for (int sz = sys.t + 1; sz <= sys.k; ++sz) {
            auto check_slot = [&](bool left, const Int& val) {
                if (val == 0) return;
                int v_side = left ? sys.v1 : sys.v2;
                auto kind = left ? sys.left_kind[sz] : sys.right_kind[sz];
                if (kind != SlotKind::free_slot)
                    throw std::invalid_argument("index given for non-free slot size " +
                                                std::to_string(sz));
                Int lmin = lambda_min(sys.t, sz, v_side);
                Int lmax = lambda_max(sys.t, sz, v_side);
                if (val % lmin != 0 || val > lmax)
                    throw std::invalid_argument(
                        "inadmissible index " + val.str() + " for slot size " + std::to_string(sz) +
                        " (lambda_min " + lmin.str() + ", lambda_max " + lmax.str() + ")");
            };
            check_slot(true, sol.left_of(sz));
            check_slot(false, sol.right_of(sz));
        }
        rep.row_values = evaluate_rows(sys, sol);
    } catch (const std::exception& e) {
        rep.malformed = true;
        rep.message = e.what();
        return rep;
    }
    Rat common(-1);
    for (int s = 0; s <= sys.t; ++s) {
        if (sys.row_is_vacuous(s)) continue;  // no such t-subsets exist
        if (common < 0) common = rep.row_values[s];
        if (rep.row_values[s] != common) {
            rep.message = "rows are not all equal";
            return rep;
        }
    }
    if (common <= 0) {
        rep.message = "Lambda must be positive";
        return rep;
    }
    if (sol.lambda != 0 && Rat(sol.lambda) != common) {
        rep.message = "stated Lambda " + sol.lambda.str() + " differs from evaluated rows";
        return rep;
    }
    Int lmin = lambda_min(sys.t, sys.k, sys.v1 + sys.v2);
    if (sol.m != 0 && sol.m * lmin != rat_num(common)) {
        rep.malformed = true;
        rep.message = "stated m does not satisfy m * lambda_min = Lambda";
        return rep;
    }
    rep.pass = true;
    return rep;
}

struct CatalogFilterResult {
    std::vector<Solution> kept;  // marked ok or warn
    std::size_t dropped = 0;     // used an index of a present family outside its known set
};

/// Keeps solutions whose nonzero free indices are all existent per the
/// catalog. An index from a family the catalog does not cover marks the
/// solution `warn` (unknown existence) but keeps it; the complete design is
/// existent without any entry.
inline CatalogFilterResult filter_by_catalog(const std::vector<Solution>& sols, const Catalog& cat,
                                             const EqualitySystem& sys) {
    CatalogFilterResult out;
    for (const Solution& sol : sols) {
        bool drop = false, warn = false;
        for (int sz = sys.t + 1; sz <= sys.k && !drop; ++sz) {
            auto probe = [&](bool left, const Int& val) {
                if (val == 0 || drop) return;
                int v_side = left ? sys.v1 : sys.v2;
                if (val == lambda_max(sys.t, sz, v_side)) return;  // complete: always exists
                if (!cat.has_family(sys.t, v_side, sz)) {
                    warn = true;
                    return;
                }
                if (cat.query(sys.t, v_side, sz, val) != Catalog::Existence::existent) drop = true;
            };
            probe(true, sol.left_of(sz));
            probe(false, sol.right_of(sz));
        }
        if (drop) {
            ++out.dropped;
        } else {
            Solution marked = sol;
            marked.catalog = warn ? CatalogMark::warn : CatalogMark::ok;
            out.kept.push_back(std::move(marked));
        }
    }
    return out;
}

/// Splits solutions by the paper's reporting convention m <= LIM.
inline std::pair<std::vector<Solution>, std::vector<Solution>> report_lim_partition(
    const std::vector<Solution>& sols, int t, int k, int v) {
    Int lim = lim_bound(t, k, v);
    std::pair<std::vector<Solution>, std::vector<Solution>> out;
    for (const Solution& s : sols)
        (s.m <= lim ? out.first : out.second).push_back(s);
    return out;
}

}  // namespace tdesign
