#pragma once

// File-backed knowledge base of which ingredient parameter families are known
// to exist. Entries are positive knowledge only: a family/multiplier that is
// absent is "unknown", never "nonexistent". The complete design
// (m = lambda_max/lambda_min) is existent for every family, entry or not.
//
// File format, line oriented ASCII:
//   # comment
//   t v k : m1 m2 m3 ...
// Multipliers are in units of lambda_min(t,k,v).

#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

#include "tdesign/arith.hpp"
#include "tdesign/params.hpp"

namespace tdesign {

/// Line cannot be tokenized at all.
struct CatalogFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Line parses but the content is invalid (range, ordering, duplicates).
struct CatalogContentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CatalogEntry {
    int t = 0, v = 0, k = 0;
    std::set<Int> existent_m;  // multipliers of lambda_min known to exist
};

class Catalog {
  public:
    using Key = std::tuple<int, int, int>;  // (t, v, k)

    enum class Existence { existent, unknown };

    static Catalog load(std::istream& is) {
        Catalog cat;
        std::string line;
        int lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            int t, v, k;
            if (!(ls >> t)) continue;  // blank
            std::string colon;
            if (!(ls >> v >> k >> colon) || colon != ":")
                throw CatalogFormatError("catalog line " + std::to_string(lineno) +
                                         ": want 't v k : m1 m2 ...'");
            if (!(v >= k && k >= t && t >= 0))
                throw CatalogContentError("catalog line " + std::to_string(lineno) +
                                          ": need v >= k >= t >= 0");
            CatalogEntry e{t, v, k, {}};
            Int m_max = exact_div(lambda_max(t, k, v), lambda_min(t, k, v));
            std::string tok;
            while (ls >> tok) {
                Int m;
                try {
                    m = Int(tok);
                } catch (...) {
                    throw CatalogFormatError("catalog line " + std::to_string(lineno) +
                                             ": bad multiplier '" + tok + "'");
                }
                if (m < 1 || m > m_max)
                    throw CatalogContentError("catalog entry " + family_name(t, v, k) +
                                              ": multiplier " + tok + " outside 1.." +
                                              m_max.str() + " (line " + std::to_string(lineno) + ")");
                e.existent_m.insert(m);
            }
            auto [it, fresh] = cat.entries_.try_emplace(Key{t, v, k}, e);
            if (!fresh)
                throw CatalogContentError("catalog line " + std::to_string(lineno) +
                                          ": duplicate family " + family_name(t, v, k));
        }
        return cat;
    }

    /// Canonical form: families sorted by (t,v,k), multipliers ascending.
    void save(std::ostream& os) const {
        for (const auto& [key, e] : entries_) {
            os << e.t << ' ' << e.v << ' ' << e.k << " :";
            for (const Int& m : e.existent_m) os << ' ' << m;
            os << '\n';
        }
    }

    /// Supplement closure within each family (m -> m_max - m) and complement
    /// closure across families (t-(v,k) -> t-(v,v-k)). Idempotent.
    Catalog closed() const {
        Catalog cat = *this;
        bool changed = true;
        while (changed) {
            changed = false;
            auto snapshot = cat.entries_;
            for (const auto& [key, e] : snapshot) {
                Int lmin = lambda_min(e.t, e.k, e.v);
                Int m_max = exact_div(lambda_max(e.t, e.k, e.v), lmin);
                // supplement within the family
                for (const Int& m : e.existent_m) {
                    Int ms = m_max - m;
                    if (ms >= 1) changed |= cat.insert(e.t, e.v, e.k, ms);
                }
                // complement family
                int kc = e.v - e.k;
                if (kc >= e.t) {
                    Int lmin_c = lambda_min(e.t, kc, e.v);
                    for (const Int& m : e.existent_m) {
                        Rat lam_star = Rat(m * lmin) * Rat(binom(e.v - e.k, e.t), binom(e.k, e.t));
                        if (!is_integer(lam_star))
                            throw std::logic_error("catalog closure: non-integer complement index for " +
                                                   family_name(e.t, e.v, e.k));
                        changed |= cat.insert(e.t, e.v, kc, exact_div(rat_num(lam_star), lmin_c));
                    }
                }
            }
        }
        return cat;
    }

    /// Existence of a concrete index lambda (absolute units) in family t-(v,k).
    /// lambda must be a positive multiple of lambda_min.
    Existence query(int t, int v, int k, const Int& lambda) const {
        Int lmin = lambda_min(t, k, v);
        if (lambda <= 0 || lambda % lmin != 0)
            throw std::invalid_argument("catalog query: lambda must be a positive multiple of lambda_min");
        Int m = lambda / lmin;
        Int m_max = exact_div(lambda_max(t, k, v), lmin);
        if (m > m_max)
            throw std::invalid_argument("catalog query: lambda exceeds lambda_max");
        if (m == m_max) return Existence::existent;  // the complete design always exists
        auto it = entries_.find(Key{t, v, k});
        if (it == entries_.end()) return Existence::unknown;
        return it->second.existent_m.count(m) ? Existence::existent : Existence::unknown;
    }

    bool has_family(int t, int v, int k) const { return entries_.count(Key{t, v, k}) > 0; }
    size_t size() const { return entries_.size(); }
    const std::map<Key, CatalogEntry>& entries() const { return entries_; }

    static std::string family_name(int t, int v, int k) {
        return std::to_string(t) + "-(" + std::to_string(v) + "," + std::to_string(k) + ")";
    }

  private:
    /// Returns true if the multiplier was new.
    bool insert(int t, int v, int k, const Int& m) {
        auto [it, fresh] = entries_.try_emplace(Key{t, v, k}, CatalogEntry{t, v, k, {}});
        return it->second.existent_m.insert(m).second;
    }

    std::map<Key, CatalogEntry> entries_;
};

}  // namespace tdesign
