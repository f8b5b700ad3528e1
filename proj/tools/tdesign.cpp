// Command-line frontend for the recursive t-design construction toolkit.
//
// Subcommands: params, solve, verify-solution, compose, check-design,
// catalog validate, catalog close. Every run is fully determined by its
// flags; identical invocations produce byte-identical output.
//
// Exit codes: 0 success / all-pass, 1 verification failure, 2 usage or
// parse error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tdesign/block_design.hpp"
#include "tdesign/catalog.hpp"
#include "tdesign/composer.hpp"
#include "tdesign/equation.hpp"
#include "tdesign/params.hpp"
#include "tdesign/search.hpp"
#include "tdesign/solution.hpp"

namespace {

using namespace tdesign;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct SlotSpec {
    bool left = true;
    int size = 0;
    Int value;
};

// "left:6=18" or "right:7=84"
SlotSpec parse_slot_spec(const std::string& s) {
    auto colon = s.find(':');
    auto eq = s.find('=');
    if (colon == std::string::npos || eq == std::string::npos || eq < colon)
        throw std::runtime_error("bad slot spec '" + s + "', want side:size=value");
    SlotSpec spec;
    std::string side = s.substr(0, colon);
    if (side == "left") spec.left = true;
    else if (side == "right") spec.left = false;
    else throw std::runtime_error("bad side '" + side + "' in slot spec, want left|right");
    spec.size = std::stoi(s.substr(colon + 1, eq - colon - 1));
    spec.value = Int(s.substr(eq + 1));
    return spec;
}

std::string rows_csv(const std::vector<Rat>& rows) {
    std::ostringstream os;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ',';
        os << rat_num(rows[i]);
        if (rat_den(rows[i]) != 1) os << '/' << rat_den(rows[i]);
    }
    return os.str();
}

int cmd_params(int t, int v, int k) {
    std::ostream& os = std::cout;
    Int lmin = lambda_min(t, k, v);
    Int lmax = lambda_max(t, k, v);
    os << "params t=" << t << " v=" << v << " k=" << k << "\n";
    os << "lambda_min = " << lmin << "\n";
    os << "lambda_max = " << lmax << "\n";
    os << "m_max = " << exact_div(lmax, lmin) << "\n";
    os << "LIM = " << lim_bound(t, k, v) << "\n";
    DesignParams p{t, v, k, lmin};
    os << "lambda_s at lambda=lambda_min:";
    for (int s = 0; s <= t; ++s) {
        Rat ls = lambda_s(p, s);
        os << ' ' << rat_num(ls);
        if (rat_den(ls) != 1) os << '/' << rat_den(ls);
    }
    os << "\n";
    return kExitOk;
}

int cmd_solve(int t, int k, int v1, int v2, bool symmetric, const std::string& catalog_path,
              std::optional<std::uint64_t> limit, int workers, const std::string& out_path,
              const std::vector<std::string>& fixes, const std::vector<std::string>& fixes_m,
              const std::vector<std::string>& caps) {
    EqualitySystem sys = build_system(t, k, v1, v2);
    SearchSpace space = SearchSpace::full_grids(sys, symmetric);
    for (const auto& f : fixes) {
        SlotSpec spec = parse_slot_spec(f);
        space.fix_value(spec.left, spec.size, spec.value);
    }
    for (const auto& f : fixes_m) {
        // multiplier units: m * lambda_min of that slot
        SlotSpec spec = parse_slot_spec(f);
        Int lmin = lambda_min(t, spec.size, spec.left ? v1 : v2);
        space.fix_value(spec.left, spec.size, spec.value * lmin);
    }
    for (const auto& c : caps) {
        SlotSpec spec = parse_slot_spec(c);
        space.cap_multiplier(spec.left, spec.size, spec.value);
    }
    std::optional<Catalog> catalog;
    if (!catalog_path.empty()) {
        std::ifstream in(catalog_path);
        if (!in) throw std::runtime_error("cannot open catalog file " + catalog_path);
        catalog = Catalog::load(in);
    }

    std::vector<Solution> sols = enumerate_solutions(sys, space, std::nullopt, workers);
    size_t total = sols.size();
    size_t trivial = 0;
    for (const auto& s : sols) trivial += s.trivial ? 1 : 0;
    auto [below, above] = report_lim_partition(sols, t, k, v1 + v2);

    size_t cat_ok = 0, cat_warn = 0, cat_dropped = 0;
    if (catalog) {
        CatalogFilterResult fr = filter_by_catalog(sols, *catalog, sys);
        cat_dropped = fr.dropped;
        for (const auto& s : fr.kept) (s.catalog == CatalogMark::warn ? cat_warn : cat_ok) += 1;
        sols = std::move(fr.kept);
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open output file " + out_path);
    }
    std::ostream& os = out_path.empty() ? std::cout : file;
    std::uint64_t shown = 0;
    for (const auto& s : sols) {
        if (limit && shown >= *limit) break;
        os << format_solution_line(s) << "\n";
        ++shown;
    }
    os << "# total=" << total << " below-lim=" << below.size() << " trivial=" << trivial;
    if (catalog)
        os << " catalog-ok=" << cat_ok << " catalog-warn=" << cat_warn
           << " catalog-dropped=" << cat_dropped;
    os << "\n";
    return kExitOk;
}

int cmd_verify_solution(const std::string& path, int t, int k, int v1, int v2) {
    EqualitySystem sys = build_system(t, k, v1, v2);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open solution file " + path);
    std::string line;
    int lineno = 0;
    size_t checked = 0, passed = 0;
    bool parse_failed = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        Solution sol;
        try {
            sol = parse_solution_line(line, t, k);
        } catch (const std::exception& e) {
            std::cout << "line " << lineno << ": parse error: " << e.what() << "\n";
            parse_failed = true;
            continue;
        }
        ++checked;
        CheckReport rep = check_solution(sys, sol);
        std::cout << "line " << lineno << ": ";
        if (rep.pass) {
            std::cout << "Lambda=" << rat_num(rep.row_values[0]) << " rows=" << rows_csv(rep.row_values)
                      << " PASS\n";
            ++passed;
        } else if (rep.malformed) {
            std::cout << "MALFORMED: " << rep.message << "\n";
        } else {
            std::cout << "FAIL";
            if (!rep.row_values.empty()) std::cout << " rows=" << rows_csv(rep.row_values);
            std::cout << " (" << rep.message << ")\n";
        }
    }
    std::cout << "# checked=" << checked << " passed=" << passed << "\n";
    if (parse_failed) return kExitUsage;
    return passed == checked ? kExitOk : kExitVerifyFail;
}

int cmd_compose(const std::string& sol_path, int line_no, int t, int k, int v1, int v2,
                const std::vector<std::string>& ingredient_specs, const std::string& out_path,
                long long max_blocks) {
    EqualitySystem sys = build_system(t, k, v1, v2);
    std::ifstream in(sol_path);
    if (!in) throw std::runtime_error("cannot open solution file " + sol_path);
    std::string line;
    int lineno = 0, taken = 0;
    std::optional<Solution> sol;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (++taken == line_no) {
            sol = parse_solution_line(line, t, k);
            break;
        }
    }
    if (!sol) throw std::runtime_error("solution file has no entry number " + std::to_string(line_no));

    IngredientSet ing;
    ing.part = PointPartition{v1, v2};
    for (const auto& spec : ingredient_specs) {
        auto colon = spec.find(':');
        auto eq = spec.find('=');
        if (colon == std::string::npos || eq == std::string::npos || eq < colon)
            throw std::runtime_error("bad ingredient spec '" + spec + "', want side:size=path");
        std::string side = spec.substr(0, colon);
        int size = std::stoi(spec.substr(colon + 1, eq - colon - 1));
        std::string path = spec.substr(eq + 1);
        std::ifstream bf(path);
        if (!bf) throw std::runtime_error("cannot open ingredient file " + path);
        BlockDesign d = read_block_file(bf);
        if (side == "left") ing.left.emplace(size, std::move(d));
        else if (side == "right") ing.right.emplace(size, std::move(d));
        else throw std::runtime_error("bad side '" + side + "' in ingredient spec");
    }
    fill_complete_slots(ing, sys, *sol);

    ComposedDesign cd = compose(sys, *sol, ing, Int(max_blocks));
    ComposedReport rep = verify_composed(cd, sys, *sol);

    // canonical file order with the provenance sidecar aligned to it
    std::vector<size_t> idx(cd.design.blocks.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return cd.design.blocks[a] < cd.design.blocks[b];
    });
    BlockDesign sorted{cd.design.v, cd.design.k, {}};
    sorted.blocks.reserve(idx.size());
    std::ofstream prov(out_path + ".prov");
    if (!prov) throw std::runtime_error("cannot open provenance file " + out_path + ".prov");
    for (size_t fi = 0; fi < idx.size(); ++fi) {
        sorted.blocks.push_back(cd.design.blocks[idx[fi]]);
        prov << fi << '\t' << cd.provenance[idx[fi]].first << '\t' << cd.provenance[idx[fi]].second
             << '\n';
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    write_block_file(out, sorted);

    std::cout << "blocks " << cd.design.blocks.size() << "\n";
    std::cout << "lambda " << cd.lambda << "\n";
    std::cout << "simple " << (rep.simple ? "yes" : "no") << "\n";
    std::cout << "count-identity " << (rep.count_identity ? "yes" : "no") << "\n";
    std::cout << "balance-check " << (rep.exhaustive ? "exhaustive" : "sampled") << "\n";
    for (const auto& f : rep.failures) std::cout << "failure: " << f << "\n";
    std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
    return rep.pass ? kExitOk : kExitVerifyFail;
}

int cmd_check_design(const std::string& path, int t) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open block file " + path);
    BlockDesign d = read_block_file(in);
    std::cout << "v=" << d.v << " k=" << d.k << " b=" << d.blocks.size() << "\n";
    bool simple = is_simple(d);
    std::cout << "simple " << (simple ? "yes" : "no") << "\n";
    BalanceReport rep = verify_t_design(d, t);
    if (rep.is_t_design) {
        std::cout << "t-design yes t=" << t << " lambda=" << rep.lambda << "\n";
    } else {
        std::cout << "t-design no t=" << t << " counterexample=";
        const auto& ce = *rep.counterexample;
        for (size_t i = 0; i < ce.t_subset.size(); ++i)
            std::cout << (i ? "," : "") << ce.t_subset[i];
        std::cout << " count=" << ce.count << " expected=" << ce.expected << "\n";
    }
    return (simple && rep.is_t_design) ? kExitOk : kExitVerifyFail;
}

int cmd_catalog_validate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file " + path);
    Catalog cat = Catalog::load(in);
    std::cout << "ok families=" << cat.size() << "\n";
    return kExitOk;
}

int cmd_catalog_close(const std::string& path, const std::string& out_path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file " + path);
    Catalog cat = Catalog::load(in).closed();
    if (out_path.empty()) {
        cat.save(std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open output file " + out_path);
        cat.save(out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recursive construction of simple t-designs"};
    app.require_subcommand(1);

    // params
    auto* sc_params = app.add_subcommand("params", "design parameter arithmetic for t-(v,k)");
    int p_t = 0, p_v = 0, p_k = 0;
    sc_params->add_option("-t", p_t)->required();
    sc_params->add_option("-v", p_v)->required();
    sc_params->add_option("-k", p_k)->required();

    // solve
    auto* sc_solve = app.add_subcommand("solve", "enumerate solutions of the equality system");
    int s_t = 0, s_k = 0, s_v1 = 0, s_v2 = 0, s_workers = 1;
    bool s_sym = false;
    std::string s_catalog, s_out;
    std::int64_t s_limit = -1;
    std::vector<std::string> s_fix, s_fix_m, s_cap;
    sc_solve->add_option("-t", s_t)->required();
    sc_solve->add_option("-k", s_k)->required();
    sc_solve->add_option("--v1", s_v1)->required();
    sc_solve->add_option("--v2", s_v2)->required();
    sc_solve->add_flag("--symmetric", s_sym, "restrict to symmetric solutions (v1 == v2)");
    sc_solve->add_option("--catalog", s_catalog, "existence catalog file for filtering");
    sc_solve->add_option("--limit", s_limit, "print at most N solutions (summary is unaffected)")
        ->check(CLI::NonNegativeNumber);
    sc_solve->add_option("--workers", s_workers, "solver threads; output is worker-independent")
        ->check(CLI::PositiveNumber);
    sc_solve->add_option("-o,--output", s_out, "write solutions to a file instead of stdout");
    sc_solve->add_option("--fix", s_fix, "pin a slot index, absolute: side:size=lambda (repeatable)");
    sc_solve->add_option("--fix-m", s_fix_m,
                         "pin a slot index in multiplier units: side:size=m (repeatable)");
    sc_solve->add_option("--max-m", s_cap, "cap a slot multiplier: side:size=m (repeatable)");

    // verify-solution
    auto* sc_verify = app.add_subcommand("verify-solution", "re-check solutions from a file");
    std::string vf_path;
    int vf_t = 0, vf_k = 0, vf_v1 = 0, vf_v2 = 0;
    sc_verify->add_option("file", vf_path)->required();
    sc_verify->add_option("-t", vf_t)->required();
    sc_verify->add_option("-k", vf_k)->required();
    sc_verify->add_option("--v1", vf_v1)->required();
    sc_verify->add_option("--v2", vf_v2)->required();

    // compose
    auto* sc_compose = app.add_subcommand("compose", "materialize a solution from ingredient designs");
    std::string c_sol, c_out;
    int c_line = 1, c_t = 0, c_k = 0, c_v1 = 0, c_v2 = 0;
    long long c_guard = 10'000'000;
    std::vector<std::string> c_ing;
    sc_compose->add_option("--solution", c_sol)->required();
    sc_compose->add_option("--line", c_line, "1-based solution index within the file");
    sc_compose->add_option("-t", c_t)->required();
    sc_compose->add_option("-k", c_k)->required();
    sc_compose->add_option("--v1", c_v1)->required();
    sc_compose->add_option("--v2", c_v2)->required();
    sc_compose->add_option("--ingredient", c_ing, "side:size=blockfile (repeatable)");
    sc_compose->add_option("-o,--output", c_out)->required();
    sc_compose->add_option("--max-blocks", c_guard, "block materialization ceiling");

    // check-design
    auto* sc_check = app.add_subcommand("check-design", "verify the t-design property of a block file");
    std::string d_path;
    int d_t = 0;
    sc_check->add_option("file", d_path)->required();
    sc_check->add_option("-t", d_t)->required();

    // catalog
    auto* sc_catalog = app.add_subcommand("catalog", "existence catalog utilities");
    sc_catalog->require_subcommand(1);
    auto* sc_cat_val = sc_catalog->add_subcommand("validate", "parse and validate a catalog file");
    std::string cv_path;
    sc_cat_val->add_option("file", cv_path)->required();
    auto* sc_cat_close = sc_catalog->add_subcommand("close", "apply supplement/complement closure");
    std::string cc_path, cc_out;
    sc_cat_close->add_option("file", cc_path)->required();
    sc_cat_close->add_option("-o,--output", cc_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(sc_params)) return cmd_params(p_t, p_v, p_k);
        if (app.got_subcommand(sc_solve)) {
            std::optional<std::uint64_t> limit;
            if (s_limit >= 0) limit = static_cast<std::uint64_t>(s_limit);
            return cmd_solve(s_t, s_k, s_v1, s_v2, s_sym, s_catalog, limit, s_workers, s_out,
                             s_fix, s_fix_m, s_cap);
        }
        if (app.got_subcommand(sc_verify))
            return cmd_verify_solution(vf_path, vf_t, vf_k, vf_v1, vf_v2);
        if (app.got_subcommand(sc_compose))
            return cmd_compose(c_sol, c_line, c_t, c_k, c_v1, c_v2, c_ing, c_out, c_guard);
        if (app.got_subcommand(sc_check)) return cmd_check_design(d_path, d_t);
        if (app.got_subcommand(sc_catalog)) {
            if (sc_catalog->got_subcommand(sc_cat_val)) return cmd_catalog_validate(cv_path);
            return cmd_catalog_close(cc_path, cc_out);
        }
    } catch (const CatalogFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CatalogContentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
