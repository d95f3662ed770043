// Command-line frontend: construct composita of quadratic extensions of
// F_q(x), verify the bundled tables, search for constructions with many
// rational places, and print the classical bounds.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadext/report.hpp"
#include "quadext/search.hpp"

using namespace quadext;

namespace {

// Exit codes shared by all subcommands (documented in the README).
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNotDisjoint = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitMismatch = 5;
constexpr int kExitDataset = 6;

std::vector<unsigned> parse_coeff_list(const std::string& text) {
    std::vector<unsigned> out;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(static_cast<unsigned>(std::stoul(tok)));
    return out;
}

struct CommonOptions {
    std::string format = "text";
    std::uint64_t seed = kDefaultFactorSeed;
    unsigned jobs = 0;

    bool machine() const { return format == "machine"; }
};

FieldPtr make_field(unsigned q, const std::string& modulus_csv) {
    if (modulus_csv.empty()) return GaloisField::of_size(q);
    unsigned p = q % 2 == 0 ? 2 : 3;
    unsigned e = 0;
    for (unsigned n = q; n > 1; n /= p) ++e;
    return GaloisField::make(p, e, parse_coeff_list(modulus_csv));
}

int cmd_construct(unsigned q, const std::vector<std::string>& f_exprs,
                  const std::string& modulus_csv, const std::string& w_csv,
                  const std::string& char_mode, bool verbose, const CommonOptions& common) {
    FieldPtr field = make_field(q, modulus_csv);
    if (!char_mode.empty()) {
        bool as = field->characteristic() == 2;
        if ((char_mode == "artin-schreier") != as) {
            std::cerr << "error: q=" << q << " implies "
                      << (as ? "artin-schreier" : "kummer") << " mode, not " << char_mode
                      << "\n";
            return kExitParse;
        }
    }
    std::optional<FieldElement> w;
    if (!w_csv.empty()) {
        auto coeffs = parse_coeff_list(w_csv);
        unsigned value = 0, mult = 1;
        for (unsigned c : coeffs) {
            value += c * mult;
            mult *= field->characteristic();
        }
        FieldElement cand = field->element(value);
        if (field->multiplicative_order(value) != field->size() - 1) {
            std::cerr << "error: requested w is not a generator of the multiplicative group\n";
            return kExitParse;
        }
        w = cand;
    }

    CompositumSpec spec;
    spec.field = field;
    for (const auto& e : f_exprs) spec.f.push_back(parse_expr(e, field, w));
    CurveReport report = make_report(spec, common.seed);
    if (common.machine())
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.text(verbose);
    return kExitOk;
}

int cmd_verify_tables(const std::string& dataset_path, int q_filter, int g_filter,
                      const std::string& row_spec, bool include_suspect, bool no_scan,
                      const CommonOptions& common) {
    std::vector<TableRow> rows;
    try {
        const char* env = std::getenv("QUADEXT_TABLES");
        if (!dataset_path.empty())
            rows = load_dataset_file(dataset_path);
        else if (env && *env)
            rows = load_dataset_file(env);
        else
            rows = builtin_table_rows();
    } catch (const Error& e) {
        std::cerr << "dataset error: " << e.what() << "\n";
        return kExitDataset;
    }

    int rq = q_filter, rg = g_filter;
    if (!row_spec.empty()) {
        // --row q=3,g=4
        unsigned pq = 0, pg = 0;
        if (std::sscanf(row_spec.c_str(), "q=%u,g=%u", &pq, &pg) != 2) {
            std::cerr << "error: --row expects q=<int>,g=<int>\n";
            return kExitParse;
        }
        rq = static_cast<int>(pq);
        rg = static_cast<int>(pg);
    }

    VerifyOptions opts;
    opts.include_suspect = include_suspect;
    opts.generator_scan = !no_scan;
    opts.jobs = common.jobs;
    opts.seed = common.seed;
    auto sum = verify_rows(
        rows,
        [&](const TableRow& r) {
            if (rq >= 0 && r.q != static_cast<unsigned>(rq)) return false;
            if (rg >= 0 && r.expected_g != static_cast<unsigned>(rg)) return false;
            return true;
        },
        opts);

    if (common.machine()) {
        nlohmann::ordered_json j;
        j["dataset_rows"] = sum.verdicts.size();
        nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
        for (const auto& v : sum.verdicts) {
            nlohmann::ordered_json rj;
            rj["q"] = v.row.q;
            rj["g"] = v.row.expected_g;
            rj["N"] = v.row.expected_N;
            rj["flags"] = v.row.flags;
            switch (v.kind) {
                case RowVerdict::Kind::match: rj["verdict"] = "match"; break;
                case RowVerdict::Kind::mismatch: rj["verdict"] = "mismatch"; break;
                case RowVerdict::Kind::skipped: rj["verdict"] = "skipped"; break;
                case RowVerdict::Kind::parse_failure: rj["verdict"] = "parse-failure"; break;
            }
            if (v.kind == RowVerdict::Kind::match) {
                rj["computed_g"] = v.computed_g;
                rj["computed_N"] = v.computed_N;
                if (v.matched_w >= 0) rj["w"] = static_cast<unsigned>(v.matched_w);
                if (!v.equation_note.empty()) rj["equation_note"] = v.equation_note;
            } else if (!v.detail.empty()) {
                rj["detail"] = v.detail;
            }
            rows_json.push_back(rj);
        }
        j["rows"] = rows_json;
        j["summary"] = sum.oneline();
        j["all_clean_rows_match"] = sum.all_clean_rows_match;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& v : sum.verdicts) {
            std::string k = v.kind == RowVerdict::Kind::match      ? "match"
                            : v.kind == RowVerdict::Kind::mismatch ? "MISMATCH"
                            : v.kind == RowVerdict::Kind::skipped  ? "skipped"
                                                                   : "PARSE-FAILURE";
            std::cout << v.row.id() << ": " << k;
            if (v.kind == RowVerdict::Kind::match) {
                std::cout << " (g=" << v.computed_g << ", N=" << v.computed_N;
                if (v.matched_w >= 0)
                    std::cout << ", w=" << v.row.q << ":" << v.matched_w;
                std::cout << ")";
                if (!v.equation_note.empty()) std::cout << "  [" << v.equation_note << "]";
            } else if (v.kind != RowVerdict::Kind::match && !v.detail.empty()) {
                std::cout << "  " << v.detail;
            }
            std::cout << "\n";
        }
        std::cout << "summary: " << sum.oneline() << "\n";
    }
    return sum.all_clean_rows_match ? kExitOk : kExitMismatch;
}

int cmd_search(unsigned q, unsigned n, unsigned genus_cap, unsigned max_degree,
               unsigned max_total_degree, const std::string& even_poles, unsigned max_order,
               bool no_infinity, bool no_constant_shift, bool no_nonsquare_constants,
               bool affine_symmetry, const std::string& export_path,
               const CommonOptions& common) {
    FieldPtr field = GaloisField::of_size(q);
    SearchSpace space;
    if (field->characteristic() == 2) {
        EvenSearchOptions e;
        if (even_poles == "rational" || even_poles.empty())
            e.max_place_degree = 1;
        else
            e.max_place_degree = static_cast<unsigned>(std::stoul(even_poles));
        e.max_pole_order = max_order;
        e.include_infinity = !no_infinity;
        e.constant_shift = !no_constant_shift;
        space = SearchSpace::even_space(field, n, genus_cap, e);
    } else {
        OddSearchOptions o;
        o.max_factor_degree = max_degree;
        o.max_total_degree = max_total_degree ? max_total_degree : max_degree;
        o.nonsquare_constants = !no_nonsquare_constants;
        space = SearchSpace::odd_space(field, n, genus_cap, o, affine_symmetry);
    }
    auto result = run_search(space, common.jobs, common.seed);

    if (common.machine()) {
        nlohmann::ordered_json j;
        j["q"] = q;
        j["n"] = n;
        j["genus_cap"] = genus_cap;
        j["pool_size"] = result.pool.size();
        j["candidates"] = result.book.candidates;
        j["evaluated"] = result.book.evaluated;
        j["not_disjoint"] = result.book.not_disjoint;
        j["pruned"] = result.book.pruned;
        nlohmann::ordered_json recs = nlohmann::ordered_json::array();
        for (const auto& [g, rec] : result.book.by_genus) {
            nlohmann::ordered_json rj;
            rj["genus"] = g;
            rj["N"] = rec.N;
            nlohmann::ordered_json fs = nlohmann::ordered_json::array();
            for (auto i : rec.witness) fs.push_back(format_canonical(result.pool[i]));
            rj["f"] = fs;
            rj["serre_bound"] = serre_bound(q, g);
            rj["ties"] = rec.ties.size();
            recs.push_back(rj);
        }
        j["records"] = recs;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "pool " << result.pool.size() << ", candidates " << result.book.candidates
                  << " (evaluated " << result.book.evaluated << ", not disjoint "
                  << result.book.not_disjoint << ", pruned " << result.book.pruned << ")\n";
        for (const auto& [g, rec] : result.book.by_genus) {
            std::cout << "g=" << g << ": N=" << rec.N << " (serre " << serre_bound(q, g)
                      << ") via";
            for (auto i : rec.witness)
                std::cout << "  " << format_canonical(result.pool[i]);
            if (!rec.ties.empty()) std::cout << "  [+" << rec.ties.size() << " ties]";
            std::cout << "\n";
        }
    }
    if (!export_path.empty()) {
        std::ofstream out(export_path);
        if (!out) {
            std::cerr << "error: cannot write " << export_path << "\n";
            return kExitDataset;
        }
        out << "# records exported by 'quadext search'; verify with "
               "'quadext verify-tables --dataset <this file>'\n";
        out << export_records(result);
    }
    return kExitOk;
}

int cmd_bounds(unsigned q, unsigned g, const CommonOptions& common) {
    if (common.machine()) {
        nlohmann::ordered_json j;
        j["q"] = q;
        j["g"] = g;
        j["serre_bound"] = serre_bound(q, g);
        j["hasse_weil_bound"] = hasse_weil_bound(q, g);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "serre:      " << serre_bound(q, g) << "\n"
                  << "hasse-weil: " << hasse_weil_bound(q, g) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"composita of quadratic extensions of F_q(x): construction, "
                 "table verification, record search, bounds"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("--format", common.format, "output format: text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--seed", common.seed, "seed for randomized internals");
    app.add_option("--jobs", common.jobs, "worker threads (0 = hardware)");

    auto* construct = app.add_subcommand("construct", "analyze one compositum");
    unsigned q = 0;
    std::vector<std::string> f_exprs;
    std::string modulus_csv, w_csv, char_mode;
    bool verbose = false;
    construct->add_option("--q", q, "field size (power of 2 or 3)")->required();
    construct->add_option("--f", f_exprs, "defining function (repeat 1..4 times)")
        ->required()
        ->expected(-1);
    construct->add_option("--modulus", modulus_csv,
                          "field modulus, ascending coefficients over F_p (e.g. 1,1,1)");
    construct->add_option("--w", w_csv, "generator element, ascending coefficients over F_p");
    construct->add_option("--char-mode", char_mode, "assert kummer or artin-schreier")
        ->check(CLI::IsMember({"kummer", "artin-schreier"}));
    construct->add_flag("--verbose", verbose, "print the per-place status log");

    auto* verify = app.add_subcommand("verify-tables", "verify the bundled dataset");
    std::string dataset_path, row_spec;
    int q_filter = -1, g_filter = -1;
    bool include_suspect = false, no_scan = false;
    verify->add_option("--dataset", dataset_path,
                       "dataset file (default: builtin; env QUADEXT_TABLES overrides)");
    verify->add_option("--q", q_filter, "restrict to one field size");
    verify->add_option("--g", g_filter, "restrict to one genus");
    verify->add_option("--row", row_spec, "single row, e.g. q=3,g=4");
    verify->add_flag("--include-suspect", include_suspect,
                     "also run rows flagged transcription-suspect (reported, non-failing)");
    verify->add_flag("--no-generator-scan", no_scan, "use only the default generator for w");

    auto* search = app.add_subcommand("search", "exhaustive record search");
    unsigned n = 2, genus_cap = 4, max_degree = 3, max_total_degree = 0, max_order = 1;
    std::string even_poles, export_path;
    bool no_infinity = false, no_constant_shift = false, no_nonsquare_constants = false;
    bool affine_symmetry = false;
    search->add_option("--q", q, "field size")->required();
    search->add_option("--n", n, "number of generators (1..4)");
    search->add_option("--genus-cap", genus_cap, "prune candidates above this genus");
    search->add_option("--max-degree", max_degree,
                       "odd mode: max degree of pool irreducibles");
    search->add_option("--max-total-degree", max_total_degree,
                       "odd mode: max degree of each f_i (default: --max-degree)");
    search->add_option("--even-poles", even_poles,
                       "even mode: 'rational' or a max place degree");
    search->add_option("--max-order", max_order, "even mode: max (odd) pole order");
    search->add_flag("--no-infinity", no_infinity, "even mode: no pole at infinity");
    search->add_flag("--no-constant-shift", no_constant_shift,
                     "even mode: drop the trace-1 constant variants");
    search->add_flag("--no-nonsquare-constants", no_nonsquare_constants,
                     "odd mode: monic candidates only");
    search->add_flag("--affine-symmetry", affine_symmetry,
                     "odd mode: enumerate one representative per x -> a*x+b orbit");
    search->add_option("--export", export_path, "write records in dataset format");

    auto* bounds = app.add_subcommand("bounds", "print Serre and Hasse-Weil bounds");
    unsigned bg = 0;
    bounds->add_option("--q", q, "field size")->required();
    bounds->add_option("--g", bg, "genus")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed())
            return cmd_construct(q, f_exprs, modulus_csv, w_csv, char_mode, verbose, common);
        if (verify->parsed())
            return cmd_verify_tables(dataset_path, q_filter, g_filter, row_spec,
                                     include_suspect, no_scan, common);
        if (search->parsed())
            return cmd_search(q, n, genus_cap, max_degree, max_total_degree, even_poles,
                              max_order, no_infinity, no_constant_shift,
                              no_nonsquare_constants, affine_symmetry, export_path, common);
        if (bounds->parsed()) return cmd_bounds(q, bg, common);
    } catch (const ParseError& e) {
        std::cerr << "expression error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotDisjoint& e) {
        std::cerr << "not disjoint: " << e.what() << "\n";
        return kExitNotDisjoint;
    } catch (const DegenerateExtension& e) {
        std::cerr << "degenerate extension: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
