#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quadext/bounds.hpp"
#include "quadext/compositum.hpp"
#include "quadext/eqgen.hpp"
#include "quadext/parallel.hpp"
#include "quadext/tables_data.hpp"

namespace quadext {

/// One dataset record.  `clean()` rows are the verification gate; rows
/// flagged suspect or incomplete are reported but never fail the gate.
struct TableRow {
    unsigned q = 0;
    unsigned expected_g = 0;
    std::uint64_t expected_N = 0;
    std::vector<std::string> flags;
    std::vector<std::string> f_exprs;
    std::optional<std::string> printed_equation;
    std::optional<std::string> nq_range;
    std::size_t line = 0;

    bool has_flag(const std::string& f) const {
        for (const auto& x : flags)
            if (x == f) return true;
        return false;
    }
    bool suspect() const { return has_flag("suspect"); }
    bool incomplete() const { return has_flag("incomplete"); }
    bool clean() const { return !suspect() && !incomplete(); }
    bool uses_w() const {
        for (const auto& e : f_exprs)
            if (e.find('w') != std::string::npos) return true;
        return false;
    }
    std::string id() const {
        return "q=" + std::to_string(q) + " g=" + std::to_string(expected_g);
    }
};

inline std::vector<TableRow> parse_dataset(std::string_view text) {
    std::vector<TableRow> rows;
    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        TableRow row;
        row.line = lineno;
        bool have_q = false, have_g = false, have_n = false, have_f = false;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw Error("dataset line " + std::to_string(lineno) + ": bad token '" + tok + "'");
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            try {
                if (key == "q") {
                    row.q = static_cast<unsigned>(std::stoul(val));
                    have_q = true;
                } else if (key == "g") {
                    row.expected_g = static_cast<unsigned>(std::stoul(val));
                    have_g = true;
                } else if (key == "N") {
                    row.expected_N = std::stoull(val);
                    have_n = true;
                } else if (key == "flags") {
                    std::istringstream fs(val);
                    std::string f;
                    while (std::getline(fs, f, ',')) row.flags.push_back(f);
                } else if (key == "f") {
                    have_f = true;
                    if (val != "-") {
                        std::istringstream fs(val);
                        std::string f;
                        while (std::getline(fs, f, ';')) row.f_exprs.push_back(f);
                    }
                } else if (key == "eq") {
                    row.printed_equation = val;
                } else if (key == "range") {
                    row.nq_range = val;
                } else {
                    throw Error("unknown key '" + key + "'");
                }
            } catch (const std::exception& e) {
                throw Error("dataset line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (!have_q || !have_g || !have_n || !have_f || row.flags.empty())
            throw Error("dataset line " + std::to_string(lineno) + ": missing required field");
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<TableRow> builtin_table_rows() { return parse_dataset(kBuiltinTables); }

inline std::vector<TableRow> load_dataset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open dataset file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_dataset(ss.str());
}

struct VerifyOptions {
    bool generator_scan = true;
    bool include_suspect = false;
    unsigned jobs = 0;          // 0 = hardware concurrency
    bool place_log_on_mismatch = true;
    std::uint64_t seed = kDefaultFactorSeed;
};

struct RowVerdict {
    enum class Kind { match, mismatch, skipped, parse_failure };
    Kind kind = Kind::skipped;
    TableRow row;
    unsigned computed_g = 0;        // from the best candidate generator
    std::uint64_t computed_N = 0;
    int matched_w = -1;             // packed value of the matching generator
    unsigned candidates_tried = 0;
    std::string detail;             // reason / diagnostics
    std::string equation_note;      // informative printed-equation comparison

    bool ok() const { return kind == Kind::match || kind == Kind::skipped; }
};

namespace detail {

inline void append_place_log(std::ostringstream& os, const CharacterLattice& lat) {
    auto count = lat.count_rational_places();
    for (const auto& e : count.log) {
        os << "\n    " << e.place.str() << ": [";
        for (std::size_t i = 0; i < e.statuses.size(); ++i)
            os << (i ? "," : "") << to_string(e.statuses[i]);
        os << "] -> " << e.contribution;
    }
}

inline std::string compare_printed_equation(const TableRow& row, const CompositumSpec& spec,
                                            std::optional<FieldElement> w) {
    if (!row.printed_equation) return {};
    try {
        auto printed = parse_equation_text(*row.printed_equation, spec.field, w);
        auto eq = minimal_polynomial(spec);
        if (printed.size() != eq.coeffs.size()) {
            return "printed equation has Y-degree " + std::to_string(printed.size() - 1) +
                   ", regenerated " + std::to_string(eq.coeffs.size() - 1);
        }
        std::string diffs;
        for (std::size_t k = 0; k < printed.size(); ++k) {
            if (printed[k] != eq.coeffs[k]) {
                if (!diffs.empty()) diffs += "; ";
                diffs += "Y^" + std::to_string(k) + ": printed " + format_canonical(printed[k]) +
                         " vs regenerated " + format_canonical(eq.coeffs[k]);
            }
        }
        return diffs.empty() ? "printed equation matches the regenerated one" : diffs;
    } catch (const Error& e) {
        return std::string("printed equation did not parse/lower: ") + e.what();
    }
}

}  // namespace detail

/// Check one row: parse the f_i, build the compositum, compare (g, N).
/// Rows whose expressions mention w are tried under every primitive element
/// as the generator (unless scanning is disabled); a single hit is a match.
inline RowVerdict verify_row(const TableRow& row, const VerifyOptions& opts = {}) {
    RowVerdict v;
    v.row = row;
    if (row.incomplete()) {
        v.kind = RowVerdict::Kind::skipped;
        v.detail = "incomplete row: a needed cell is blank in the source";
        return v;
    }
    if (row.suspect() && !opts.include_suspect) {
        v.kind = RowVerdict::Kind::skipped;
        v.detail = "transcription-suspect row (rerun with suspect rows included to inspect)";
        return v;
    }
    FieldPtr field;
    try {
        field = GaloisField::of_size(row.q);
    } catch (const Error& e) {
        v.kind = RowVerdict::Kind::parse_failure;
        v.detail = e.what();
        return v;
    }

    std::vector<std::optional<FieldElement>> candidates;
    if (row.uses_w() && opts.generator_scan) {
        for (const auto& w : field->primitive_elements()) candidates.emplace_back(w);
    } else {
        candidates.emplace_back(std::nullopt);
    }

    std::ostringstream attempts;
    bool parsed_any = false;
    for (const auto& w : candidates) {
        ++v.candidates_tried;
        CompositumSpec spec;
        spec.field = field;
        try {
            for (const auto& e : row.f_exprs) spec.f.push_back(parse_expr(e, field, w));
            parsed_any = true;
            auto lat = CharacterLattice::build(spec, kMaxGenerators, opts.seed);
            unsigned g = lat.genus();
            if (v.candidates_tried == 1) v.computed_g = g;
            if (g != row.expected_g) {
                attempts << "\n  w=" << (w ? w->str() : std::string("-")) << ": genus " << g
                         << " (expected " << row.expected_g << ")";
                continue;
            }
            auto N = lat.count_rational_places().N;
            v.computed_g = g;
            v.computed_N = N;
            if (N == row.expected_N) {
                v.kind = RowVerdict::Kind::match;
                v.matched_w = w ? static_cast<int>(w->value()) : -1;
                v.equation_note = detail::compare_printed_equation(row, spec, w);
                return v;
            }
            attempts << "\n  w=" << (w ? w->str() : std::string("-")) << ": genus " << g
                     << " but N " << N << " (expected " << row.expected_N << ")";
            if (opts.place_log_on_mismatch) detail::append_place_log(attempts, lat);
        } catch (const ParseError& e) {
            attempts << "\n  w=" << (w ? w->str() : std::string("-")) << ": parse error: "
                     << e.what();
        } catch (const NotDisjoint& e) {
            attempts << "\n  w=" << (w ? w->str() : std::string("-")) << ": " << e.what();
        } catch (const DegenerateExtension& e) {
            attempts << "\n  w=" << (w ? w->str() : std::string("-")) << ": " << e.what();
        }
    }
    if (parsed_any) {
        v.kind = RowVerdict::Kind::mismatch;
        v.detail = "no generator assignment reproduced the row;" + attempts.str();
    } else {
        // unparseable cells are transcription noise: the row is downgraded to
        // transcription-suspect instead of failing the gate
        v.kind = RowVerdict::Kind::parse_failure;
        v.detail = "downgraded to transcription-suspect (expressions did not parse);" +
                   attempts.str();
    }
    return v;
}

struct VerifySummary {
    std::vector<RowVerdict> verdicts;
    unsigned matched = 0, mismatched = 0, skipped = 0, parse_failures = 0;
    bool all_clean_rows_match = true;

    std::string oneline() const {
        std::ostringstream os;
        os << matched << " matched, " << mismatched << " mismatched, " << skipped
           << " skipped, " << parse_failures << " parse failures";
        return os.str();
    }
};

template <typename Predicate>
inline VerifySummary verify_rows(const std::vector<TableRow>& rows, Predicate pred,
                                 const VerifyOptions& opts = {}) {
    std::vector<const TableRow*> selected;
    for (const auto& r : rows)
        if (pred(r)) selected.push_back(&r);
    VerifySummary sum;
    sum.verdicts = parallel_map<RowVerdict>(
        selected.size(), [&](std::size_t i) { return verify_row(*selected[i], opts); }, opts.jobs);
    for (const auto& v : sum.verdicts) {
        switch (v.kind) {
            case RowVerdict::Kind::match: ++sum.matched; break;
            case RowVerdict::Kind::mismatch: ++sum.mismatched; break;
            case RowVerdict::Kind::skipped: ++sum.skipped; break;
            case RowVerdict::Kind::parse_failure: ++sum.parse_failures; break;
        }
        if (v.row.clean() && v.kind == RowVerdict::Kind::mismatch)
            sum.all_clean_rows_match = false;
        // Every verified row must respect the Serre bound.
        if (v.kind == RowVerdict::Kind::match &&
            v.computed_N > serre_bound(v.row.q, v.computed_g))
            throw Error("row " + v.row.id() + " violates the Serre bound");
    }
    return sum;
}

inline VerifySummary verify_all(const std::vector<TableRow>& rows,
                                const VerifyOptions& opts = {}) {
    return verify_rows(rows, [](const TableRow&) { return true; }, opts);
}

}  // namespace quadext
