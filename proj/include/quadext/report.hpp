#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "quadext/bounds.hpp"
#include "quadext/eqgen.hpp"
#include "quadext/tables.hpp"

namespace quadext {

/// Full analysis of one compositum: genus, exact place count, per-place
/// status log, subfield genera, defining equation, and bound comparison.
struct CurveReport {
    CompositumSpec spec;
    unsigned genus = 0;
    std::uint64_t N = 0;
    std::vector<unsigned> subfield_genera;  // by subset mask, 1 .. 2^n-1
    std::vector<std::string> character_lines;  // one per subfield, mask order
    CharacterLattice::CountResult count;
    DefiningEquation equation;
    std::uint64_t serre = 0, hasse_weil = 0;

    std::string field_description() const { return spec.field->describe(); }

    std::string subset_name(unsigned mask) const {
        std::string s = "f";
        for (unsigned i = 0; i < spec.n(); ++i)
            if (mask & (1u << i)) s += std::to_string(i + 1);
        return s;
    }

    std::string text(bool verbose = false) const {
        std::ostringstream os;
        os << "field:     " << field_description() << "\n";
        for (unsigned i = 0; i < spec.n(); ++i)
            os << "f" << (i + 1) << ":        " << format_canonical(spec.f[i]) << "\n";
        os << "genus:     " << genus << "\n";
        os << "N:         " << N << "\n";
        os << "subfields:";
        for (unsigned m = 1; m <= subfield_genera.size(); ++m)
            os << " g(" << subset_name(m) << ")=" << subfield_genera[m - 1];
        os << "\n";
        os << "equation:  " << equation.str() << "\n";
        os << "serre:     " << serre << "   hasse-weil: " << hasse_weil << "\n";
        if (verbose) {
            os << "characters:\n";
            for (unsigned m = 1; m <= character_lines.size(); ++m)
                os << "  " << subset_name(m) << ": " << character_lines[m - 1] << "\n";
            os << "places:\n";
            for (const auto& e : count.log) {
                os << "  " << e.place.str() << ": [";
                for (std::size_t i = 0; i < e.statuses.size(); ++i)
                    os << (i ? "," : "") << to_string(e.statuses[i]);
                os << "] -> " << e.contribution;
                if (e.in_affine_count) os << "  (affine fiber " << e.affine_fiber << ")";
                os << "\n";
            }
        }
        return os.str();
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["q"] = spec.field->size();
        j["field"] = field_description();
        j["modulus"] = spec.field->modulus();
        j["w"] = spec.field->coeffs_of(spec.field->generator_value());
        j["mode"] = spec.artin_schreier() ? "artin-schreier" : "kummer";
        j["n"] = spec.n();
        nlohmann::ordered_json fs = nlohmann::ordered_json::array();
        for (const auto& f : spec.f) fs.push_back(format_canonical(f));
        j["f"] = fs;
        j["genus"] = genus;
        j["N"] = N;
        nlohmann::ordered_json sub = nlohmann::ordered_json::array();
        for (unsigned m = 1; m <= subfield_genera.size(); ++m)
            sub.push_back({{"subset", subset_name(m)},
                           {"genus", subfield_genera[m - 1]},
                           {"character", character_lines[m - 1]}});
        j["subfield_genera"] = sub;
        j["equation"] = equation.str();
        auto cleared = equation.cleared();
        nlohmann::ordered_json cj;
        cj["denominator"] = cleared.denominator.str();
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < cleared.coeffs.size(); ++k) {
            const auto& p = cleared.coeffs[k];
            for (int i = 0; i <= p.degree(); ++i) {
                if (p.coeff_value(static_cast<std::size_t>(i)) == 0) continue;
                terms.push_back({{"y", k},
                                 {"x", i},
                                 {"c", spec.field->element_str(
                                           p.coeff_value(static_cast<std::size_t>(i)))}});
            }
        }
        cj["terms"] = terms;
        j["equation_cleared"] = cj;
        j["serre_bound"] = serre;
        j["hasse_weil_bound"] = hasse_weil;
        nlohmann::ordered_json log = nlohmann::ordered_json::array();
        for (const auto& e : count.log) {
            nlohmann::ordered_json ej;
            ej["place"] = e.place.str();
            nlohmann::ordered_json st = nlohmann::ordered_json::array();
            for (auto s : e.statuses) st.push_back(to_string(s));
            ej["statuses"] = st;
            ej["contribution"] = e.contribution;
            if (e.in_affine_count) ej["affine_fiber"] = e.affine_fiber;
            log.push_back(ej);
        }
        j["places"] = log;
        return j;
    }

    /// One dataset-format record for this construction.
    std::string dataset_line() const {
        std::ostringstream os;
        os << "q=" << spec.field->size() << " g=" << genus << " N=" << N << " flags=found f=";
        for (std::size_t i = 0; i < spec.f.size(); ++i) {
            if (i) os << ";";
            for (char c : format_canonical(spec.f[i]))
                if (c != ' ') os << c;
        }
        return os.str();
    }
};

inline CurveReport make_report(const CompositumSpec& spec,
                               std::uint64_t seed = kDefaultFactorSeed) {
    CurveReport r;
    r.spec = spec;
    auto lat = CharacterLattice::build(spec, kMaxGenerators, seed);
    r.genus = lat.genus();
    r.subfield_genera = lat.subfield_genera();
    for (unsigned m = 1; m <= lat.size(); ++m)
        r.character_lines.push_back(lat.character(m).describe());
    r.count = lat.count_rational_places();
    r.N = r.count.N;
    r.equation = minimal_polynomial(spec);
    if (!verify_membership(r.equation, spec))
        throw Error("generated equation failed the membership self-check");
    r.serre = serre_bound(spec.field->size(), r.genus);
    r.hasse_weil = hasse_weil_bound(spec.field->size(), r.genus);
    if (r.N > r.serre) throw Error("place count exceeds the Serre bound; internal error");
    return r;
}

}  // namespace quadext
