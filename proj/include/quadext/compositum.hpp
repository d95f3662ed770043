#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "quadext/quadchar.hpp"

namespace quadext {

/// Defining data of the compositum L = K_1 ... K_n over k = F_q(x).
struct CompositumSpec {
    FieldPtr field;
    std::vector<RationalFunction> f;

    unsigned n() const { return static_cast<unsigned>(f.size()); }
    bool artin_schreier() const { return field->characteristic() == 2; }
};

constexpr unsigned kMaxGenerators = 4;

/// The 2^n - 1 quadratic subfields K_I of L, one per nonempty subset I of
/// the generators: f_I is the product of the chosen f_i in odd
/// characteristic and their sum in characteristic 2.  Construction doubles
/// as the disjointness check: every f_I must define a genuine geometric
/// quadratic extension.
class CharacterLattice {
public:
    static CharacterLattice build(const CompositumSpec& spec,
                                  unsigned max_generators = kMaxGenerators,
                                  std::uint64_t seed = kDefaultFactorSeed) {
        if (spec.n() == 0) throw DomainError("compositum needs at least one generator");
        if (spec.n() > max_generators)
            throw DomainError("more than " + std::to_string(max_generators) + " generators");
        for (const auto& fi : spec.f)
            if (!fi.field()->same_field(*spec.field))
                throw DomainError("generator over a different field");

        CharacterLattice lat;
        lat.spec_ = spec;
        unsigned n = spec.n();
        std::vector<RationalFunction> combined(1u << n, RationalFunction::zero(spec.field));
        combined[0] = spec.artin_schreier() ? RationalFunction::zero(spec.field)
                                            : RationalFunction::one(spec.field);
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            unsigned low = mask & (mask - 1);
            unsigned bit = mask ^ low;
            unsigned i = 0;
            while (!(bit & (1u << i))) ++i;
            combined[mask] = spec.artin_schreier() ? combined[low] + spec.f[i]
                                                   : combined[low] * spec.f[i];
            try {
                lat.chars_.push_back(QuadraticCharacter::analyze(combined[mask], seed));
            } catch (const DegenerateExtension& e) {
                // a degenerate single generator is the caller's input error,
                // not a disjointness failure between generators
                if ((mask & (mask - 1)) == 0) throw;
                std::ostringstream os;
                os << "generators are not disjoint: subset {";
                bool first = true;
                for (unsigned j = 0; j < n; ++j)
                    if (mask & (1u << j)) {
                        if (!first) os << ",";
                        os << (j + 1);
                        first = false;
                    }
                os << "} is degenerate: " << e.what();
                throw NotDisjoint(mask, e.kind, os.str());
            }
        }
        return lat;
    }

    const CompositumSpec& spec() const { return spec_; }
    unsigned generators() const { return spec_.n(); }
    unsigned size() const { return static_cast<unsigned>(chars_.size()); }
    /// Character of the subset with bit i-1 <-> generator i; mask in [1, 2^n).
    const QuadraticCharacter& character(unsigned mask) const { return chars_.at(mask - 1); }

    std::vector<unsigned> subfield_genera() const {
        std::vector<unsigned> g;
        g.reserve(chars_.size());
        for (const auto& c : chars_) g.push_back(c.genus());
        return g;
    }

    /// Genus of L as the sum of the subfield genera.
    unsigned genus() const {
        unsigned g = 0;
        for (const auto& c : chars_) g += c.genus();
        return g;
    }

    /// Tame Riemann-Hurwitz closed form, odd characteristic only:
    /// 2^{n-2} * (sum of deg P over ramified P of L - 4) + 1, read exactly
    /// as (S-4)/2 + 1 when n = 1.  Cross-checks genus(); inconsistency is an
    /// internal error.
    unsigned hurwitz_genus() const {
        if (spec_.artin_schreier())
            throw DomainError("Hurwitz closed form applies to odd characteristic only");
        std::vector<Place> ram;
        for (const auto& c : chars_)
            for (const auto& r : c.ramified()) ram.push_back(r.place);
        std::sort(ram.begin(), ram.end());
        ram.erase(std::unique(ram.begin(), ram.end()), ram.end());
        long long s = 0;
        for (const auto& P : ram) s += P.degree();
        unsigned n = generators();
        long long g;
        if (n == 1) {
            g = (s - 4) / 2 + 1;
        } else {
            g = (1LL << (n - 2)) * (s - 4) + 1;
        }
        if (g < 0 || static_cast<unsigned>(g) != genus())
            throw Error("internal inconsistency: Hurwitz genus " + std::to_string(g) +
                        " != subfield-sum genus " + std::to_string(genus()));
        return static_cast<unsigned>(g);
    }

    struct PlaceLogEntry {
        Place place;
        std::vector<SplitStatus> statuses;  // per character, mask order 1..2^n-1
        unsigned contribution;              // rational places of L above this place
        bool in_affine_count;               // finite and pole-free in every generator f_i
        std::uint64_t affine_fiber;         // predicted points of the affine model above it
    };

    struct CountResult {
        std::uint64_t N = 0;
        std::vector<PlaceLogEntry> log;
    };

    /// Exact number of rational places of L, with the per-place status log.
    /// A place with any inert character contributes 0; otherwise the split
    /// characters form the character group of G/inertia and the place
    /// contributes 1 + #split.
    CountResult count_rational_places() const {
        CountResult res;
        const auto places = rational_places(spec_.field);
        for (const auto& P : places) {
            PlaceLogEntry e{P, {}, 0, false, 0};
            bool any_inert = false;
            unsigned split = 0;
            for (const auto& c : chars_) {
                SplitStatus s = c.status_at(P);
                e.statuses.push_back(s);
                if (s == SplitStatus::inert) any_inert = true;
                if (s == SplitStatus::split) ++split;
            }
            e.contribution = any_inert ? 0 : 1 + split;

            if (!P.is_infinity()) {
                bool pole_free = true;
                for (const auto& fi : spec_.f)
                    if (valuation(fi, P) < 0) pole_free = false;
                if (pole_free) {
                    e.in_affine_count = true;
                    e.affine_fiber = predicted_fiber(P);
                }
            }
            res.N += e.contribution;
            res.log.push_back(std::move(e));
        }
        return res;
    }

    /// Sum of predicted affine fibers; must equal brute_force_affine_count.
    static std::uint64_t affine_total(const CountResult& r) {
        std::uint64_t t = 0;
        for (const auto& e : r.log)
            if (e.in_affine_count) t += e.affine_fiber;
        return t;
    }

private:
    /// Number of points of the affine model over a pole-free finite rational
    /// place, predicted from local data: each generator contributes a factor
    /// #\{b : b^2 = f_i(a)\} resp. #\{b : b^2 + b = f_i(a)\}.
    std::uint64_t predicted_fiber(const Place& P) const {
        std::uint64_t fiber = 1;
        for (unsigned i = 0; i < spec_.n(); ++i) {
            const auto& fi = spec_.f[i];
            if (spec_.artin_schreier()) {
                FieldElement v = evaluate_rational(fi, P);
                fiber *= (v.trace() == 0) ? 2 : 0;
            } else {
                int v = valuation(fi, P);
                if (v > 0) continue;  // f_i(a) = 0: the single solution b = 0
                FieldElement u = evaluate_rational(fi, P);
                fiber *= u.is_square() ? 2 : 0;
            }
            if (fiber == 0) return 0;
        }
        return fiber;
    }

    CompositumSpec spec_;
    std::vector<QuadraticCharacter> chars_;
};

/// Independent oracle: counts tuples (a, b_1..b_n) in F_q^{n+1} with every
/// f_i pole-free at a and b_i^2 = f_i(a) (odd) resp. b_i^2 + b_i = f_i(a)
/// (characteristic 2), by exhaustive enumeration.
inline std::uint64_t brute_force_affine_count(const CompositumSpec& spec) {
    const auto& F = spec.field;
    unsigned q = F->size(), n = spec.n();
    double size = 1;
    for (unsigned i = 0; i <= n; ++i) size *= q;
    if (size > 1e7) throw DomainError("affine enumeration too large (q^(n+1) > 1e7)");
    bool as = spec.artin_schreier();

    std::uint64_t count = 0;
    for (unsigned a = 0; a < q; ++a) {
        FieldElement pt = F->element(a);
        std::vector<unsigned> vals(n);
        bool pole = false;
        for (unsigned i = 0; i < n; ++i) {
            FieldElement dv = spec.f[i].den().eval(pt);
            if (dv.is_zero()) {
                pole = true;
                break;
            }
            vals[i] = (spec.f[i].num().eval(pt) / dv).value();
        }
        if (pole) continue;
        // enumerate all b-tuples
        std::vector<unsigned> b(n, 0);
        for (;;) {
            bool ok = true;
            for (unsigned i = 0; i < n && ok; ++i) {
                unsigned lhs = as ? F->add(F->mul(b[i], b[i]), b[i]) : F->mul(b[i], b[i]);
                ok = lhs == vals[i];
            }
            if (ok) ++count;
            unsigned j = 0;
            while (j < n && ++b[j] == q) {
                b[j] = 0;
                ++j;
            }
            if (j == n) break;
        }
    }
    return count;
}

}  // namespace quadext
