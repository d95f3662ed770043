#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "quadext/expr.hpp"
#include "quadext/residue.hpp"

namespace quadext {

enum class SplitStatus { split, inert, ramified };

inline const char* to_string(SplitStatus s) {
    switch (s) {
        case SplitStatus::split: return "split";
        case SplitStatus::inert: return "inert";
        default: return "ramified";
    }
}

struct RamifiedPlace {
    Place place;
    /// Odd pole order m_P of the reduced representative in characteristic 2;
    /// always 1 in odd characteristic (tame, the local datum is trivial).
    unsigned local_order;
};

/// One quadratic extension of F_q(x): y^2 = f in odd characteristic (Kummer),
/// y^2 + y = f in characteristic 2 (Artin-Schreier).  Construction rejects
/// degenerate data (trivial or constant-field extensions) and records the
/// ramified places with their local data and the genus.
class QuadraticCharacter {
public:
    static QuadraticCharacter analyze(const RationalFunction& f,
                                      std::uint64_t seed = kDefaultFactorSeed) {
        if (f.is_zero()) throw DegenerateExtension(DegenerateKind::trivial_extension,
                                                   "defining function is zero");
        QuadraticCharacter c;
        c.f_ = f;
        c.artin_schreier_ = f.field()->characteristic() == 2;
        if (c.artin_schreier_)
            c.analyze_artin_schreier(seed);
        else
            c.analyze_kummer(seed);
        return c;
    }

    bool artin_schreier() const { return artin_schreier_; }
    const RationalFunction& defining() const { return f_; }
    /// Same extension, every pole of odd order (characteristic 2 only;
    /// in odd characteristic this is the defining function itself).
    const RationalFunction& reduced() const { return reduced_; }
    const std::vector<RamifiedPlace>& ramified() const { return ramified_; }
    unsigned genus() const { return genus_; }

    SplitStatus status_at(const Place& P) const {
        if (P.degree() != 1) throw DomainError("status_at needs a rational place");
        if (artin_schreier_) {
            int v = valuation(reduced_, P);
            if (v < 0) return SplitStatus::ramified;
            FieldElement u = evaluate_rational(reduced_, P);
            return u.trace() == 0 ? SplitStatus::split : SplitStatus::inert;
        }
        int v = valuation(f_, P);
        if (v % 2 != 0) return SplitStatus::ramified;
        RationalFunction unit =
            P.is_infinity()
                ? f_ * RationalFunction(Polynomial::x(f_.field())).pow(v)
                : f_ * RationalFunction(P.poly()).pow(-v);
        FieldElement u = evaluate_rational(unit, P);
        return u.is_square() ? SplitStatus::split : SplitStatus::inert;
    }

    std::string describe() const {
        std::ostringstream os;
        os << (artin_schreier_ ? "y^2 + y = " : "y^2 = ") << format_canonical(f_)
           << "; ramified:";
        if (ramified_.empty()) os << " (none)";
        for (const auto& r : ramified_) {
            os << " [" << r.place.str() << " deg " << r.place.degree();
            if (artin_schreier_) os << " m " << r.local_order;
            os << "]";
        }
        os << "; genus " << genus_;
        return os.str();
    }

private:
    QuadraticCharacter() = default;

    void analyze_kummer(std::uint64_t seed) {
        const auto& F = f_.field();
        for (const auto& [pi, mult] : factor(f_.num() * f_.den(), seed)) {
            // parity of the multiplicity in num*den equals the parity of v_pi
            if (mult % 2 == 1) ramified_.push_back({Place::finite(pi), 1});
        }
        if ((f_.num().degree() + f_.den().degree()) % 2 == 1)
            ramified_.push_back({Place::infinity(F), 1});
        std::sort(ramified_.begin(), ramified_.end(),
                  [](const RamifiedPlace& a, const RamifiedPlace& b) { return a.place < b.place; });
        if (ramified_.empty()) {
            // f = c * (square); the square class of the leading constant decides
            FieldElement c = f_.num().leading();
            if (c.is_square())
                throw DegenerateExtension(DegenerateKind::trivial_extension,
                                          "y^2 = " + format_canonical(f_) +
                                              " defines a trivial extension (f is a square)");
            throw DegenerateExtension(DegenerateKind::constant_field_extension,
                                      "y^2 = " + format_canonical(f_) +
                                          " is a constant-field extension");
        }
        unsigned total = 0;
        for (const auto& r : ramified_) total += r.place.degree();
        if (total % 2 != 0) throw Error("odd ramification degree sum; this cannot happen");
        genus_ = total / 2 - 1;
        reduced_ = f_;
    }

    void analyze_artin_schreier(std::uint64_t seed) {
        const auto& F = f_.field();
        RationalFunction g = f_;

        // Remove even-order finite poles, one pole at a time.  Subtracting
        // h^2 + h with h = sqrt(lead)/pi^k strictly decreases the pole order
        // at pi and touches no other place.
        for (const auto& [pi, mult] : factor(g.den(), seed)) {
            (void)mult;
            ResidueField R(pi);
            for (;;) {
                if (g.is_zero()) break;
                int m = -valuation(g, Place::finite(pi));
                if (m <= 0 || m % 2 == 1) break;
                RationalFunction shifted = g * RationalFunction(pi).pow(m);
                Polynomial lead = residue_rep(shifted, pi);
                Polynomial s = R.sqrt(lead);
                RationalFunction h(s, pi.pow(static_cast<unsigned>(m / 2)));
                g = g - h * h - h;
            }
        }
        // Remove the even-degree part of the expansion at infinity.
        for (;;) {
            int d = g.num().degree() - g.den().degree();
            if (d <= 0 || d % 2 == 1) break;
            FieldElement c = g.num().leading() / g.den().leading();
            std::vector<unsigned> mono(static_cast<std::size_t>(d / 2) + 1, 0);
            mono.back() = c.sqrt().value();
            RationalFunction h(Polynomial(F, std::move(mono)));
            g = g - h * h - h;
        }

        reduced_ = g;
        for (const auto& [pi, mult] : factor(g.den(), seed)) {
            if (mult % 2 == 0) throw Error("even pole order survived reduction");
            ramified_.push_back({Place::finite(pi), mult});
        }
        int dinf = g.num().degree() - g.den().degree();
        if (dinf > 0) {
            if (dinf % 2 == 0) throw Error("even infinite pole order survived reduction");
            ramified_.push_back({Place::infinity(F), static_cast<unsigned>(dinf)});
        }
        std::sort(ramified_.begin(), ramified_.end(),
                  [](const RamifiedPlace& a, const RamifiedPlace& b) { return a.place < b.place; });

        if (ramified_.empty()) {
            // pole-free representative is a constant; its absolute trace decides
            FieldElement c = g.is_zero() ? F->zero() : g.num().leading();
            if (c.trace() == 0)
                throw DegenerateExtension(DegenerateKind::trivial_extension,
                                          "y^2 + y = " + format_canonical(f_) +
                                              " defines a trivial extension");
            throw DegenerateExtension(DegenerateKind::constant_field_extension,
                                      "y^2 + y = " + format_canonical(f_) +
                                          " is a constant-field extension");
        }
        unsigned acc = 0;
        for (const auto& r : ramified_) acc += (r.local_order + 1) * r.place.degree();
        genus_ = acc / 2 - 1;
    }

    RationalFunction f_, reduced_;
    bool artin_schreier_ = false;
    std::vector<RamifiedPlace> ramified_;
    unsigned genus_ = 0;
};

}  // namespace quadext
