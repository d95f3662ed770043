#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadext/ratfun.hpp"

namespace quadext {

/// A closed point of the projective line over F_q: either a monic irreducible
/// polynomial or the place at infinity.  Canonical order puts finite places
/// first, sorted by (degree, coefficient order), with infinity last.
class Place {
public:
    static Place infinity(FieldPtr field) { return Place(std::move(field)); }
    static Place finite(Polynomial pi) {
        if (!pi.is_monic() || pi.degree() < 1)
            throw DomainError("finite place requires a monic polynomial of degree >= 1");
        return Place(std::move(pi));
    }
    /// The place x - a.
    static Place at(const FieldElement& a) { return finite(Polynomial::linear_root(a)); }

    bool is_infinity() const { return !pi_.has_value(); }
    const Polynomial& poly() const {
        if (is_infinity()) throw DomainError("infinite place has no polynomial");
        return *pi_;
    }
    const FieldPtr& field() const { return field_; }
    unsigned degree() const { return is_infinity() ? 1u : static_cast<unsigned>(pi_->degree()); }

    /// For a rational finite place x - a, the point a.
    FieldElement root() const {
        if (is_infinity() || degree() != 1) throw DomainError("root() needs a finite rational place");
        return field_->element(field_->neg(pi_->coeff_value(0)));
    }

    bool operator==(const Place& o) const {
        if (is_infinity() != o.is_infinity()) return false;
        return is_infinity() || *pi_ == *o.pi_;
    }
    bool operator!=(const Place& o) const { return !(*this == o); }
    bool operator<(const Place& o) const {
        if (is_infinity()) return false;
        if (o.is_infinity()) return true;
        return *pi_ < *o.pi_;
    }

    std::string str() const { return is_infinity() ? "infinity" : pi_->str(); }

private:
    explicit Place(FieldPtr field) : field_(std::move(field)) {}
    explicit Place(Polynomial pi) : field_(pi.field()), pi_(std::move(pi)) {}
    FieldPtr field_;
    std::optional<Polynomial> pi_;
};

/// The q + 1 degree-one places of F_q(x), in canonical order.
inline std::vector<Place> rational_places(const FieldPtr& field) {
    std::vector<Place> out;
    for (unsigned a = 0; a < field->size(); ++a) out.push_back(Place::at(field->element(a)));
    std::sort(out.begin(), out.end());
    out.push_back(Place::infinity(field));
    return out;
}

namespace detail {

inline int multiplicity(const Polynomial& f, const Polynomial& pi) {
    if (f.is_zero()) throw DomainError("multiplicity in zero polynomial");
    int m = 0;
    Polynomial r = f;
    for (;;) {
        auto [quo, rem] = r.divmod(pi);
        if (!rem.is_zero()) return m;
        r = quo;
        ++m;
    }
}

}  // namespace detail

/// v_P(f) for nonzero f.
inline int valuation(const RationalFunction& f, const Place& P) {
    if (f.is_zero()) throw DomainError("valuation of the zero function");
    if (P.is_infinity()) return f.den().degree() - f.num().degree();
    return detail::multiplicity(f.num(), P.poly()) - detail::multiplicity(f.den(), P.poly());
}

/// Value of f at a rational place (degree 1, finite or infinite);
/// requires v_P(f) >= 0.
inline FieldElement evaluate_rational(const RationalFunction& f, const Place& P) {
    const auto& F = f.field();
    if (f.is_zero()) return F->zero();
    if (P.is_infinity()) {
        int v = f.den().degree() - f.num().degree();
        if (v > 0) return F->zero();
        if (v < 0) throw DomainError("pole at infinity");
        return f.num().leading() / f.den().leading();
    }
    if (P.degree() != 1) throw DomainError("evaluate_rational needs a rational place");
    FieldElement a = P.root();
    FieldElement dv = f.den().eval(a);
    if (dv.is_zero()) throw DomainError("pole at " + P.str());
    return f.num().eval(a) / dv;
}

/// Canonical representative (degree < deg pi) of f in F_q[x]/(pi);
/// requires v_pi(f) >= 0.
inline Polynomial residue_rep(const RationalFunction& f, const Polynomial& pi) {
    if (f.is_zero()) return Polynomial::zero(f.field());
    Polynomial dn = f.den() % pi;
    if (dn.is_zero()) {
        if ((f.num() % pi).is_zero())
            throw DomainError("rational function not in reduced form");
        throw DomainError("pole at finite place");
    }
    // invert dn modulo pi by extended Euclid
    Polynomial r0 = pi, r1 = dn;
    Polynomial s0 = Polynomial::zero(f.field()), s1 = Polynomial::one(f.field());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        Polynomial s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 = gcd (a nonzero constant since pi is irreducible and dn != 0)
    if (r0.degree() != 0) throw DomainError("residue inversion failed: place not irreducible?");
    Polynomial inv = s0.scaled(r0.leading().inverse());
    return (f.num() * inv) % pi;
}

}  // namespace quadext
