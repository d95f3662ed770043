#pragma once

#include <string>
#include <vector>

#include "quadext/algebra.hpp"
#include "quadext/compositum.hpp"

namespace quadext {

namespace detail {

/// The 2^n conjugates of the primitive element y: all sign patterns of
/// sum y_i in odd characteristic, all products of (y_i + eps_i) in
/// characteristic 2.
template <typename Ring>
std::vector<AlgebraElement<Ring>> conjugates(const AlgebraContext<Ring>& ctx) {
    using Elem = AlgebraElement<Ring>;
    unsigned n = ctx.n();
    std::vector<Elem> out;
    out.reserve(1u << n);
    for (unsigned eps = 0; eps < (1u << n); ++eps) {
        if (!ctx.artin_schreier) {
            Elem e = Elem::zero();
            for (unsigned i = 0; i < n; ++i) {
                Elem yi = Elem::generator(i, ctx.one);
                e = (eps & (1u << i)) ? e - yi : e + yi;
            }
            out.push_back(std::move(e));
        } else {
            Elem e = Elem::scalar(ctx.one);
            for (unsigned i = 0; i < n; ++i) {
                Elem fac = Elem::generator(i, ctx.one);
                if (eps & (1u << i)) fac = fac + Elem::scalar(ctx.one);
                e = e.mul(fac, ctx);
            }
            out.push_back(std::move(e));
        }
    }
    return out;
}

/// Expand prod_sigma (Y - sigma(y)).  Every coefficient must collapse to a
/// scalar of the base ring; a surviving generator monomial is an internal
/// inconsistency.
template <typename Ring>
std::vector<Ring> expand_minimal_polynomial(const AlgebraContext<Ring>& ctx, const Ring& zero) {
    using Elem = AlgebraElement<Ring>;
    auto sigmas = conjugates(ctx);
    std::vector<Elem> pc{Elem::scalar(ctx.one)};  // coefficients in Y, ascending
    for (const auto& s : sigmas) {
        std::vector<Elem> next(pc.size() + 1, Elem::zero());
        for (std::size_t k = 0; k < pc.size(); ++k) {
            next[k + 1] = next[k + 1] + pc[k];
            next[k] = next[k] - s.mul(pc[k], ctx);
        }
        pc = std::move(next);
    }
    std::vector<Ring> out;
    out.reserve(pc.size());
    for (std::size_t k = 0; k < pc.size(); ++k) {
        const auto& e = pc[k];
        if (e.is_zero()) {
            out.push_back(zero);
            continue;
        }
        const Ring* s = e.as_scalar();
        if (!s)
            throw ResidualMonomial("coefficient of Y^" + std::to_string(k) +
                                   " kept a generator monomial: " + e.str());
        out.push_back(*s);
    }
    return out;
}

template <typename Ring>
bool check_membership(const AlgebraContext<Ring>& ctx, const std::vector<Ring>& coeffs) {
    using Elem = AlgebraElement<Ring>;
    Elem y;
    if (!ctx.artin_schreier) {
        y = Elem::zero();
        for (unsigned i = 0; i < ctx.n(); ++i) y = y + Elem::generator(i, ctx.one);
    } else {
        y = Elem::scalar(ctx.one);
        for (unsigned i = 0; i < ctx.n(); ++i) y = y.mul(Elem::generator(i, ctx.one), ctx);
    }
    Elem acc = Elem::zero();
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        acc = acc.mul(y, ctx);
        if (!coeffs[k].is_zero()) acc = acc + Elem::scalar(coeffs[k]);
    }
    return acc.is_zero();
}

}  // namespace detail

/// Monic defining polynomial P(Y) of degree 2^n for the primitive element
/// of the compositum, with coefficients in F_q(x).
struct DefiningEquation {
    FieldPtr field;
    unsigned n = 0;
    std::vector<RationalFunction> coeffs;  // ascending in Y, size 2^n + 1

    unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }

    std::string str() const {
        std::string s;
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            const auto& c = coeffs[k];
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            std::string cs = format_canonical(c);
            if (k == 0) {
                s += cs;
            } else {
                std::string ypow = k == 1 ? "Y" : "Y^" + std::to_string(k);
                if (c == RationalFunction::one(field)) {
                    s += ypow;
                } else {
                    bool wrap = cs.find(' ') != std::string::npos ||
                                cs.find('/') != std::string::npos;
                    s += (wrap ? "(" + cs + ")" : cs) + "*" + ypow;
                }
            }
        }
        return s.empty() ? "0" : s;
    }

    /// Numerator-cleared bivariate form: D(x) * P(Y, x) with polynomial
    /// coefficients, D the least common denominator.
    struct ClearedForm {
        Polynomial denominator;
        std::vector<Polynomial> coeffs;  // ascending in Y
    };
    ClearedForm cleared() const {
        Polynomial d = Polynomial::one(field);
        for (const auto& c : coeffs)
            d = (d * c.den()) / poly_gcd(d, c.den());
        ClearedForm out{d, {}};
        for (const auto& c : coeffs) out.coeffs.push_back(c.num() * (d / c.den()));
        return out;
    }
};

inline AlgebraContext<RationalFunction> make_algebra_context(const CompositumSpec& spec) {
    return {spec.f, spec.artin_schreier(), RationalFunction::one(spec.field)};
}

/// The 2^n conjugates of y as elements of the y-algebra.
inline std::vector<AlgebraElement<RationalFunction>> primitive_conjugates(
    const CompositumSpec& spec) {
    auto ctx = make_algebra_context(spec);
    return detail::conjugates(ctx);
}

inline DefiningEquation minimal_polynomial(const CompositumSpec& spec) {
    if (spec.n() == 0 || spec.n() > kMaxGenerators)
        throw DomainError("minimal polynomial needs 1..4 generators");
    auto ctx = make_algebra_context(spec);
    DefiningEquation eq;
    eq.field = spec.field;
    eq.n = spec.n();
    eq.coeffs = detail::expand_minimal_polynomial(ctx, RationalFunction::zero(spec.field));
    return eq;
}

/// Substitutes the primitive element back into P and reduces; true iff the
/// result is identically zero.
inline bool verify_membership(const DefiningEquation& eq, const CompositumSpec& spec) {
    auto ctx = make_algebra_context(spec);
    return detail::check_membership(ctx, eq.coeffs);
}

/// Generic expansion with indeterminate f_i: integer coefficients in odd
/// characteristic, coefficients mod 2 in even characteristic.  Coefficient
/// k of the result is the universal polynomial in f_1..f_n multiplying Y^k.
inline std::vector<GenericPoly> generic_minimal_polynomial(unsigned n, bool artin_schreier) {
    if (n == 0 || n > 4) throw DomainError("generic expansion needs 1..4 generators");
    int mod = artin_schreier ? 2 : 0;
    AlgebraContext<GenericPoly> ctx;
    ctx.artin_schreier = artin_schreier;
    ctx.one = GenericPoly(1, mod);
    for (unsigned i = 0; i < n; ++i) ctx.f.push_back(GenericPoly::variable(i, mod));
    return detail::expand_minimal_polynomial(ctx, GenericPoly(0, mod));
}

/// Generic membership self-check for the universal expansion.
inline bool generic_membership(unsigned n, bool artin_schreier) {
    int mod = artin_schreier ? 2 : 0;
    AlgebraContext<GenericPoly> ctx;
    ctx.artin_schreier = artin_schreier;
    ctx.one = GenericPoly(1, mod);
    for (unsigned i = 0; i < n; ++i) ctx.f.push_back(GenericPoly::variable(i, mod));
    auto coeffs = detail::expand_minimal_polynomial(ctx, GenericPoly(0, mod));
    return detail::check_membership(ctx, coeffs);
}

}  // namespace quadext
