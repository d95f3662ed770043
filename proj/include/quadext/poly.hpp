#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quadext/gf.hpp"

namespace quadext {

/// Dense univariate polynomial over one GaloisField, coefficients stored
/// lowest degree first as packed values.  The zero polynomial has an empty
/// coefficient vector and degree() == -1 (standing in for degree -infinity).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(FieldPtr field, std::vector<unsigned> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial zero(FieldPtr field) { return Polynomial(std::move(field), {}); }
    static Polynomial one(FieldPtr field) { return Polynomial(std::move(field), {1}); }
    static Polynomial x(FieldPtr field) { return Polynomial(std::move(field), {0, 1}); }
    static Polynomial constant(const FieldElement& c) {
        return Polynomial(c.field(), {c.value()});
    }
    /// x - a
    static Polynomial linear_root(const FieldElement& a) {
        return Polynomial(a.field(), {a.field()->neg(a.value()), 1});
    }

    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    unsigned coeff_value(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    FieldElement coeff(std::size_t i) const { return field_->element(coeff_value(i)); }
    FieldElement leading() const {
        if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
        return field_->element(coeffs_.back());
    }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
    const std::vector<unsigned>& coeff_values() const { return coeffs_; }

    Polynomial operator+(const Polynomial& o) const {
        check(o);
        std::vector<unsigned> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = field_->add(coeff_value(i), o.coeff_value(i));
        return Polynomial(field_, std::move(c));
    }
    Polynomial operator-(const Polynomial& o) const {
        check(o);
        std::vector<unsigned> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = field_->sub(coeff_value(i), o.coeff_value(i));
        return Polynomial(field_, std::move(c));
    }
    Polynomial operator-() const {
        std::vector<unsigned> c(coeffs_);
        for (auto& v : c) v = field_->neg(v);
        return Polynomial(field_, std::move(c));
    }
    Polynomial operator*(const Polynomial& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return zero(field_);
        std::vector<unsigned> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                c[i + j] = field_->add(c[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
        }
        return Polynomial(field_, std::move(c));
    }
    Polynomial scaled(const FieldElement& s) const {
        std::vector<unsigned> c(coeffs_);
        for (auto& v : c) v = field_->mul(v, s.value());
        return Polynomial(field_, std::move(c));
    }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        check(d);
        if (d.is_zero()) throw DomainError("polynomial division by zero");
        if (degree() < d.degree()) return {zero(field_), *this};
        std::vector<unsigned> rem(coeffs_);
        std::vector<unsigned> quot(degree() - d.degree() + 1, 0);
        unsigned inv_lead = field_->inv(d.coeffs_.back());
        for (int k = degree() - d.degree(); k >= 0; --k) {
            unsigned c = field_->mul(rem[k + d.degree()], inv_lead);
            quot[k] = c;
            if (c == 0) continue;
            for (int i = 0; i <= d.degree(); ++i)
                rem[k + i] = field_->sub(rem[k + i], field_->mul(c, d.coeffs_[i]));
        }
        return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
    }
    Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
    bool divisible_by(const Polynomial& d) const { return divmod(d).second.is_zero(); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(leading().inverse());
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return zero(field_);
        std::vector<unsigned> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            c[i - 1] = field_->mul(coeffs_[i], field_->scalar(static_cast<long long>(i)).value());
        return Polynomial(field_, std::move(c));
    }

    FieldElement eval(const FieldElement& a) const {
        unsigned acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = field_->add(field_->mul(acc, a.value()), coeffs_[i]);
        return field_->element(acc);
    }

    Polynomial pow(unsigned k) const {
        Polynomial r = one(field_), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    /// Substitution f(u(x)), by Horner.
    Polynomial compose(const Polynomial& u) const {
        Polynomial acc = zero(field_);
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * u + constant(field_->element(coeffs_[i]));
        return acc;
    }

    bool operator==(const Polynomial& o) const {
        return field_->same_field(*o.field_) && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Canonical order: by degree, then coefficient values from the constant
    /// term up.  Used for place ordering and deterministic reports.
    bool operator<(const Polynomial& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        return coeffs_ < o.coeffs_;
    }

    /// Terms in decreasing degree, coefficients rendered per the field
    /// (digits for the prime subfield, powers of w otherwise).
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            unsigned c = coeffs_[i];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            std::string cs = field_->element_str(c);
            if (i == 0) {
                os << cs;
            } else {
                if (c != 1) os << cs << "*";
                os << "x";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    void check(const Polynomial& o) const {
        if (!field_->same_field(*o.field_)) throw DomainError("polynomials over different fields");
    }
    FieldPtr field_;
    std::vector<unsigned> coeffs_;
};

/// Monic greatest common divisor; gcd(f, 0) = monic(f).
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Polynomial powmod(const Polynomial& base, std::uint64_t k, const Polynomial& mod) {
    Polynomial r = Polynomial::one(base.field()) % mod;
    Polynomial b = base % mod;
    while (k) {
        if (k & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        k >>= 1;
    }
    return r;
}

namespace detail {

/// p-th root of a polynomial whose derivative vanishes (only x^{pk} terms).
inline Polynomial pth_root(const Polynomial& f) {
    const auto& F = f.field();
    unsigned p = F->characteristic(), q = F->size();
    std::vector<unsigned> c(f.degree() / p + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F->pow(f.coeff_value(i * p), q / p);  // (a^{q/p})^p = a
    return Polynomial(F, std::move(c));
}

}  // namespace detail

/// Product of the distinct monic irreducible factors of f.
inline Polynomial squarefree_part(const Polynomial& f_in) {
    if (f_in.is_zero()) throw DomainError("square-free part of zero");
    Polynomial f = f_in.monic();
    if (f.degree() == 0) return Polynomial::one(f.field());
    Polynomial fp = f.derivative();
    if (fp.is_zero()) return squarefree_part(detail::pth_root(f));
    Polynomial d = poly_gcd(f, fp);
    if (d.degree() == 0) return f;
    // f / d carries every factor whose multiplicity is not divisible by p,
    // exactly once; factors with p | multiplicity survive in d at full power.
    Polynomial w = f / d;
    Polynomial rest = d;
    for (;;) {
        Polynomial g = poly_gcd(rest, w);
        if (g.degree() == 0) break;
        rest = rest / g;
    }
    if (rest.degree() == 0) return w;
    return w * squarefree_part(rest);
}

namespace detail {

inline Polynomial random_poly_below(const FieldPtr& F, int deg_bound, std::mt19937_64& rng) {
    std::vector<unsigned> c(static_cast<std::size_t>(deg_bound));
    for (auto& v : c) v = static_cast<unsigned>(rng() % F->size());
    return Polynomial(F, std::move(c));
}

/// Equal-degree splitting of a monic square-free product of irreducibles of
/// degree d.  Cantor-Zassenhaus via the norm map in odd characteristic and
/// the absolute-trace map in characteristic 2.
inline void equal_degree_split(const Polynomial& f, unsigned d, std::vector<Polynomial>& out,
                               std::mt19937_64& rng) {
    const auto& F = f.field();
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f);
        return;
    }
    unsigned q = F->size();
    for (;;) {
        Polynomial a = random_poly_below(F, f.degree(), rng);
        if (a.degree() < 1) continue;
        Polynomial t = Polynomial::zero(F);
        if (F->characteristic() == 2) {
            // absolute trace from F_{2^{e d}} down to F_2, applied mod f
            unsigned steps = F->degree() * d;
            Polynomial s = a % f;
            t = s;
            for (unsigned i = 1; i < steps; ++i) {
                s = (s * s) % f;
                t = t + s;
            }
        } else {
            // norm to F_q, then the quadratic-residue exponent
            Polynomial nrm = a % f;
            Polynomial frob = nrm;
            for (unsigned i = 1; i < d; ++i) {
                frob = powmod(frob, q, f);
                nrm = (nrm * frob) % f;
            }
            t = powmod(nrm, (q - 1) / 2, f) - Polynomial::one(F);
        }
        if (t.is_zero()) continue;
        Polynomial g = poly_gcd(t, f);
        if (g.degree() == 0 || g.degree() == f.degree()) continue;
        equal_degree_split(g, d, out, rng);
        equal_degree_split(f / g, d, out, rng);
        return;
    }
}

}  // namespace detail

constexpr std::uint64_t kDefaultFactorSeed = 0x5eed5eed5eedULL;

/// Full factorization into monic irreducibles with multiplicities, sorted
/// canonically.  Distinct-degree then equal-degree splitting; the splitting
/// randomness is seeded so runs are reproducible.
inline std::vector<std::pair<Polynomial, unsigned>> factor(
    const Polynomial& f_in, std::uint64_t seed = kDefaultFactorSeed) {
    if (f_in.is_zero()) throw DomainError("factorization of zero");
    const auto& F = f_in.field();
    std::vector<std::pair<Polynomial, unsigned>> result;
    if (f_in.degree() == 0) return result;

    std::mt19937_64 rng(seed);
    Polynomial s = squarefree_part(f_in);
    std::vector<Polynomial> irreducibles;

    Polynomial r = s;
    Polynomial h = powmod(Polynomial::x(F), F->size(), r);
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(r.degree()); ++d) {
        Polynomial g = poly_gcd(h - Polynomial::x(F), r);
        if (g.degree() > 0) {
            detail::equal_degree_split(g, d, irreducibles, rng);
            r = r / g;
            if (r.degree() == 0) break;
            h = h % r;
        }
        if (2 * (d + 1) <= static_cast<unsigned>(r.degree())) h = powmod(h, F->size(), r);
    }
    if (r.degree() > 0) irreducibles.push_back(r);

    Polynomial rem = f_in.monic();
    for (const auto& pi : irreducibles) {
        unsigned mult = 0;
        for (;;) {
            auto [quo, res] = rem.divmod(pi);
            if (!res.is_zero()) break;
            rem = quo;
            ++mult;
        }
        result.emplace_back(pi, mult);
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

inline bool is_irreducible(const Polynomial& f, std::uint64_t seed = kDefaultFactorSeed) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    auto fs = factor(f, seed);
    return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace quadext
