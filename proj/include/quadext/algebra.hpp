#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "quadext/errors.hpp"

namespace quadext {

/// Context for the 2^n-dimensional algebra k[y_1..y_n] with the reduction
/// rules y_i^2 = f_i (odd characteristic) or y_i^2 = y_i + f_i
/// (characteristic 2).  Ring is any commutative coefficient ring with
/// +, -, *, unary -, ==, and is_zero().
template <typename Ring>
struct AlgebraContext {
    std::vector<Ring> f;
    bool artin_schreier;
    Ring one;

    unsigned n() const { return static_cast<unsigned>(f.size()); }
};

/// Element of the algebra: a map from square-free monomial masks in the y_i
/// (bit i-1 <-> y_i) to Ring coefficients; zero coefficients are dropped.
template <typename Ring>
class AlgebraElement {
public:
    using Context = AlgebraContext<Ring>;

    AlgebraElement() = default;

    static AlgebraElement zero() { return {}; }
    static AlgebraElement scalar(const Ring& c) {
        AlgebraElement e;
        e.set(0, c);
        return e;
    }
    static AlgebraElement generator(unsigned i, const Ring& one) {
        AlgebraElement e;
        e.set(1u << i, one);
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<unsigned, Ring>& terms() const { return terms_; }

    /// Coefficient of the empty monomial if the element is a scalar.
    const Ring* as_scalar() const {
        if (terms_.empty()) return nullptr;  // zero: caller handles
        if (terms_.size() != 1 || terms_.begin()->first != 0) return nullptr;
        return &terms_.begin()->second;
    }

    AlgebraElement operator+(const AlgebraElement& o) const {
        AlgebraElement r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    AlgebraElement operator-(const AlgebraElement& o) const {
        AlgebraElement r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    AlgebraElement operator-() const {
        AlgebraElement r;
        for (const auto& [m, c] : terms_) r.set(m, -c);
        return r;
    }

    AlgebraElement mul(const AlgebraElement& o, const Context& ctx) const {
        AlgebraElement out;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                AlgebraElement part = mul_monomials(ma, ca, mb, cb, ctx);
                for (const auto& [m, c] : part.terms_) out.add_term(m, c);
            }
        return out;
    }

    AlgebraElement scaled(const Ring& s) const {
        AlgebraElement r;
        for (const auto& [m, c] : terms_) {
            Ring v = c * s;
            if (!v.is_zero()) r.set(m, v);
        }
        return r;
    }

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

    std::string str(const std::string& sym = "y") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "[" << c.str() << "]";
            for (unsigned i = 0; i < 8; ++i)
                if (m & (1u << i)) os << "*" << sym << (i + 1);
        }
        return os.str();
    }

private:
    void set(unsigned mask, Ring c) { terms_.emplace(mask, std::move(c)); }
    void add_term(unsigned mask, const Ring& c) {
        auto it = terms_.find(mask);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(mask, c);
            return;
        }
        Ring v = it->second + c;
        if (v.is_zero())
            terms_.erase(it);
        else
            it->second = std::move(v);
    }

    /// Product of two square-free monomials with eager reduction of each
    /// repeated generator: y_i^2 -> f_i, or y_i^2 -> y_i + f_i.
    static AlgebraElement mul_monomials(unsigned ma, const Ring& ca, unsigned mb, const Ring& cb,
                                        const Context& ctx) {
        AlgebraElement acc;
        acc.set(ma ^ mb, ca * cb);
        unsigned common = ma & mb;
        for (unsigned i = 0; i < ctx.n(); ++i) {
            if (!(common & (1u << i))) continue;
            if (!ctx.artin_schreier) {
                acc = acc.scaled(ctx.f[i]);
            } else {
                // multiply by (f_i + y_i); y_i is fresh for every term of acc
                AlgebraElement next;
                for (const auto& [m, c] : acc.terms_) {
                    next.add_term(m, c * ctx.f[i]);
                    next.add_term(m | (1u << i), c);
                }
                acc = std::move(next);
            }
        }
        return acc;
    }

    std::map<unsigned, Ring> terms_;
};

/// Multivariate polynomial with integer coefficients in the indeterminates
/// f_1..f_4 (exponent vector per monomial).  Supports an optional
/// coefficient modulus so characteristic-2 identities can be compared
/// exactly.  Used for generic closed-form expansions.
class GenericPoly {
public:
    using Monomial = std::array<int, 4>;

    GenericPoly() = default;
    explicit GenericPoly(long long c, int mod = 0) : mod_(mod) {
        if (normalize(c) != 0) terms_[{0, 0, 0, 0}] = normalize(c);
    }
    static GenericPoly variable(unsigned i, int mod = 0) {
        GenericPoly p;
        p.mod_ = mod;
        Monomial m{0, 0, 0, 0};
        m[i] = 1;
        p.terms_[m] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, long long>& terms() const { return terms_; }
    int modulus() const { return mod_; }

    GenericPoly operator+(const GenericPoly& o) const {
        GenericPoly r = *this;
        r.mod_ = std::max(mod_, o.mod_);
        for (const auto& [m, c] : o.terms_) r.add(m, c);
        return r;
    }
    GenericPoly operator-(const GenericPoly& o) const {
        GenericPoly r = *this;
        r.mod_ = std::max(mod_, o.mod_);
        for (const auto& [m, c] : o.terms_) r.add(m, -c);
        return r;
    }
    GenericPoly operator-() const {
        GenericPoly r;
        r.mod_ = mod_;
        for (const auto& [m, c] : terms_) r.terms_[m] = r.normalize(-c);
        return r;
    }
    GenericPoly operator*(const GenericPoly& o) const {
        GenericPoly r;
        r.mod_ = std::max(mod_, o.mod_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m;
                for (int i = 0; i < 4; ++i) m[i] = ma[i] + mb[i];
                r.add(m, ca * cb);
            }
        return r;
    }

    bool operator==(const GenericPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const GenericPoly& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << (c >= 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            long long a = c < 0 ? -c : c;
            bool has_var = m[0] || m[1] || m[2] || m[3];
            if (a != 1 || !has_var) os << a;
            bool star = a != 1 || !has_var;
            for (int i = 0; i < 4; ++i) {
                if (!m[i]) continue;
                if (star) os << "*";
                star = true;
                os << "f" << (i + 1);
                if (m[i] > 1) os << "^" << m[i];
            }
        }
        return os.str();
    }

private:
    long long normalize(long long c) const {
        if (mod_ == 0) return c;
        long long r = c % mod_;
        return r < 0 ? r + mod_ : r;
    }
    void add(const Monomial& m, long long c) {
        auto it = terms_.find(m);
        long long v = normalize((it == terms_.end() ? 0 : it->second) + c);
        if (v == 0) {
            if (it != terms_.end()) terms_.erase(it);
        } else if (it == terms_.end()) {
            terms_[m] = v;
        } else {
            it->second = v;
        }
    }
    std::map<Monomial, long long> terms_;
    int mod_ = 0;
};

}  // namespace quadext
