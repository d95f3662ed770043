#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quadext/errors.hpp"

namespace quadext {

namespace detail {

// Arithmetic on small F_p coefficient vectors (ascending degree, p prime).
// Used only while constructing a field; element arithmetic afterwards goes
// through lookup tables.

inline void ptrim(std::vector<unsigned>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<unsigned> pmul(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                                  unsigned p) {
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    ptrim(c);
    return c;
}

// Remainder of a modulo monic m.
inline std::vector<unsigned> pmod(std::vector<unsigned> a, const std::vector<unsigned>& m,
                                  unsigned p) {
    ptrim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        unsigned lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            unsigned sub = (lead * m[i]) % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

inline bool pirreducible(const std::vector<unsigned>& m, unsigned p) {
    const std::size_t deg = m.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<unsigned> div(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            div[d] = 1;
            if (pmod(m, div, p).empty()) return false;
        }
    }
    return true;
}

inline std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> fs;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace detail

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;
class FieldElement;

/// Description of F_{p^e} together with full arithmetic tables.
///
/// Elements are referred to by their packed value sum(c_i * p^i) where
/// (c_0..c_{e-1}) is the coefficient vector of the residue class modulo
/// the modulus polynomial.  Equality and ordering of elements are the
/// natural order of packed values, i.e. of coefficient vectors.
class GaloisField : public std::enable_shared_from_this<GaloisField> {
public:
    /// Create F_{p^e}.  If no modulus is given, the lexicographically least
    /// monic irreducible whose root class generates the multiplicative group
    /// is chosen (non-leading coefficients enumerated as ascending base-p
    /// integers).  If a supplied modulus has a non-primitive root, the field
    /// is still built but `generator_is_root()` is false and the generator is
    /// the least primitive element.
    static FieldPtr make(unsigned p, unsigned e,
                         std::optional<std::vector<unsigned>> modulus = std::nullopt) {
        auto f = std::shared_ptr<GaloisField>(new GaloisField(p, e, std::move(modulus)));
        return f;
    }

    /// Convenience: field of size q = 2^k or 3^k.
    static FieldPtr of_size(unsigned q) {
        for (unsigned p : {2u, 3u}) {
            unsigned e = 0, n = q;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            if (n == 1 && e >= 1) return make(p, e);
        }
        throw DomainError("unsupported field size " + std::to_string(q) +
                          " (must be a power of 2 or 3)");
    }

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return e_; }
    unsigned size() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }
    unsigned generator_value() const { return gen_; }
    bool generator_is_root() const { return gen_is_root_; }

    // --- element arithmetic on packed values -------------------------------

    unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
    unsigned neg(unsigned a) const { return neg_[a]; }
    unsigned sub(unsigned a, unsigned b) const { return add_[a * q_ + neg_[b]]; }

    unsigned mul(unsigned a, unsigned b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    unsigned inv(unsigned a) const {
        if (a == 0) throw DomainError("division by zero in GF(" + std::to_string(q_) + ")");
        return exp_[(q_ - 1) - log_[a]];
    }
    unsigned div(unsigned a, unsigned b) const { return mul(a, inv(b)); }

    unsigned pow(unsigned a, std::uint64_t k) const {
        if (a == 0) return k == 0 ? 1u : 0u;
        std::uint64_t r = (static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1);
        return exp_[r];
    }

    /// Absolute trace to F_p, returned as a value < p.
    unsigned trace(unsigned a) const { return trace_[a]; }

    /// Discrete log base the generator; -1 for zero.
    int dlog(unsigned a) const { return a == 0 ? -1 : static_cast<int>(log_[a]); }

    /// Quadratic-residue test.  In characteristic 2 every element is a square.
    bool is_square(unsigned a) const {
        if (p_ == 2 || a == 0) return true;
        return log_[a] % 2 == 0;
    }

    unsigned sqrt(unsigned a) const {
        if (a == 0) return 0;
        if (p_ == 2) return pow(a, q_ / 2);  // inverse Frobenius
        if (log_[a] % 2 != 0)
            throw DomainError("sqrt of non-square in GF(" + std::to_string(q_) + ")");
        return exp_[log_[a] / 2];
    }

    unsigned multiplicative_order(unsigned a) const {
        if (a == 0) throw DomainError("order of zero");
        unsigned g = std::gcd<unsigned>(log_[a] == 0 ? q_ - 1 : log_[a], q_ - 1);
        return (q_ - 1) / g;
    }

    /// All elements of multiplicative order q-1, ascending by packed value.
    std::vector<unsigned> primitive_element_values() const {
        std::vector<unsigned> out;
        for (unsigned v = 1; v < q_; ++v)
            if (multiplicative_order(v) == q_ - 1) out.push_back(v);
        return out;
    }

    // --- rendering ----------------------------------------------------------

    /// Coefficient vector (c_0..c_{e-1}) of a packed value.
    std::vector<unsigned> coeffs_of(unsigned a) const {
        std::vector<unsigned> c(e_);
        for (unsigned i = 0; i < e_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    }

    /// Prime-subfield elements print as digits, everything else as a power
    /// of the generator, matching the table syntax.
    std::string element_str(unsigned a) const {
        if (a < p_) return std::to_string(a);
        int k = dlog(a);
        if (k == 1) return "w";
        return "w^" + std::to_string(k);
    }

    /// `GF(p^e; modulus=<coeffs ascending>; w=<coeffs ascending>)`
    std::string describe() const {
        std::ostringstream os;
        os << "GF(" << p_ << "^" << e_ << "; modulus=";
        for (std::size_t i = 0; i < modulus_.size(); ++i) {
            if (i) os << ",";
            os << modulus_[i];
        }
        os << "; w=";
        auto c = coeffs_of(gen_);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ",";
            os << c[i];
        }
        os << ")";
        return os.str();
    }

    FieldElement element(unsigned value) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const;
    /// Integer constant reduced into the prime subfield.
    FieldElement scalar(long long k) const;
    std::vector<FieldElement> primitive_elements() const;

    bool same_field(const GaloisField& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

private:
    GaloisField(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus)
        : p_(p), e_(e) {
        if (p != 2 && p != 3) throw DomainError("characteristic must be 2 or 3");
        if (e == 0) throw DomainError("extension degree must be >= 1");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        if (q > 2048) throw DomainError("field size too large for table arithmetic");
        q_ = static_cast<unsigned>(q);

        if (modulus) {
            modulus_ = std::move(*modulus);
            if (modulus_.size() != e_ + 1 || modulus_.back() != 1)
                throw DomainError("modulus must be monic of degree e");
            for (unsigned c : modulus_)
                if (c >= p_) throw DomainError("modulus coefficient out of range");
            if (!detail::pirreducible(modulus_, p_)) throw DomainError("modulus is reducible");
            build_tables();
        } else {
            choose_default_modulus();
        }
    }

    unsigned root_value() const {
        // The class of x: for e >= 2 that is the packed value p; for e = 1
        // the root of x + c is -c.
        if (e_ >= 2) return p_;
        return (p_ - modulus_[0]) % p_;
    }

    unsigned slow_mul(unsigned a, unsigned b) const {
        auto ca = coeffs_of(a), cb = coeffs_of(b);
        detail::ptrim(ca);
        detail::ptrim(cb);
        auto c = detail::pmod(detail::pmul(ca, cb, p_), modulus_, p_);
        unsigned v = 0, mult = 1;
        for (unsigned x : c) {
            v += x * mult;
            mult *= p_;
        }
        return v;
    }

    unsigned slow_order(unsigned a) const {
        if (a == 0) return 0;
        unsigned ord = 1, x = a;
        while (x != 1) {
            x = slow_mul(x, a);
            ++ord;
            if (ord > q_) throw Error("order computation ran away");
        }
        return ord;
    }

    void choose_default_modulus() {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < e_; ++i) count *= p_;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<unsigned> m(e_ + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < e_; ++i) {
                m[i] = static_cast<unsigned>(c % p_);
                c /= p_;
            }
            m[e_] = 1;
            if (!detail::pirreducible(m, p_)) continue;
            modulus_ = m;
            if (slow_order(root_value()) == q_ - 1) {
                build_tables();
                return;
            }
        }
        throw Error("no primitive modulus found");  // unreachable for p in {2,3}
    }

    void build_tables() {
        unsigned root = root_value();
        gen_ = root;
        gen_is_root_ = true;
        if (slow_order(root) != q_ - 1) {
            gen_is_root_ = false;
            gen_ = 0;
            for (unsigned v = 1; v < q_; ++v) {
                if (slow_order(v) == q_ - 1) {
                    gen_ = v;
                    break;
                }
            }
            if (gen_ == 0) throw Error("no primitive element found");
        }

        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, 0);
        unsigned x = 1;
        for (unsigned k = 0; k < q_ - 1; ++k) {
            exp_[k] = x;
            exp_[k + (q_ - 1)] = x;
            log_[x] = k;
            x = slow_mul(x, gen_);
        }

        add_.assign(static_cast<std::size_t>(q_) * q_, 0);
        for (unsigned a = 0; a < q_; ++a) {
            auto ca = coeffs_of(a);
            for (unsigned b = 0; b < q_; ++b) {
                auto cb = coeffs_of(b);
                unsigned v = 0, mult = 1;
                for (unsigned i = 0; i < e_; ++i) {
                    v += ((ca[i] + cb[i]) % p_) * mult;
                    mult *= p_;
                }
                add_[static_cast<std::size_t>(a) * q_ + b] = v;
            }
        }
        neg_.assign(q_, 0);
        for (unsigned a = 0; a < q_; ++a) {
            auto ca = coeffs_of(a);
            unsigned v = 0, mult = 1;
            for (unsigned i = 0; i < e_; ++i) {
                v += ((p_ - ca[i]) % p_) * mult;
                mult *= p_;
            }
            neg_[a] = v;
        }

        trace_.assign(q_, 0);
        for (unsigned a = 0; a < q_; ++a) {
            unsigned t = 0, x2 = a;
            for (unsigned j = 0; j < e_; ++j) {
                t = add(t, x2);
                unsigned y = x2;
                for (unsigned i = 1; i < p_; ++i) y = mul(y, x2);  // x2^p
                x2 = y;
            }
            trace_[a] = t;  // lies in the prime subfield, packed value < p
        }
    }

    unsigned p_, e_, q_ = 0;
    std::vector<unsigned> modulus_;
    unsigned gen_ = 0;
    bool gen_is_root_ = true;
    std::vector<unsigned> exp_, neg_, add_, trace_;
    std::vector<unsigned> log_;
};

/// Immutable element of a GaloisField; value semantics.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, unsigned value) : field_(std::move(field)), value_(value) {
        if (value_ >= field_->size()) throw DomainError("element value out of range");
    }

    const FieldPtr& field() const { return field_; }
    unsigned value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        return {field_, field_->add(value_, o.value_)};
    }
    FieldElement operator-(const FieldElement& o) const {
        check(o);
        return {field_, field_->sub(value_, o.value_)};
    }
    FieldElement operator*(const FieldElement& o) const {
        check(o);
        return {field_, field_->mul(value_, o.value_)};
    }
    FieldElement operator/(const FieldElement& o) const {
        check(o);
        return {field_, field_->div(value_, o.value_)};
    }
    FieldElement operator-() const { return {field_, field_->neg(value_)}; }
    FieldElement inverse() const { return {field_, field_->inv(value_)}; }
    FieldElement pow(std::uint64_t k) const { return {field_, field_->pow(value_, k)}; }

    bool operator==(const FieldElement& o) const {
        return field_->same_field(*o.field_) && value_ == o.value_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    unsigned trace() const { return field_->trace(value_); }
    bool is_square() const { return field_->is_square(value_); }
    FieldElement sqrt() const { return {field_, field_->sqrt(value_)}; }

    std::string str() const { return field_->element_str(value_); }

private:
    void check(const FieldElement& o) const {
        if (!field_->same_field(*o.field_))
            throw DomainError("elements of different fields");
    }
    FieldPtr field_;
    unsigned value_ = 0;
};

inline FieldElement GaloisField::element(unsigned value) const {
    return FieldElement(shared_from_this(), value);
}
inline FieldElement GaloisField::zero() const { return element(0); }
inline FieldElement GaloisField::one() const { return element(1); }
inline FieldElement GaloisField::generator() const { return element(gen_); }
inline FieldElement GaloisField::scalar(long long k) const {
    long long r = k % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return element(static_cast<unsigned>(r));
}
inline std::vector<FieldElement> GaloisField::primitive_elements() const {
    std::vector<FieldElement> out;
    for (unsigned v : primitive_element_values()) out.push_back(element(v));
    return out;
}

}  // namespace quadext
