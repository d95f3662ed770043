#pragma once

#include <cstdint>

#include "quadext/place.hpp"

namespace quadext {

/// Arithmetic in the residue field F_q[x]/(pi) for a monic irreducible pi.
/// Elements are canonical Polynomial representatives of degree < deg(pi).
class ResidueField {
public:
    explicit ResidueField(Polynomial pi) : pi_(std::move(pi)), field_(pi_.field()) {
        if (!pi_.is_monic() || pi_.degree() < 1) throw DomainError("modulus must be monic");
    }

    const Polynomial& modulus() const { return pi_; }
    unsigned residue_degree() const { return static_cast<unsigned>(pi_.degree()); }

    /// |F_q[x]/(pi)| = q^deg(pi); throws if it does not fit in 64 bits.
    std::uint64_t size() const {
        std::uint64_t s = 1;
        for (unsigned i = 0; i < residue_degree(); ++i) {
            if (s > (UINT64_MAX >> 12)) throw DomainError("residue field too large");
            s *= field_->size();
        }
        return s;
    }

    Polynomial reduce(const Polynomial& a) const { return a % pi_; }
    Polynomial add(const Polynomial& a, const Polynomial& b) const { return (a + b) % pi_; }
    Polynomial mul(const Polynomial& a, const Polynomial& b) const { return (a * b) % pi_; }
    Polynomial pow(const Polynomial& a, std::uint64_t k) const { return powmod(a, k, pi_); }

    Polynomial inv(const Polynomial& a) const {
        if ((a % pi_).is_zero()) throw DomainError("inversion of zero residue");
        return residue_rep(RationalFunction(Polynomial::one(field_), a), pi_);
    }

    bool is_square(const Polynomial& a_in) const {
        if (field_->characteristic() == 2) return true;
        Polynomial a = reduce(a_in);
        if (a.is_zero()) return true;
        return pow(a, (size() - 1) / 2).is_one();
    }

    /// Square root of a residue.  In characteristic 2 this is the inverse
    /// Frobenius (a squaring chain); in odd characteristic Tonelli-Shanks.
    Polynomial sqrt(const Polynomial& a_in) const {
        Polynomial a = reduce(a_in);
        if (a.is_zero()) return a;
        if (field_->characteristic() == 2) {
            unsigned steps = field_->degree() * residue_degree();
            Polynomial s = a;
            for (unsigned i = 0; i + 1 < steps; ++i) s = mul(s, s);
            return s;
        }
        std::uint64_t Q = size();
        if (!is_square(a)) throw DomainError("sqrt of a non-square residue");
        if (Q % 4 == 3) return pow(a, (Q + 1) / 4);
        // Tonelli-Shanks: Q - 1 = t * 2^s with t odd
        std::uint64_t t = Q - 1;
        unsigned s = 0;
        while (t % 2 == 0) {
            t /= 2;
            ++s;
        }
        Polynomial z = Polynomial::zero(field_);
        for (std::uint64_t code = 1;; ++code) {
            // deterministic scan for a non-residue
            std::vector<unsigned> cs;
            std::uint64_t c = code;
            while (c) {
                cs.push_back(static_cast<unsigned>(c % field_->size()));
                c /= field_->size();
            }
            Polynomial cand(field_, cs);
            if (cand.degree() >= pi_.degree()) throw DomainError("no non-residue found");
            if (!cand.is_zero() && !is_square(cand)) {
                z = cand;
                break;
            }
        }
        Polynomial m_c = pow(z, t);
        Polynomial u = pow(a, t);
        Polynomial r = pow(a, (t + 1) / 2);
        unsigned m = s;
        while (!u.is_one()) {
            Polynomial u2 = u;
            unsigned i = 0;
            while (!u2.is_one()) {
                u2 = mul(u2, u2);
                ++i;
            }
            Polynomial b = m_c;
            for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
            m_c = mul(b, b);
            u = mul(u, m_c);
            r = mul(r, b);
            m = i;
        }
        return r;
    }

private:
    Polynomial pi_;
    FieldPtr field_;
};

}  // namespace quadext
